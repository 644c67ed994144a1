#pragma once

// States (smoothings) of a diagram and their cycles.
//
// Resolution convention: at a positive crossing the 0-resolution is the
// oriented reconnection and the 1-resolution the unoriented one; at a
// negative crossing it is the other way round. The oriented smoothing
// therefore sits at height 0.
//
// Cycles are traced on directed arc-ends. Arriving at a passage, the trace
// jumps to the partner passage of the same crossing; an oriented
// reconnection keeps the direction of travel, an unoriented one reverses it.

#include "vknot/error.hpp"
#include "vknot/gauss_code.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace vknot {

class Resolution {
public:
    Resolution() = default;
    explicit Resolution(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto b : bits_)
            if (b > 1) throw Error(ErrorKind::PartialResolution, "resolution entries must be 0 or 1");
    }

    static Resolution from_mask(std::size_t n, std::uint64_t mask) {
        std::vector<std::uint8_t> bits(n);
        for (std::size_t c = 0; c < n; ++c) bits[c] = static_cast<std::uint8_t>((mask >> c) & 1U);
        return Resolution(std::move(bits));
    }

    std::size_t size() const noexcept { return bits_.size(); }
    // Indexed by crossing (label - 1).
    int operator[](std::size_t c) const { return bits_.at(c); }
    int at_label(int label) const { return bits_.at(static_cast<std::size_t>(label - 1)); }
    std::size_t weight() const {
        std::size_t w = 0;
        for (auto b : bits_) w += b;
        return w;
    }
    Resolution flipped(std::size_t c) const {
        auto bits = bits_;
        bits.at(c) ^= 1U;
        return Resolution(std::move(bits));
    }
    std::uint64_t mask() const {
        std::uint64_t m = 0;
        for (std::size_t c = 0; c < bits_.size() && c < 64; ++c)
            if (bits_[c]) m |= std::uint64_t{1} << c;
        return m;
    }

    friend bool operator==(const Resolution&, const Resolution&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

inline int negative_crossings(const GaussCode& d) {
    int n = 0;
    for (std::size_t c = 0; c < d.num_crossings(); ++c) n += d.crossing_sign(c) < 0 ? 1 : 0;
    return n;
}

// True when resolution bit `bit` at crossing c is the oriented reconnection.
inline bool is_oriented_reconnection(const GaussCode& d, std::size_t c, int bit) {
    return (d.crossing_sign(c) > 0) == (bit == 0);
}

class State {
public:
    const Resolution& resolution() const noexcept { return resolution_; }
    std::size_t num_cycles() const noexcept { return num_cycles_; }
    int height() const noexcept { return height_; }

    // Cycle containing a global arc (GaussCode::num_arcs numbering).
    int cycle_of_arc(std::size_t arc) const { return cycle_of_arc_.at(arc); }
    // Cycle containing the arc that leaves flat passage p.
    int cycle_after(std::size_t p) const { return cycle_after_[p]; }
    // Global arc indices of each cycle.
    std::vector<std::vector<std::size_t>> cycles() const {
        std::vector<std::vector<std::size_t>> out(num_cycles_);
        for (std::size_t a = 0; a < cycle_of_arc_.size(); ++a) out[static_cast<std::size_t>(cycle_of_arc_[a])].push_back(a);
        return out;
    }

private:
    friend State trace_state(const GaussCode&, const Resolution&);
    Resolution resolution_;
    std::vector<int> cycle_of_arc_;
    std::vector<int> cycle_after_;
    std::size_t num_cycles_ = 0;
    int height_ = 0;
};

inline State trace_state(const GaussCode& d, const Resolution& r) {
    const std::size_t n = d.num_crossings();
    if (r.size() != n)
        throw Error(ErrorKind::PartialResolution, "resolution has " + std::to_string(r.size()) +
                                                      " entries for " + std::to_string(n) + " crossings");
    std::vector<std::uint8_t> oriented(n);
    for (std::size_t c = 0; c < n; ++c) oriented[c] = is_oriented_reconnection(d, c, r[c]) ? 1 : 0;
    auto crossing_at = [&](std::size_t p) { return static_cast<std::size_t>(d.passage(p).label - 1); };

    State s;
    s.resolution_ = r;
    s.height_ = static_cast<int>(r.weight()) - negative_crossings(d);
    s.cycle_after_.assign(d.num_passages(), -1);
    s.cycle_of_arc_.assign(d.num_arcs(), -1);
    int next_id = 0;
    for (std::size_t k = 0; k < d.num_components(); ++k) {
        const auto& comp = d.components()[k];
        if (comp.empty()) {
            s.cycle_of_arc_[d.arc_index(k, 0)] = next_id++;
            continue;
        }
        for (std::size_t i = 0; i < comp.size(); ++i) {
            std::size_t start = d.component_offset(k) + i;
            if (s.cycle_after_[start] >= 0) continue;
            const int id = next_id++;
            std::size_t arc = start;
            bool forward = true;
            while (s.cycle_after_[arc] < 0) {
                s.cycle_after_[arc] = id;
                // Passage reached at the end of this stretch of travel.
                std::size_t q = forward ? d.next(arc) : arc;
                std::size_t partner = d.partner(q);
                bool keep = oriented[crossing_at(q)] != 0;
                // Incoming + oriented or outgoing + unoriented leaves partner forward.
                if (forward == keep) {
                    arc = partner;
                    forward = true;
                } else {
                    arc = d.prev(partner);
                    forward = false;
                }
            }
        }
    }
    for (std::size_t p = 0; p < d.num_passages(); ++p) {
        std::size_t k = d.component_of(p);
        s.cycle_of_arc_[d.arc_index(k, p - d.component_offset(k))] = s.cycle_after_[p];
    }
    s.num_cycles_ = static_cast<std::size_t>(next_id);
    return s;
}

// Resolution with every crossing at its oriented reconnection (height 0).
inline Resolution oriented_resolution(const GaussCode& d) {
    std::vector<std::uint8_t> bits(d.num_crossings());
    for (std::size_t c = 0; c < bits.size(); ++c) bits[c] = d.crossing_sign(c) > 0 ? 0 : 1;
    return Resolution(std::move(bits));
}

inline State oriented_smoothing(const GaussCode& d) { return trace_state(d, oriented_resolution(d)); }

// Even crossings oriented, odd crossings unoriented. Its height equals the odd writhe.
inline Resolution alternately_coloured_resolution(const GaussCode& d) {
    require_knot(d, "alternately_coloured_smoothing");
    std::vector<std::uint8_t> bits(d.num_crossings());
    for (const auto& info : crossing_parities(d)) {
        bool positive = info.sign > 0;
        bool odd = info.parity == Parity::Odd;
        bits[static_cast<std::size_t>(info.label - 1)] = (positive == odd) ? 1 : 0;
    }
    return Resolution(std::move(bits));
}

inline State alternately_coloured_smoothing(const GaussCode& d) {
    return trace_state(d, alternately_coloured_resolution(d));
}

// The cycles meeting the smoothing site of crossing c (one or two distinct ids).
struct SiteCycles {
    int first = -1;
    int second = -1;
    bool single() const { return first == second; }
};

inline SiteCycles site_cycles(const GaussCode& d, const State& s, std::size_t c) {
    std::size_t a = d.over_position(c);
    std::size_t b = d.under_position(c);
    int x = s.cycle_after(d.prev(a));
    SiteCycles out{x, x};
    for (std::size_t arc : {a, d.prev(b), b}) {
        int y = s.cycle_after(arc);
        if (y != x) out.second = y;
    }
    return out;
}

enum class EdgeType { Merge, Split, SingleCycle };

inline EdgeType classify_by_counts(std::size_t before, std::size_t after) {
    if (after == before + 1) return EdgeType::Split;
    if (after + 1 == before) return EdgeType::Merge;
    return EdgeType::SingleCycle;
}

inline EdgeType classify_edge(const GaussCode& d, const Resolution& r, int label) {
    if (label < 1 || static_cast<std::size_t>(label) > d.num_crossings())
        throw Error(ErrorKind::PartialResolution, "no crossing labelled " + std::to_string(label));
    auto c = static_cast<std::size_t>(label - 1);
    if (r.size() != d.num_crossings())
        throw Error(ErrorKind::PartialResolution, "resolution does not cover every crossing");
    if (r[c] != 0) throw Error(ErrorKind::EdgeNotOutgoing, "crossing " + std::to_string(label) + " is already 1");
    auto before = trace_state(d, r).num_cycles();
    auto after = trace_state(d, r.flipped(c)).num_cycles();
    return classify_by_counts(before, after);
}

// Write-once memo of states indexed by resolution bitmask.
class StateCube {
public:
    static constexpr std::size_t max_crossings = 30;

    explicit StateCube(const GaussCode& d) : code_(d) {
        if (d.num_crossings() > max_crossings)
            throw Error(ErrorKind::SizeLimitExceeded, "cube enumeration limited to 30 crossings");
        states_.resize(std::size_t{1} << d.num_crossings());
    }

    std::size_t dimension() const noexcept { return code_.num_crossings(); }
    std::size_t size() const noexcept { return states_.size(); }

    const State& at(std::uint64_t mask) {
        auto& slot = states_.at(mask);
        if (!slot) slot = std::make_unique<State>(trace_state(code_, Resolution::from_mask(dimension(), mask)));
        return *slot;
    }

    EdgeType edge_type(std::uint64_t mask, std::size_t c) {
        if ((mask >> c) & 1U) throw Error(ErrorKind::EdgeNotOutgoing, "edge must leave a 0-resolution");
        return classify_by_counts(at(mask).num_cycles(), at(mask | (std::uint64_t{1} << c)).num_cycles());
    }

    const GaussCode& code() const noexcept { return code_; }

private:
    GaussCode code_;
    std::vector<std::unique_ptr<State>> states_;
};

}  // namespace vknot
