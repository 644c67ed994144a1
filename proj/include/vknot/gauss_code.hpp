#pragma once

// Signed Gauss codes for virtual knot and link diagrams.
//
// A code is a list of components, each a cyclic word of passages
// ("O3+" = over-passage of crossing 3, positive crossing). Virtual
// crossings carry no data, so a code determines the diagram up to
// virtual Reidemeister moves.
//
// Grammar:
//   code      := component ("/" component)*
//   component := passage*
//   passage   := ("O"|"U") INT ("+"|"-")
// Whitespace is ignored on input and never emitted.

#include "vknot/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vknot {

enum class Role : std::uint8_t { Over, Under };
enum class Parity : std::uint8_t { Even, Odd };

constexpr Role opposite(Role r) { return r == Role::Over ? Role::Under : Role::Over; }

struct Passage {
    int label = 0;
    Role role = Role::Over;
    int sign = +1;

    friend bool operator==(const Passage&, const Passage&) = default;
};

using Component = std::vector<Passage>;

struct ArcLocation {
    std::size_t component = 0;
    // Local index of the passage the arc leaves; 0 for a crossing-free component.
    std::size_t local = 0;
};

class GaussCode {
public:
    // The crossing-free unknot: one empty component.
    GaussCode() : GaussCode(std::vector<Component>{Component{}}) {}

    // Validates and relabels crossings 1..n in order of first appearance.
    explicit GaussCode(std::vector<Component> components) : comps_(std::move(components)) {
        validate_and_canonicalize();
        build_index();
    }

    const std::vector<Component>& components() const noexcept { return comps_; }
    std::size_t num_components() const noexcept { return comps_.size(); }
    std::size_t num_crossings() const noexcept { return over_pos_.size(); }
    std::size_t num_passages() const noexcept { return label_.size(); }
    bool is_knot() const noexcept { return comps_.size() == 1; }
    std::size_t num_empty_components() const noexcept { return empty_components_; }

    // Flat passage indexing in serialization order.
    std::size_t component_of(std::size_t p) const { return comp_of_[p]; }
    std::size_t component_offset(std::size_t k) const { return offset_[k]; }
    std::size_t next(std::size_t p) const { return next_[p]; }
    std::size_t prev(std::size_t p) const { return prev_[p]; }
    std::size_t partner(std::size_t p) const { return partner_[p]; }
    const Passage& passage(std::size_t p) const { return comps_[comp_of_[p]][p - offset_[comp_of_[p]]]; }

    // Crossings are indexed 0..n-1 (label - 1).
    std::size_t over_position(std::size_t c) const { return over_pos_[c]; }
    std::size_t under_position(std::size_t c) const { return under_pos_[c]; }
    int crossing_sign(std::size_t c) const { return passage(over_pos_[c]).sign; }

    // Arcs: one after every passage of a nonempty component, one per empty component.
    std::size_t num_arcs() const noexcept { return arc_offset_.empty() ? 0 : arc_offset_.back(); }
    ArcLocation arc_location(std::size_t arc) const {
        if (arc >= num_arcs())
            throw Error(ErrorKind::SiteOutOfRange, "arc " + std::to_string(arc) + " out of range");
        auto it = std::upper_bound(arc_offset_.begin(), arc_offset_.end(), arc);
        std::size_t k = static_cast<std::size_t>(it - arc_offset_.begin()) - 1;
        return {k, arc - arc_offset_[k]};
    }
    std::size_t arc_index(std::size_t component, std::size_t local) const { return arc_offset_[component] + local; }

    friend bool operator==(const GaussCode& a, const GaussCode& b) { return a.comps_ == b.comps_; }

private:
    void validate_and_canonicalize() {
        struct Seen {
            int count = 0;
            int overs = 0;
            int sign = 0;
        };
        std::map<int, Seen> seen;
        for (const auto& comp : comps_) {
            for (const auto& p : comp) {
                if (p.label <= 0)
                    throw Error(ErrorKind::MalformedToken, "crossing labels must be positive");
                if (p.sign != 1 && p.sign != -1)
                    throw Error(ErrorKind::MalformedToken, "crossing sign must be +1 or -1");
                auto& s = seen[p.label];
                if (s.count > 0 && s.sign != p.sign)
                    throw Error(ErrorKind::SignConflict, "crossing " + std::to_string(p.label) + " has two signs");
                s.sign = p.sign;
                ++s.count;
                s.overs += p.role == Role::Over ? 1 : 0;
            }
        }
        for (const auto& [label, s] : seen) {
            if (s.count != 2)
                throw Error(ErrorKind::LabelCountMismatch,
                            "crossing " + std::to_string(label) + " appears " + std::to_string(s.count) + " times");
            if (s.overs != 1)
                throw Error(ErrorKind::RoleConflict,
                            "crossing " + std::to_string(label) + (s.overs == 2 ? " is over twice" : " is under twice"));
        }
        std::map<int, int> relabel;
        for (auto& comp : comps_)
            for (auto& p : comp) {
                auto [it, inserted] = relabel.try_emplace(p.label, static_cast<int>(relabel.size()) + 1);
                p.label = it->second;
            }
    }

    void build_index() {
        std::size_t total = 0;
        for (const auto& comp : comps_) total += comp.size();
        label_.resize(total);
        comp_of_.resize(total);
        next_.resize(total);
        prev_.resize(total);
        partner_.assign(total, 0);
        over_pos_.assign(total / 2, 0);
        under_pos_.assign(total / 2, 0);
        offset_.clear();
        arc_offset_.assign(1, 0);
        empty_components_ = 0;
        std::size_t p = 0;
        for (std::size_t k = 0; k < comps_.size(); ++k) {
            const auto& comp = comps_[k];
            offset_.push_back(p);
            arc_offset_.push_back(arc_offset_.back() + std::max<std::size_t>(comp.size(), 1));
            if (comp.empty()) ++empty_components_;
            for (std::size_t i = 0; i < comp.size(); ++i, ++p) {
                label_[p] = comp[i].label;
                comp_of_[p] = k;
                next_[p] = offset_[k] + (i + 1) % comp.size();
                prev_[p] = offset_[k] + (i + comp.size() - 1) % comp.size();
                auto c = static_cast<std::size_t>(comp[i].label - 1);
                (comp[i].role == Role::Over ? over_pos_ : under_pos_)[c] = p;
            }
        }
        for (std::size_t c = 0; c < over_pos_.size(); ++c) {
            partner_[over_pos_[c]] = under_pos_[c];
            partner_[under_pos_[c]] = over_pos_[c];
        }
    }

    std::vector<Component> comps_;
    std::vector<int> label_;
    std::vector<std::size_t> comp_of_, next_, prev_, partner_;
    std::vector<std::size_t> over_pos_, under_pos_;
    std::vector<std::size_t> offset_, arc_offset_;
    std::size_t empty_components_ = 0;
};

// ---------------------------------------------------------------------------
// Text format

inline GaussCode parse(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);

    std::vector<Component> comps(1);
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::MalformedToken, why + " at offset " + std::to_string(i));
    };
    while (i < s.size()) {
        char ch = s[i];
        if (ch == '/') {
            comps.emplace_back();
            ++i;
            continue;
        }
        if (ch != 'O' && ch != 'U') fail(std::string("unexpected '") + ch + "'");
        Passage p;
        p.role = ch == 'O' ? Role::Over : Role::Under;
        ++i;
        std::size_t start = i;
        long value = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            value = value * 10 + (s[i] - '0');
            if (value > 1'000'000'000) fail("crossing label too large");
            ++i;
        }
        if (i == start) fail("missing crossing label");
        if (value == 0) fail("crossing label must be positive");
        if (i >= s.size() || (s[i] != '+' && s[i] != '-')) fail("missing crossing sign");
        p.label = static_cast<int>(value);
        p.sign = s[i] == '+' ? 1 : -1;
        ++i;
        comps.back().push_back(p);
    }
    return GaussCode(std::move(comps));
}

inline std::string to_string(const GaussCode& d) {
    std::string out;
    for (std::size_t k = 0; k < d.num_components(); ++k) {
        if (k > 0) out.push_back('/');
        for (const auto& p : d.components()[k]) {
            out.push_back(p.role == Role::Over ? 'O' : 'U');
            out += std::to_string(p.label);
            out.push_back(p.sign > 0 ? '+' : '-');
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Numerical invariants

inline int writhe(const GaussCode& d) {
    int w = 0;
    for (std::size_t c = 0; c < d.num_crossings(); ++c) w += d.crossing_sign(c);
    return w;
}

inline void require_knot(const GaussCode& d, std::string_view what) {
    if (!d.is_knot())
        throw Error(ErrorKind::NotAKnot, std::string(what) + " requires a one-component code");
}

struct CrossingInfo {
    int label = 0;
    int sign = 0;
    Parity parity = Parity::Even;
    std::size_t first = 0;   // flat position of the earlier passage
    std::size_t second = 0;  // flat position of the later passage
    // True for a crossing between two different components. Parity for such
    // crossings is not defined for knots; they are reported Even.
    bool mixed = false;
};

// A chord is odd when an odd number of passages lie strictly between its two
// endpoints. For link codes a self-crossing uses the same count within its own
// component (experimental).
inline std::vector<CrossingInfo> crossing_parities(const GaussCode& d) {
    std::vector<CrossingInfo> out;
    out.reserve(d.num_crossings());
    for (std::size_t c = 0; c < d.num_crossings(); ++c) {
        std::size_t a = d.over_position(c), b = d.under_position(c);
        CrossingInfo info;
        info.label = static_cast<int>(c) + 1;
        info.sign = d.crossing_sign(c);
        info.first = std::min(a, b);
        info.second = std::max(a, b);
        info.mixed = d.component_of(a) != d.component_of(b);
        if (!info.mixed && (info.second - info.first - 1) % 2 == 1) info.parity = Parity::Odd;
        out.push_back(info);
    }
    return out;
}

inline bool is_even_diagram(const GaussCode& d) {
    auto infos = crossing_parities(d);
    return std::all_of(infos.begin(), infos.end(), [](const CrossingInfo& i) { return i.parity == Parity::Even; });
}

// Signed count of odd crossings.
inline int odd_writhe(const GaussCode& d) {
    require_knot(d, "odd_writhe");
    int j = 0;
    for (const auto& info : crossing_parities(d))
        if (info.parity == Parity::Odd) j += info.sign;
    return j;
}

// ---------------------------------------------------------------------------
// Transformations

inline GaussCode mirror(const GaussCode& d) {
    auto comps = d.components();
    for (auto& comp : comps)
        for (auto& p : comp) {
            p.sign = -p.sign;
            p.role = opposite(p.role);
        }
    return GaussCode(std::move(comps));
}

// Rotates one component so that it starts at local passage `start`.
inline GaussCode rotate(const GaussCode& d, std::size_t component, std::size_t start) {
    auto comps = d.components();
    auto& comp = comps.at(component);
    if (!comp.empty()) std::rotate(comp.begin(), comp.begin() + static_cast<long>(start % comp.size()), comp.end());
    return GaussCode(std::move(comps));
}

// Splices b (cut at its arc site_b) into a at arc site_a. Labels of b are
// shifted past those of a before canonical relabeling.
inline GaussCode connect_sum(const GaussCode& a, const GaussCode& b, std::size_t site_a, std::size_t site_b) {
    require_knot(a, "connect_sum");
    require_knot(b, "connect_sum");
    auto loc_a = a.arc_location(site_a);
    auto loc_b = b.arc_location(site_b);
    const auto& wa = a.components()[0];
    const auto& wb = b.components()[0];
    int shift = static_cast<int>(a.num_crossings());
    Component out;
    out.reserve(wa.size() + wb.size());
    std::size_t cut_a = wa.empty() ? 0 : loc_a.local + 1;
    out.insert(out.end(), wa.begin(), wa.begin() + static_cast<long>(cut_a));
    for (std::size_t i = 0; i < wb.size(); ++i) {
        Passage p = wb[(loc_b.local + 1 + i) % wb.size()];
        p.label += shift;
        out.push_back(p);
    }
    out.insert(out.end(), wa.begin() + static_cast<long>(cut_a), wa.end());
    return GaussCode(std::vector<Component>{std::move(out)});
}

// Equality up to independent cyclic rotation of each component.
inline bool equivalent_up_to_rotation(const GaussCode& a, const GaussCode& b) {
    if (a.num_components() != b.num_components() || a.num_crossings() != b.num_crossings()) return false;
    const auto& ca = a.components();
    const auto& cb = b.components();
    for (std::size_t k = 0; k < ca.size(); ++k)
        if (ca[k].size() != cb[k].size()) return false;

    // Depth-first over rotations of b's components with a consistent label map.
    std::vector<int> map(a.num_crossings() + 1, 0), back(b.num_crossings() + 1, 0);
    std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
        if (k == ca.size()) return true;
        const auto& wa = ca[k];
        const auto& wb = cb[k];
        if (wa.empty()) return search(k + 1);
        for (std::size_t r = 0; r < wb.size(); ++r) {
            std::vector<int> added;
            bool ok = true;
            for (std::size_t i = 0; i < wa.size() && ok; ++i) {
                const auto& pa = wa[i];
                const auto& pb = wb[(i + r) % wb.size()];
                if (pa.role != pb.role || pa.sign != pb.sign) {
                    ok = false;
                } else if (map[pa.label] == 0 && back[pb.label] == 0) {
                    map[pa.label] = pb.label;
                    back[pb.label] = pa.label;
                    added.push_back(pa.label);
                } else if (map[pa.label] != pb.label) {
                    ok = false;
                }
            }
            if (ok && search(k + 1)) return true;
            for (int l : added) {
                back[map[l]] = 0;
                map[l] = 0;
            }
        }
        return false;
    };
    return search(0);
}

}  // namespace vknot
