#pragma once

// Slice-Bennequin type bounds for the virtual (s) and doubled (s1, s2)
// Rasmussen invariants, and the resulting slice genus estimate.

#include "vknot/cobordism.hpp"
#include "vknot/gauss_code.hpp"
#include "vknot/graphs.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vknot {

struct Interval {
    long lo = 0;
    long hi = 0;

    bool empty() const { return lo > hi; }
    bool degenerate() const { return lo == hi; }
    bool contains(long x) const { return lo <= x && x <= hi; }
    long min_abs() const {
        if (contains(0)) return 0;
        return std::min(std::labs(lo), std::labs(hi));
    }

    friend bool operator==(const Interval&, const Interval&) = default;
    // Minkowski sum.
    friend Interval operator+(Interval a, Interval b) { return {a.lo + b.lo, a.hi + b.hi}; }
};

inline Interval intersect(Interval a, Interval b) { return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }

inline std::string to_string(Interval i) {
    if (i.degenerate()) return std::to_string(i.lo);
    return "[" + std::to_string(i.lo) + ", " + std::to_string(i.hi) + "]";
}

struct BoundsReport {
    long u_v = 0;
    long delta_v = 0;
    long u_d = 0;
    long delta_d = 0;
    long j = 0;  // odd writhe = s2
    long writhe = 0;
    Interval s_interval;
    Interval s1_interval;
    bool l_hom = false;
    bool d_hom = false;
    long n_o_plus = 0;
    long n_o_minus = 0;
    std::size_t crossings = 0;
};

// U_v = V(T_O) - 2 comp(T_O^-) + wr + 1,  Delta_v = V(T_O) - comp(T_O^+) - comp(T_O^-) + 1.
inline std::pair<long, long> u_v_delta_v(const GaussCode& d) {
    require_knot(d, "u_v_delta_v");
    auto g = build_T_O(d);
    auto v = static_cast<long>(g.num_vertices);
    auto minus = static_cast<long>(subgraph_components(g, [](EdgeLabel l) { return l.sign < 0; }));
    auto plus = static_cast<long>(subgraph_components(g, [](EdgeLabel l) { return l.sign > 0; }));
    return {v - 2 * minus + writhe(d) + 1, v - plus - minus + 1};
}

struct OddCounts {
    long plus = 0;
    long minus = 0;
};

inline OddCounts odd_crossing_counts(const GaussCode& d) {
    OddCounts out;
    for (const auto& info : crossing_parities(d))
        if (info.parity == Parity::Odd) (info.sign > 0 ? out.plus : out.minus) += 1;
    return out;
}

// The counterclockwise subgraph keeps (e,-) and (o,+); the clockwise one keeps (e,+) and (o,-).
// U_d = V(T_S) - 2 comp(ccw) + wr + J + n^o_+ + 1
// Delta_d = 2 (V(T_S) - comp(ccw) - comp(cw) + 1) + n^o_+ + n^o_-
inline std::pair<long, long> u_d_delta_d(const GaussCode& d) {
    require_knot(d, "u_d_delta_d");
    auto g = build_T_S(d);
    auto v = static_cast<long>(g.num_vertices);
    auto ccw = static_cast<long>(subgraph_components(g, [](EdgeLabel l) { return doubled_sign(l) < 0; }));
    auto cw = static_cast<long>(subgraph_components(g, [](EdgeLabel l) { return doubled_sign(l) > 0; }));
    auto odd = odd_crossing_counts(d);
    long u = v - 2 * ccw + writhe(d) + odd_writhe(d) + odd.plus + 1;
    long delta = 2 * (v - ccw - cw + 1) + odd.plus + odd.minus;
    return {u, delta};
}

inline Interval s_interval(const GaussCode& d) {
    auto [u, delta] = u_v_delta_v(d);
    return {u - 2 * delta, u};
}

inline Interval s1_interval(const GaussCode& d) {
    auto [u, delta] = u_d_delta_d(d);
    return {u - delta, u};
}

inline long s2(const GaussCode& d) { return odd_writhe(d); }

inline BoundsReport compute_bounds(const GaussCode& d) {
    require_knot(d, "compute_bounds");
    BoundsReport r;
    std::tie(r.u_v, r.delta_v) = u_v_delta_v(d);
    std::tie(r.u_d, r.delta_d) = u_d_delta_d(d);
    r.j = odd_writhe(d);
    r.writhe = writhe(d);
    r.s_interval = {r.u_v - 2 * r.delta_v, r.u_v};
    r.s1_interval = {r.u_d - r.delta_d, r.u_d};
    r.l_hom = is_l_homogeneous(d);
    r.d_hom = is_d_homogeneous(d);
    auto odd = odd_crossing_counts(d);
    r.n_o_plus = odd.plus;
    r.n_o_minus = odd.minus;
    r.crossings = d.num_crossings();
    return r;
}

// s of a connect sum is the sum of the summands' s, so the intervals add.
inline Interval connect_sum_s(const GaussCode& a, const GaussCode& b) { return s_interval(a) + s_interval(b); }

// ---------------------------------------------------------------------------
// Slice genus

enum class GenusStatus { Determined, Interval, Unknown };

inline std::string to_string(GenusStatus s) {
    switch (s) {
    case GenusStatus::Determined: return "Determined";
    case GenusStatus::Interval: return "Interval";
    case GenusStatus::Unknown: return "Unknown";
    }
    return "Unknown";
}

struct GenusReport {
    long lower = 0;
    std::optional<long> upper;
    GenusStatus status = GenusStatus::Unknown;
    std::vector<std::string> provenance;
};

struct UpperBound {
    long genus = 0;
    std::string source;
};

// Lower bound: |s| <= 2 g*, and g* >= 1 whenever s2 != 0 or (s2 = 0 and s1 != 0).
// Upper bound: the smallest of the supplied candidates.
inline GenusReport estimate_genus(Interval s, Interval s1, long s2_value, std::span<const UpperBound> uppers) {
    GenusReport g;
    long from_s = (s.min_abs() + 1) / 2;
    if (from_s > 0) {
        g.lower = from_s;
        g.provenance.push_back("|s| <= 2g*");
    }
    if (s2_value != 0) {
        g.lower = std::max(g.lower, 1L);
        g.provenance.push_back("s2 != 0");
    } else if (!s1.contains(0)) {
        g.lower = std::max(g.lower, 1L);
        g.provenance.push_back("s1 != 0");
    }
    const UpperBound* best = nullptr;
    for (const auto& u : uppers)
        if (!best || u.genus < best->genus) best = &u;
    if (best) {
        g.upper = best->genus;
        g.provenance.push_back(best->source);
    }
    if (!g.upper)
        g.status = GenusStatus::Unknown;
    else
        g.status = *g.upper == g.lower ? GenusStatus::Determined : GenusStatus::Interval;
    return g;
}

inline GenusReport genus_bounds(const GaussCode& d, std::span<const Certificate> certificates = {}) {
    auto r = compute_bounds(d);
    std::vector<UpperBound> uppers{{static_cast<long>(d.num_crossings() / 2), "crossings/2"}};
    for (const auto& cert : certificates) uppers.push_back({verify(cert).genus, "certificate"});
    return estimate_genus(r.s_interval, r.s1_interval, r.j, uppers);
}

}  // namespace vknot
