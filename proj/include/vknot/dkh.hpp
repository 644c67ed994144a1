#pragma once

// Unperturbed doubled Khovanov complex over Q.
//
// A state with j cycles carries A^{(x)j} (+) A^{(x)j}{-1}: an upper and a
// lower copy of the usual Khovanov module. Merge and split edges act by the
// usual m and Delta inside each copy. A single-cycle edge acts by eta:
//   eta(v+^u) = v+^l,  eta(v-^u) = v-^l,  eta(v+^l) = 2 v-^u,  eta(v-^l) = 0.
//
// Gradings: i = (#1-resolutions) - n_-, and
//   q = #v+ - #v- + (#1-resolutions) + n_+ - 2 n_-, minus 1 on the lower copy.
// Edge signs are (-1)^(number of 1s before the flipped crossing).

#include "vknot/error.hpp"
#include "vknot/gauss_code.hpp"
#include "vknot/sparse_rank.hpp"
#include "vknot/states.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace vknot {

struct Generator {
    std::uint64_t state = 0;   // resolution bitmask
    std::uint32_t labels = 0;  // bit k set: cycle k carries v-
    bool lower = false;
    int q = 0;
};

struct ChainComplex {
    int min_degree = 0;
    std::vector<std::vector<Generator>> groups;  // groups[k] sits in degree min_degree + k
    std::vector<SparseMatrix> differentials;     // differentials[k]: groups[k] -> groups[k+1]
    std::size_t merge_edges = 0;
    std::size_t split_edges = 0;
    std::size_t single_cycle_edges = 0;

    int max_degree() const { return min_degree + static_cast<int>(groups.size()) - 1; }
    std::size_t dimension() const {
        std::size_t n = 0;
        for (const auto& g : groups) n += g.size();
        return n;
    }
};

struct BuildOptions {
    std::size_t max_crossings = 10;
    bool eta = true;          // false replaces eta by zero (not a complex in general)
    bool upper_only = false;  // keep only the upper copy (a subcomplex when there are no eta edges)
};

inline ChainComplex build_complex(const GaussCode& d, const BuildOptions& opts = {}) {
    const std::size_t n = d.num_crossings();
    if (n > opts.max_crossings)
        throw Error(ErrorKind::SizeLimitExceeded, std::to_string(n) + " crossings exceed the limit of " +
                                                      std::to_string(opts.max_crossings));
    const int n_minus = negative_crossings(d);
    const int n_plus = static_cast<int>(n) - n_minus;
    const std::uint64_t num_states = std::uint64_t{1} << n;
    StateCube cube(d);

    ChainComplex cx;
    cx.min_degree = -n_minus;
    cx.groups.resize(n + 1);
    const std::size_t copies = opts.upper_only ? 1 : 2;
    std::vector<std::size_t> offset(num_states);
    for (std::uint64_t s = 0; s < num_states; ++s) {
        const auto& st = cube.at(s);
        const int weight = std::popcount(s);
        const std::size_t j = st.num_cycles();
        auto& group = cx.groups[static_cast<std::size_t>(weight)];
        offset[s] = group.size();
        for (std::size_t lower = 0; lower < copies; ++lower)
            for (std::uint32_t labels = 0; labels < (std::uint32_t{1} << j); ++labels) {
                int q = static_cast<int>(j) - 2 * std::popcount(labels) + weight + n_plus - 2 * n_minus -
                        static_cast<int>(lower);
                group.push_back({s, labels, lower == 1, q});
            }
    }
    for (std::size_t k = 0; k < n; ++k) cx.differentials.emplace_back(cx.groups[k + 1].size(), cx.groups[k].size());

    for (std::uint64_t s = 0; s < num_states; ++s) {
        const State& src = cube.at(s);
        const std::size_t js = src.num_cycles();
        const std::size_t weight = static_cast<std::size_t>(std::popcount(s));
        // One representative arc per source cycle.
        std::vector<std::size_t> rep(js, 0);
        {
            std::vector<bool> seen(js, false);
            for (std::size_t a = 0; a < d.num_arcs(); ++a) {
                auto c = static_cast<std::size_t>(src.cycle_of_arc(a));
                if (!seen[c]) {
                    seen[c] = true;
                    rep[c] = a;
                }
            }
        }
        for (std::size_t c = 0; c < n; ++c) {
            if ((s >> c) & 1U) continue;
            const std::uint64_t t = s | (std::uint64_t{1} << c);
            const State& dst = cube.at(t);
            const std::size_t jt = dst.num_cycles();
            const std::int64_t sign = (std::popcount(s & ((std::uint64_t{1} << c) - 1)) % 2) ? -1 : 1;
            const auto site_src = site_cycles(d, src, c);
            const auto site_dst = site_cycles(d, dst, c);
            const EdgeType type = classify_by_counts(js, jt);
            switch (type) {
            case EdgeType::Merge: ++cx.merge_edges; break;
            case EdgeType::Split: ++cx.split_edges; break;
            case EdgeType::SingleCycle: ++cx.single_cycle_edges; break;
            }
            // Non-site cycles map by arc membership.
            std::vector<int> image(js, -1);
            for (std::size_t k = 0; k < js; ++k)
                if (static_cast<int>(k) != site_src.first && static_cast<int>(k) != site_src.second)
                    image[k] = dst.cycle_of_arc(rep[k]);

            auto& dm = cx.differentials[weight];
            const std::size_t src_off = offset[s], dst_off = offset[t];
            const std::uint32_t src_count = std::uint32_t{1} << js;
            const std::uint32_t dst_count = std::uint32_t{1} << jt;
            for (std::size_t lower = 0; lower < copies; ++lower)
                for (std::uint32_t labels = 0; labels < src_count; ++labels) {
                    std::uint32_t base = 0;
                    for (std::size_t k = 0; k < js; ++k)
                        if (image[k] >= 0 && ((labels >> k) & 1U)) base |= std::uint32_t{1} << image[k];
                    const std::size_t col = src_off + lower * src_count + labels;
                    auto emit = [&](std::uint32_t target_labels, bool target_lower, std::int64_t coef) {
                        if (opts.upper_only && target_lower) return;
                        std::size_t row = dst_off + (target_lower ? dst_count : 0) + target_labels;
                        dm.add(row, col, sign * coef);
                    };
                    auto bit = [&](int cycle) { return (labels >> cycle) & 1U; };
                    auto set = [](int cycle) { return std::uint32_t{1} << cycle; };
                    if (type == EdgeType::Merge) {
                        auto minus = bit(site_src.first) + bit(site_src.second);
                        if (minus == 0) emit(base, lower, 1);
                        else if (minus == 1) emit(base | set(site_dst.first), lower, 1);
                    } else if (type == EdgeType::Split) {
                        if (bit(site_src.first) == 0) {
                            emit(base | set(site_dst.second), lower, 1);
                            emit(base | set(site_dst.first), lower, 1);
                        } else {
                            emit(base | set(site_dst.first) | set(site_dst.second), lower, 1);
                        }
                    } else if (opts.eta) {
                        auto b = bit(site_src.first);
                        if (!lower) emit(base | (b ? set(site_dst.first) : 0), true, 1);
                        else if (b == 0) emit(base | set(site_dst.first), false, 2);
                    }
                }
        }
    }
    for (auto& dm : cx.differentials) dm.compress();
    return cx;
}

// True iff every composite d_{k+1} d_k vanishes.
inline bool verify_d_squared(const ChainComplex& cx) {
    for (std::size_t k = 0; k + 1 < cx.differentials.size(); ++k) {
        const auto& first = cx.differentials[k];
        const auto& second = cx.differentials[k + 1];
        for (std::size_t col = 0; col < first.cols(); ++col) {
            std::map<std::uint32_t, std::int64_t> acc;
            for (const auto& mid : first.column(col))
                for (const auto& e : second.column(mid.row)) acc[e.row] += mid.value * e.value;
            for (const auto& [row, v] : acc)
                if (v != 0) return false;
        }
    }
    return true;
}

// Bigraded ranks over Q, keyed by (i, q).
using RankTable = std::map<std::pair<int, int>, long>;

inline RankTable homology(const ChainComplex& cx) {
    if (!verify_d_squared(cx)) throw Error(ErrorKind::NotAComplex, "differential does not square to zero");
    const std::size_t len = cx.groups.size();
    // rank of the differential leaving group k, restricted to quantum grading q
    std::vector<std::map<int, std::size_t>> out_rank(len);
    std::vector<std::map<int, std::size_t>> dims(len);
    for (std::size_t k = 0; k < len; ++k) {
        std::map<int, std::vector<std::size_t>> by_q;
        for (std::size_t g = 0; g < cx.groups[k].size(); ++g) by_q[cx.groups[k][g].q].push_back(g);
        for (auto& [q, cols] : by_q) {
            dims[k][q] = cols.size();
            if (k < cx.differentials.size()) out_rank[k][q] = rank_over_rationals(cx.differentials[k], cols);
        }
    }
    RankTable table;
    for (std::size_t k = 0; k < len; ++k)
        for (const auto& [q, dim] : dims[k]) {
            long r = static_cast<long>(dim);
            if (auto it = out_rank[k].find(q); it != out_rank[k].end()) r -= static_cast<long>(it->second);
            if (k > 0)
                if (auto it = out_rank[k - 1].find(q); it != out_rank[k - 1].end()) r -= static_cast<long>(it->second);
            if (r != 0) table[{cx.min_degree + static_cast<int>(k), q}] = r;
        }
    return table;
}

inline RankTable dkh_ranks(const GaussCode& d, std::size_t max_crossings = 10) {
    BuildOptions opts;
    opts.max_crossings = max_crossings;
    return homology(build_complex(d, opts));
}

// For an even diagram: the cube has no single-cycle edges and the ranks
// split as upper (+) upper{-1}.
inline bool even_split_check(const GaussCode& d, std::size_t max_crossings = 10) {
    if (!is_even_diagram(d)) throw Error(ErrorKind::NotEvenDiagram, "diagram has odd crossings");
    BuildOptions opts;
    opts.max_crossings = max_crossings;
    auto full = build_complex(d, opts);
    if (full.single_cycle_edges != 0) return false;
    opts.upper_only = true;
    auto upper = homology(build_complex(d, opts));
    auto total = homology(full);
    std::set<std::pair<int, int>> keys;
    for (const auto& [k, v] : total) keys.insert(k);
    for (const auto& [k, v] : upper) {
        keys.insert(k);
        keys.insert({k.first, k.second - 1});
    }
    auto get = [](const RankTable& t, int i, int q) {
        auto it = t.find({i, q});
        return it == t.end() ? 0L : it->second;
    };
    for (auto [i, q] : keys)
        if (get(total, i, q) != get(upper, i, q) + get(upper, i, q + 1)) return false;
    return true;
}

// "i q rank" lines in (i, q) order.
inline std::string rank_lines(const RankTable& t) {
    std::ostringstream os;
    for (const auto& [key, r] : t) os << key.first << ' ' << key.second << ' ' << r << '\n';
    return os.str();
}

inline std::string poincare_polynomial(const RankTable& t) {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, r] : t) {
        auto [i, q] = key;
        if (!first) os << " + ";
        first = false;
        bool any_var = i != 0 || q != 0;
        if (r != 1 || !any_var) os << r;
        auto var = [&](char name, int e) {
            if (e == 0) return;
            os << name;
            if (e != 1) os << '^' << e;
        };
        var('t', i);
        var('q', q);
    }
    return os.str();
}

}  // namespace vknot
