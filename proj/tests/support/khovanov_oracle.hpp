#pragma once

// Brute-force Khovanov ranks over Q, written independently of the library's
// cycle tracer and sparse elimination. Smoothings are computed by gluing the
// four endpoints of every crossing, and ranks by dense rational elimination.
// Only merge and split maps are built, so this is the classical theory; on
// diagrams whose cube has single-cycle edges it is not meaningful.

#include "vknot/gauss_code.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Ranks = std::map<std::pair<int, int>, long>;

struct Smoothing {
    int circles = 0;
    std::vector<int> circle_of_endpoint;  // endpoint id -> circle
};

// Endpoints: passage p has an incoming end 2p and an outgoing end 2p+1.
// The arc after p joins 2p+1 with 2 next(p). At a crossing with over
// passage o and under passage u, the oriented smoothing joins in(o)-out(u)
// and in(u)-out(o); the other smoothing joins in(o)-in(u) and out(o)-out(u).
inline Smoothing smooth(const vknot::GaussCode& d, std::uint64_t mask) {
    const std::size_t ends = 2 * d.num_passages();
    std::vector<std::size_t> parent(ends + d.num_empty_components());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto join = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
    for (std::size_t p = 0; p < d.num_passages(); ++p) join(2 * p + 1, 2 * d.next(p));
    for (std::size_t c = 0; c < d.num_crossings(); ++c) {
        std::size_t o = d.over_position(c), u = d.under_position(c);
        bool bit = (mask >> c) & 1U;
        bool oriented = (d.crossing_sign(c) > 0) != bit;
        if (oriented) {
            join(2 * o, 2 * u + 1);
            join(2 * u, 2 * o + 1);
        } else {
            join(2 * o, 2 * u);
            join(2 * o + 1, 2 * u + 1);
        }
    }
    Smoothing s;
    std::map<std::size_t, int> ids;
    s.circle_of_endpoint.resize(parent.size());  // crossing-free components get one pseudo endpoint each
    for (std::size_t e = 0; e < parent.size(); ++e) {
        auto [it, fresh] = ids.try_emplace(find(e), static_cast<int>(ids.size()));
        s.circle_of_endpoint[e] = it->second;
    }
    s.circles = static_cast<int>(ids.size());
    return s;
}

inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline Ranks khovanov(const vknot::GaussCode& d) {
    const std::size_t n = d.num_crossings();
    int nminus = 0;
    for (std::size_t c = 0; c < n; ++c) nminus += d.crossing_sign(c) < 0 ? 1 : 0;
    const int nplus = static_cast<int>(n) - nminus;
    const std::uint64_t states = std::uint64_t{1} << n;
    std::vector<Smoothing> sm(states);
    for (std::uint64_t s = 0; s < states; ++s) sm[s] = smooth(d, s);

    // generator (state, labels) with q, indexed per homological degree r
    struct Gen {
        std::uint64_t state;
        std::uint32_t labels;
        int q;
    };
    std::vector<std::vector<Gen>> gens(n + 1);
    std::map<std::pair<std::uint64_t, std::uint32_t>, std::size_t> index;
    for (std::uint64_t s = 0; s < states; ++s) {
        int r = std::popcount(s);
        for (std::uint32_t l = 0; l < (1U << sm[s].circles); ++l) {
            int q = sm[s].circles - 2 * std::popcount(l) + r + nplus - 2 * nminus;
            index[{s, l}] = gens[static_cast<std::size_t>(r)].size();
            gens[static_cast<std::size_t>(r)].push_back({s, l, q});
        }
    }
    // entries[r]: map (row in r+1, col in r) -> value
    std::vector<std::map<std::pair<std::size_t, std::size_t>, long>> entries(n);
    for (std::uint64_t s = 0; s < states; ++s)
        for (std::size_t c = 0; c < n; ++c) {
            if ((s >> c) & 1U) continue;
            std::uint64_t t = s | (std::uint64_t{1} << c);
            long sign = std::popcount(s & ((std::uint64_t{1} << c) - 1)) % 2 ? -1 : 1;
            const auto &a = sm[s], &b = sm[t];
            // circle correspondence through endpoints of the other crossings
            std::vector<std::vector<int>> to_b(a.circles);
            for (std::size_t e = 0; e < a.circle_of_endpoint.size(); ++e) {
                auto& v = to_b[a.circle_of_endpoint[e]];
                int tb = b.circle_of_endpoint[e];
                if (std::find(v.begin(), v.end(), tb) == v.end()) v.push_back(tb);
            }
            std::vector<std::vector<int>> to_a(b.circles);
            for (std::size_t e = 0; e < b.circle_of_endpoint.size(); ++e) {
                auto& v = to_a[b.circle_of_endpoint[e]];
                int ta = a.circle_of_endpoint[e];
                if (std::find(v.begin(), v.end(), ta) == v.end()) v.push_back(ta);
            }
            std::size_t r = static_cast<std::size_t>(std::popcount(s));
            for (std::uint32_t l = 0; l < (1U << a.circles); ++l) {
                std::size_t col = index[{s, l}];
                auto add = [&](std::uint32_t lb, long v) { entries[r][{index[{t, lb}], col}] += sign * v; };
                if (b.circles == a.circles - 1) {
                    // merge: two a-circles into one b-circle
                    std::uint32_t lb = 0;
                    int minus_on_merged = 0, merged = -1;
                    for (int k = 0; k < a.circles; ++k) {
                        int target = to_b[k][0];
                        bool minus = (l >> k) & 1U;
                        if (to_a[target].size() == 2) {
                            merged = target;
                            minus_on_merged += minus;
                        } else if (minus) {
                            lb |= 1U << target;
                        }
                    }
                    if (minus_on_merged == 0) add(lb, 1);
                    else if (minus_on_merged == 1) add(lb | (1U << merged), 1);
                } else if (b.circles == a.circles + 1) {
                    std::uint32_t lb = 0;
                    int split = -1;
                    for (int k = 0; k < a.circles; ++k) {
                        if (to_b[k].size() == 2) {
                            split = k;
                            continue;
                        }
                        if ((l >> k) & 1U) lb |= 1U << to_b[k][0];
                    }
                    int x = to_b[split][0], y = to_b[split][1];
                    if ((l >> split) & 1U) {
                        add(lb | (1U << x) | (1U << y), 1);
                    } else {
                        add(lb | (1U << x), 1);
                        add(lb | (1U << y), 1);
                    }
                }
            }
        }
    Ranks out;
    auto rank_of = [&](std::size_t r, int q) -> std::size_t {
        if (r >= n) return 0;
        std::vector<std::size_t> cols, rows;
        for (std::size_t g = 0; g < gens[r].size(); ++g)
            if (gens[r][g].q == q) cols.push_back(g);
        for (std::size_t g = 0; g < gens[r + 1].size(); ++g)
            if (gens[r + 1][g].q == q) rows.push_back(g);
        if (cols.empty() || rows.empty()) return 0;
        std::map<std::size_t, std::size_t> row_pos, col_pos;
        for (std::size_t i = 0; i < rows.size(); ++i) row_pos[rows[i]] = i;
        for (std::size_t i = 0; i < cols.size(); ++i) col_pos[cols[i]] = i;
        std::vector<std::vector<mpq_class>> m(rows.size(), std::vector<mpq_class>(cols.size(), 0));
        for (const auto& [key, v] : entries[r]) {
            auto ri = row_pos.find(key.first);
            auto ci = col_pos.find(key.second);
            if (ri != row_pos.end() && ci != col_pos.end()) m[ri->second][ci->second] = v;
        }
        return dense_rank(std::move(m));
    };
    for (std::size_t r = 0; r <= n; ++r) {
        std::map<int, long> dims;
        for (const auto& g : gens[r]) ++dims[g.q];
        for (const auto& [q, dim] : dims) {
            long h = dim - static_cast<long>(rank_of(r, q)) - (r ? static_cast<long>(rank_of(r - 1, q)) : 0);
            if (h) out[{static_cast<int>(r) - nminus, q}] = h;
        }
    }
    return out;
}

// Ranks of K (+) K{-1}.
inline Ranks doubled(const Ranks& k) {
    Ranks out;
    for (const auto& [key, v] : k) {
        out[key] += v;
        out[{key.first, key.second - 1}] += v;
    }
    return out;
}

}  // namespace oracle
