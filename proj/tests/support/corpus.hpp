#pragma once

// Test corpora of knot codes and a generic slicing-by-saddles certificate.

#include "vknot/vknot.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace corpus {

using vknot::Component;
using vknot::GaussCode;
using vknot::Passage;
using vknot::Role;

// Lexicographically least serialization over all rotations.
inline std::string rotation_key(const GaussCode& d) {
    std::string best = vknot::to_string(d);
    for (std::size_t s = 1; s < d.num_passages(); ++s) best = std::min(best, vknot::to_string(vknot::rotate(d, 0, s)));
    return best;
}

// Every one-component code with n crossings, up to rotation and relabeling.
inline std::vector<GaussCode> all_knot_codes(std::size_t n) {
    if (n == 0) return {GaussCode()};
    std::set<std::string> keys;
    std::vector<GaussCode> out;
    std::vector<int> word(2 * n, 0);
    // chord diagrams as restricted-growth words: first occurrences in label order
    auto recurse = [&](auto&& self, std::size_t pos, int next_label, std::vector<int>& open) -> void {
        if (pos == 2 * n) {
            if (!open.empty()) return;
            for (std::uint32_t roles = 0; roles < (1U << n); ++roles)
                for (std::uint32_t signs = 0; signs < (1U << n); ++signs) {
                    Component comp;
                    std::vector<bool> seen(n, false);
                    for (int l : word) {
                        auto c = static_cast<std::size_t>(l - 1);
                        bool first_over = (roles >> c) & 1U;
                        Role r = (seen[c] == first_over) ? Role::Under : Role::Over;
                        seen[c] = true;
                        comp.push_back({l, r, ((signs >> c) & 1U) ? -1 : +1});
                    }
                    GaussCode d({comp});
                    if (keys.insert(rotation_key(d)).second) out.push_back(d);
                }
            return;
        }
        if (static_cast<std::size_t>(next_label) <= n && open.size() < 2 * n - pos) {
            word[pos] = next_label;
            open.push_back(next_label);
            self(self, pos + 1, next_label + 1, open);
            open.pop_back();
        }
        for (std::size_t k = 0; k < open.size(); ++k) {
            int l = open[k];
            word[pos] = l;
            open.erase(open.begin() + static_cast<long>(k));
            self(self, pos + 1, next_label, open);
            open.insert(open.begin() + static_cast<long>(k), l);
        }
    };
    std::vector<int> open;
    recurse(recurse, 0, 1, open);
    return out;
}

inline GaussCode random_knot_code(std::size_t n, std::mt19937_64& rng) {
    std::vector<int> slots(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) slots[i] = static_cast<int>(i / 2) + 1;
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<int> over_first(n + 1), sign(n + 1), seen(n + 1, 0);
    for (std::size_t c = 1; c <= n; ++c) {
        over_first[c] = static_cast<int>(rng() & 1U);
        sign[c] = (rng() & 1U) ? 1 : -1;
    }
    Component comp;
    for (int l : slots) {
        bool over = seen[l] ? !over_first[l] : over_first[l];
        seen[l] = 1;
        comp.push_back({l, over ? Role::Over : Role::Under, sign[l]});
    }
    return GaussCode({comp});
}

inline std::vector<GaussCode> random_knot_codes(std::size_t count, std::size_t min_n, std::size_t max_n,
                                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<GaussCode> out;
    for (std::size_t i = 0; i < count; ++i) {
        auto n = std::uniform_int_distribution<std::size_t>(min_n, max_n)(rng);
        out.push_back(random_knot_code(n, rng));
    }
    return out;
}

struct Corpus {
    std::vector<GaussCode> codes;
    std::size_t exhaustive = 0;  // codes[0, exhaustive) are the exhaustive part
};

// Exhaustive up to `exhaustive_max` crossings, `samples` random codes for each
// crossing number up to `sampled_max`, and `extra` random codes with up to 8 crossings.
inline Corpus standard_corpus(std::size_t exhaustive_max = 4, std::size_t sampled_max = 6, std::size_t samples = 1500,
                              std::size_t extra = 1000, std::uint64_t seed = 20240611) {
    Corpus c;
    for (std::size_t n = 0; n <= exhaustive_max; ++n)
        for (auto& d : all_knot_codes(n)) c.codes.push_back(std::move(d));
    c.exhaustive = c.codes.size();
    for (std::size_t n = exhaustive_max + 1; n <= sampled_max; ++n)
        for (auto& d : random_knot_codes(samples, n, n, seed + n)) c.codes.push_back(std::move(d));
    for (auto& d : random_knot_codes(extra, 1, 8, seed)) c.codes.push_back(std::move(d));
    return c;
}

// Removes every crossing with one saddle each, then caps off the extra circles.
// Each crossing either is already a kink, or a saddle cuts out the part of the
// knot between its two passages so that it becomes a kink.
inline vknot::Certificate generic_certificate(const GaussCode& start) {
    vknot::Certificate cert{start, {}, GaussCode()};
    GaussCode cur = start;
    auto arc_after = [](const GaussCode& d, std::size_t p) {
        auto k = d.component_of(p);
        return d.arc_index(k, p - d.component_offset(k));
    };
    while (cur.num_crossings() > 0) {
        if (auto kinks = vknot::legal_r1_removals(cur); !kinks.empty()) {
            cert.moves.push_back(kinks.front());
        } else {
            std::size_t a = std::min(cur.over_position(0), cur.under_position(0));
            std::size_t b = std::max(cur.over_position(0), cur.under_position(0));
            cert.moves.push_back(vknot::Move::saddle(arc_after(cur, cur.prev(a)), arc_after(cur, b)));
        }
        cur = vknot::apply_move(cur, cert.moves.back());
    }
    while (cur.num_components() > 1) {
        cert.moves.push_back(vknot::Move::death(cur.num_components() - 1));
        cur = vknot::apply_move(cur, cert.moves.back());
    }
    return cert;
}

}  // namespace corpus
