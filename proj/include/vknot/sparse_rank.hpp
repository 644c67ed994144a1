#pragma once

// Sparse integer matrices and their exact rank over the rationals.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace vknot {

struct SparseEntry {
    std::uint32_t row = 0;
    std::int64_t value = 0;
};

// Column-major sparse matrix with integer entries.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }

    // Accumulates into an existing entry; zero sums are dropped by compress().
    void add(std::size_t row, std::size_t col, std::int64_t value) {
        columns_.at(col).push_back({static_cast<std::uint32_t>(row), value});
    }

    void compress() {
        for (auto& col : columns_) {
            std::sort(col.begin(), col.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.row < b.row; });
            std::vector<SparseEntry> out;
            for (const auto& e : col) {
                if (!out.empty() && out.back().row == e.row)
                    out.back().value += e.value;
                else
                    out.push_back(e);
            }
            std::erase_if(out, [](const SparseEntry& e) { return e.value == 0; });
            col = std::move(out);
        }
    }

    std::span<const SparseEntry> column(std::size_t c) const { return columns_[c]; }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& c : columns_) n += c.size();
        return n;
    }

private:
    std::size_t rows_ = 0;
    std::vector<std::vector<SparseEntry>> columns_;
};

namespace detail {

using RationalRow = std::vector<std::pair<std::uint32_t, mpq_class>>;  // sorted by index

// row <- row - factor * pivot
inline RationalRow subtract_multiple(const RationalRow& row, const mpq_class& factor, const RationalRow& pivot) {
    RationalRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -factor * pivot[j].second);
            ++j;
        } else {
            mpq_class v = row[i].second - factor * pivot[j].second;
            if (v != 0) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace detail

// Rank over Q of the submatrix formed by the given columns (all columns when empty).
// Gaussian elimination with exact rational arithmetic; each column is reduced
// against the pivots found so far, sparsest columns first.
inline std::size_t rank_over_rationals(const SparseMatrix& m, std::span<const std::size_t> columns = {}) {
    std::vector<std::size_t> order;
    if (columns.empty()) {
        order.resize(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) order[c] = c;
    } else {
        order.assign(columns.begin(), columns.end());
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return m.column(a).size() < m.column(b).size(); });

    std::map<std::uint32_t, detail::RationalRow> pivots;  // leading index -> normalized vector
    std::size_t rank = 0;
    for (auto c : order) {
        detail::RationalRow v;
        for (const auto& e : m.column(c))
            if (e.value != 0) v.emplace_back(e.row, mpq_class(static_cast<long>(e.value)));
        while (!v.empty()) {
            auto it = pivots.find(v.front().first);
            if (it == pivots.end()) {
                mpq_class lead = v.front().second;
                for (auto& [idx, val] : v) val /= lead;
                pivots.emplace(v.front().first, std::move(v));
                ++rank;
                break;
            }
            mpq_class factor = v.front().second;
            v = detail::subtract_multiple(v, factor, it->second);
        }
    }
    return rank;
}

}  // namespace vknot
