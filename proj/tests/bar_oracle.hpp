#pragma once

// Test-only oracle: cohomology dimensions from the FULL bar complex with a
// self-contained differential evaluation and plain Gaussian elimination.
// Deliberately independent of the library's normalized-basis solver.

#include <cstdint>
#include <vector>

#include "acs/group.hpp"

namespace oracle {

// value of d(e_col) at the row tuple, where e_col is the indicator cochain of
// the degree-i tuple with flat index col (full basis, first argument most
// significant); returns a signed count
inline int bar_entry(const acs::FiniteGroup& g, const std::vector<acs::elem_t>& row, std::size_t col) {
    const std::size_t m = g.order();
    const std::size_t i_out = row.size();
    auto tuple_index = [&](const std::vector<acs::elem_t>& t) {
        std::size_t idx = 0;
        for (acs::elem_t e : t) idx = idx * m + e;
        return idx;
    };
    int entry = 0;
    std::vector<acs::elem_t> t(i_out - 1);
    for (std::size_t j = 1; j < i_out; ++j) t[j - 1] = row[j];
    if (tuple_index(t) == col) entry += 1;  // trivial action
    for (std::size_t k = 1; k < i_out; ++k) {
        std::size_t w = 0;
        for (std::size_t j = 0; j + 1 < k; ++j) t[w++] = row[j];
        t[w++] = g.mul(row[k - 1], row[k]);
        for (std::size_t j = k + 1; j < i_out; ++j) t[w++] = row[j];
        if (tuple_index(t) == col) entry += (k % 2 == 1) ? -1 : 1;
    }
    for (std::size_t j = 0; j + 1 < i_out; ++j) t[j] = row[j];
    if (tuple_index(t) == col) entry += (i_out % 2 == 1) ? -1 : 1;
    return entry;
}

// rank over F_2 of d_i with bit-packed rows (full basis)
inline std::size_t full_bar_rank_mod2(const acs::FiniteGroup& g, std::uint32_t i) {
    const std::size_t m = g.order();
    std::size_t cols = 1;
    for (std::uint32_t j = 0; j < i; ++j) cols *= m;
    const std::size_t rows = cols * m;
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> pivots;
    std::vector<std::size_t> pivot_col;
    std::vector<acs::elem_t> tup(i + 1, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<std::uint64_t> row(words, 0);
        for (std::size_t c = 0; c < cols; ++c)
            if (bar_entry(g, tup, c) % 2 != 0) row[c >> 6] ^= std::uint64_t{1} << (c & 63);
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            std::size_t c = pivot_col[k];
            if (row[c >> 6] >> (c & 63) & 1)
                for (std::size_t w = 0; w < words; ++w) row[w] ^= pivots[k][w];
        }
        std::size_t lead = cols;
        for (std::size_t c = 0; c < cols; ++c)
            if (row[c >> 6] >> (c & 63) & 1) {
                lead = c;
                break;
            }
        if (lead != cols) {
            pivots.push_back(std::move(row));
            pivot_col.push_back(lead);
        }
        for (std::size_t j = i + 1; j-- > 0;) {
            if (++tup[j] < m) break;
            tup[j] = 0;
        }
    }
    return pivots.size();
}

// rank over F_p of d_i : C^i -> C^{i+1} on the full basis
inline std::size_t full_bar_rank(const acs::FiniteGroup& g, std::uint32_t p, std::uint32_t i) {
    if (p == 2) return full_bar_rank_mod2(g, i);
    const std::size_t m = g.order();
    std::size_t cols = 1, rows = 1;
    for (std::uint32_t j = 0; j < i; ++j) cols *= m;
    rows = cols * m;
    std::vector<std::vector<std::uint8_t>> mat;
    std::vector<acs::elem_t> tup(i + 1, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<std::uint8_t> rowv(cols, 0);
        bool nonzero = false;
        for (std::size_t c = 0; c < cols; ++c) {
            int e = bar_entry(g, tup, c) % static_cast<int>(p);
            if (e < 0) e += static_cast<int>(p);
            rowv[c] = static_cast<std::uint8_t>(e);
            nonzero = nonzero || e != 0;
        }
        if (nonzero) mat.push_back(std::move(rowv));
        for (std::size_t j = i + 1; j-- > 0;) {
            if (++tup[j] < m) break;
            tup[j] = 0;
        }
    }
    // plain row reduction
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < mat.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < mat.size() && mat[pivot][c] == 0) ++pivot;
        if (pivot == mat.size()) continue;
        std::swap(mat[rank], mat[pivot]);
        std::uint32_t inv = 1;
        for (std::uint32_t x = 1; x < p; ++x)
            if (x * mat[rank][c] % p == 1) inv = x;
        for (std::size_t cc = c; cc < cols; ++cc)
            mat[rank][cc] = static_cast<std::uint8_t>(mat[rank][cc] * inv % p);
        for (std::size_t rr = 0; rr < mat.size(); ++rr) {
            if (rr == rank || mat[rr][c] == 0) continue;
            std::uint32_t f = p - mat[rr][c];
            for (std::size_t cc = c; cc < cols; ++cc)
                mat[rr][cc] = static_cast<std::uint8_t>((mat[rr][cc] + f * mat[rank][cc]) % p);
        }
        ++rank;
    }
    return rank;
}

inline std::size_t full_bar_dim(const acs::FiniteGroup& g, std::uint32_t p, std::uint32_t i) {
    std::size_t cols = 1;
    for (std::uint32_t j = 0; j < i; ++j) cols *= g.order();
    std::size_t rank_i = full_bar_rank(g, p, i);
    std::size_t rank_prev = i == 0 ? 0 : full_bar_rank(g, p, i - 1);
    return cols - rank_i - rank_prev;
}

} // namespace oracle
