#pragma once

// Dense row-echelon elimination over prime fields. Mod 2 rows are packed
// into 64-bit words; odd primes use byte entries. Pivoting is deterministic:
// rows in input order, pivot at the first nonzero column.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "acs/errors.hpp"

namespace acs {
namespace linalg {

inline constexpr std::size_t default_cell_budget = std::size_t{1} << 28;

/// Incremental rank/solve structure over GF(2) with bit-packed rows.
class Gf2Echelon {
public:
    explicit Gf2Echelon(std::size_t cols) : cols_(cols), words_((cols + 63) / 64) {}

    /// Reduce a row against the pivots; if a remainder survives, store it as
    /// a new pivot and grow the rank.
    void add_row(std::vector<std::uint64_t> row) {
        reduce(row);
        int lead = leading_bit(row);
        if (lead < 0) return;
        pivot_col_.push_back(lead);
        rows_.push_back(std::move(row));
    }

    void reduce(std::vector<std::uint64_t>& row) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::size_t c = static_cast<std::size_t>(pivot_col_[r]);
            if (row[c >> 6] >> (c & 63) & 1)
                for (std::size_t w = 0; w < words_; ++w) row[w] ^= rows_[r][w];
        }
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

private:
    int leading_bit(const std::vector<std::uint64_t>& row) const {
        for (std::size_t w = 0; w < words_; ++w)
            if (row[w]) return static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(row[w])));
        return -1;
    }

    std::size_t cols_;
    std::size_t words_;
    std::vector<int> pivot_col_;
    std::vector<std::vector<std::uint64_t>> rows_;

    friend std::optional<std::vector<std::uint8_t>> solve_gf2(const Gf2Echelon&, std::size_t);
};

/// Extract one solution of a system whose rows were added with the right-hand
/// side appended as the final column. Free variables are set to zero.
inline std::optional<std::vector<std::uint8_t>> solve_gf2(const Gf2Echelon& e, std::size_t unknowns) {
    std::vector<std::uint8_t> x(unknowns, 0);
    // a pivot in the rhs column marks an inconsistent system
    for (std::size_t r = 0; r < e.rows_.size(); ++r)
        if (static_cast<std::size_t>(e.pivot_col_[r]) == unknowns) return std::nullopt;
    // rows are already fully reduced against later pivots only partially;
    // process pivots from the highest column down
    std::vector<std::size_t> order(e.rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return e.pivot_col_[a] > e.pivot_col_[b]; });
    for (std::size_t idx : order) {
        const auto& row = e.rows_[idx];
        std::size_t pc = static_cast<std::size_t>(e.pivot_col_[idx]);
        // value = rhs bit xor sum of known entries beyond the pivot
        std::uint8_t v = static_cast<std::uint8_t>(row[unknowns >> 6] >> (unknowns & 63) & 1);
        for (std::size_t c = pc + 1; c < unknowns; ++c)
            if (row[c >> 6] >> (c & 63) & 1) v ^= x[c];
        x[pc] = v;
    }
    return x;
}

/// Echelon structure over GF(p) for odd primes p < 256.
class GfpEchelon {
public:
    GfpEchelon(std::size_t cols, std::uint32_t p) : cols_(cols), p_(p) {
        inv_.assign(p, 0);
        for (std::uint32_t a = 1; a < p; ++a)
            for (std::uint32_t b = 1; b < p; ++b)
                if (a * b % p == 1) inv_[a] = b;
    }

    void add_row(std::vector<std::uint8_t> row) {
        reduce(row);
        int lead = -1;
        for (std::size_t c = 0; c < row.size(); ++c)
            if (row[c]) {
                lead = static_cast<int>(c);
                break;
            }
        if (lead < 0) return;
        // normalise the pivot to 1
        std::uint32_t scale = inv_[row[static_cast<std::size_t>(lead)]];
        for (auto& v : row) v = static_cast<std::uint8_t>(v * scale % p_);
        pivot_col_.push_back(lead);
        rows_.push_back(std::move(row));
    }

    void reduce(std::vector<std::uint8_t>& row) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::uint32_t c = row[static_cast<std::size_t>(pivot_col_[r])];
            if (c == 0) continue;
            std::uint32_t mul = p_ - c;  // row += mul * pivot_row clears the column
            for (std::size_t w = 0; w < row.size(); ++w)
                row[w] = static_cast<std::uint8_t>((row[w] + mul * rows_[r][w]) % p_);
        }
    }

    std::size_t rank() const { return rows_.size(); }

    std::optional<std::vector<std::uint8_t>> solve(std::size_t unknowns) const {
        std::vector<std::uint8_t> x(unknowns, 0);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (static_cast<std::size_t>(pivot_col_[r]) == unknowns) return std::nullopt;
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return pivot_col_[a] > pivot_col_[b]; });
        for (std::size_t idx : order) {
            const auto& row = rows_[idx];
            std::size_t pc = static_cast<std::size_t>(pivot_col_[idx]);
            std::uint32_t v = row[unknowns];
            for (std::size_t c = pc + 1; c < unknowns; ++c)
                if (row[c]) v = (v + p_ * p_ - row[c] * x[c]) % p_;
            x[pc] = static_cast<std::uint8_t>(v % p_);
        }
        return x;
    }

private:
    std::size_t cols_;
    std::uint32_t p_;
    std::vector<std::uint32_t> inv_;
    std::vector<int> pivot_col_;
    std::vector<std::vector<std::uint8_t>> rows_;
};

} // namespace linalg
} // namespace acs
