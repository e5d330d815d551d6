#pragma once

// Cocycle and coboundary tests plus cohomology dimensions over prime fields.
// Linear algebra runs on the normalized subcomplex (cochains vanishing when
// any argument is the identity) whenever the input allows it; mod 2 rows are
// bit-packed.

#include <cstdint>
#include <optional>
#include <vector>

#include "acs/cochain.hpp"
#include "acs/linalg.hpp"
#include "acs/numtheory.hpp"

namespace acs {

inline bool is_cocycle(const Cochain& f) { return differential(f).is_zero(); }

namespace detail {

// Enumerates the degree-i tuple basis, either all tuples or only those with
// no identity entry, and the column index of each referenced (i-1)-tuple.
struct ComplexBasis {
    std::uint32_t m;          // group order
    bool normalized;
    std::uint32_t base() const { return normalized ? m - 1 : m; }
    elem_t digit(std::uint32_t raw) const { return static_cast<elem_t>(normalized ? raw + 1 : raw); }

    std::size_t count(std::uint32_t degree) const {
        std::size_t c = 1;
        for (std::uint32_t j = 0; j < degree; ++j) c *= base();
        return c;
    }
    // column of a tuple, or npos if it falls outside the basis
    std::size_t column_of(const std::vector<elem_t>& tuple) const {
        std::size_t idx = 0;
        for (elem_t d : tuple) {
            if (normalized) {
                if (d == FiniteGroup::identity()) return npos;
                idx = idx * (m - 1) + (d - 1);
            } else {
                idx = idx * m + d;
            }
        }
        return idx;
    }
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// Row of the differential matrix at the degree-(i_out) tuple `s`:
// coefficients over the degree-(i_out - 1) basis.
template <typename Sink>
void differential_row(const FiniteGroup& g, const CoeffModule& coeff, const std::vector<elem_t>& s,
                      const ComplexBasis& basis, Sink&& sink) {
    const std::uint32_t i_out = static_cast<std::uint32_t>(s.size());
    std::vector<elem_t> t(s.size() - 1);

    // g1 . x(g2..)
    for (std::size_t j = 1; j < s.size(); ++j) t[j - 1] = s[j];
    if (auto c = basis.column_of(t); c != ComplexBasis::npos) sink(c, static_cast<std::int32_t>(coeff.units[s[0]]));
    // (-1)^k x(.. g_k g_{k+1} ..)
    for (std::uint32_t k = 1; k < i_out; ++k) {
        std::size_t w = 0;
        for (std::size_t j = 0; j + 1 < k; ++j) t[w++] = s[j];
        t[w++] = g.mul(s[k - 1], s[k]);
        for (std::size_t j = k + 1; j < s.size(); ++j) t[w++] = s[j];
        if (auto c = basis.column_of(t); c != ComplexBasis::npos) sink(c, k % 2 == 1 ? -1 : 1);
    }
    // (-1)^{i_out} x(g1..g_{i_out-1})
    for (std::size_t j = 0; j + 1 < s.size(); ++j) t[j] = s[j];
    if (auto c = basis.column_of(t); c != ComplexBasis::npos) sink(c, i_out % 2 == 1 ? -1 : 1);
}

inline void advance_tuple(std::vector<elem_t>& raw, std::uint32_t base) {
    for (std::size_t j = raw.size(); j-- > 0;) {
        if (++raw[j] < base) break;
        raw[j] = 0;
    }
}

} // namespace detail

/// Budget for dimension computations; the default admits degree 3 up to
/// group order 12 and degree 2 up to order 24.
struct DimBudget {
    std::size_t max_rows = 14641;
};

namespace detail {

// rank of d_i : C^i -> C^{i+1} on the normalized subcomplex over F_p
inline std::size_t normalized_rank(const FiniteGroup& g, std::uint32_t p, std::uint32_t i, const DimBudget& budget) {
    const CoeffModule coeff = trivial_coeff(g, p);
    const ComplexBasis basis{g.order(), true};
    const std::size_t rows = basis.count(i + 1);
    const std::size_t cols = basis.count(i);
    if (rows > budget.max_rows)
        throw resource_error("cohomology_dim: " + std::to_string(rows) +
                             " rows exceed the budget of " + std::to_string(budget.max_rows) +
                             " (raise the budget to proceed)");
    std::vector<elem_t> raw(i + 1, 0);
    std::vector<elem_t> s(i + 1);
    if (p == 2) {
        linalg::Gf2Echelon ech(cols);
        const std::size_t words = (cols + 63) / 64;
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t j = 0; j <= i; ++j) s[j] = basis.digit(raw[j]);
            std::vector<std::uint64_t> row(words, 0);
            differential_row(g, coeff, s, basis, [&](std::size_t c, std::int32_t v) {
                if (v % 2 != 0) row[c >> 6] ^= std::uint64_t{1} << (c & 63);
            });
            ech.add_row(std::move(row));
            advance_tuple(raw, basis.base());
        }
        return ech.rank();
    }
    linalg::GfpEchelon ech(cols, p);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t j = 0; j <= i; ++j) s[j] = basis.digit(raw[j]);
        std::vector<std::uint8_t> row(cols, 0);
        differential_row(g, coeff, s, basis, [&](std::size_t c, std::int32_t v) {
            std::int32_t nv = (row[c] + v) % static_cast<std::int32_t>(p);
            row[c] = static_cast<std::uint8_t>(nv < 0 ? nv + static_cast<std::int32_t>(p) : nv);
        });
        ech.add_row(std::move(row));
        advance_tuple(raw, basis.base());
    }
    return ech.rank();
}

} // namespace detail

/// dim H^i(G, F_p) with trivial action, degree at most 3.
inline std::size_t cohomology_dim(const FiniteGroup& g, std::uint32_t p, std::uint32_t i,
                                  const DimBudget& budget = {}) {
    if (i > 3) throw validation_error("cohomology_dim: degree cap is 3");
    if (p < 2 || p > 251 || !is_prime(static_cast<std::int64_t>(p)))
        throw unsupported_modulus_error("cohomology_dim: modulus " + std::to_string(p) + " is not a small prime");
    const detail::ComplexBasis basis{g.order(), true};
    const std::size_t dim_ci = basis.count(i);
    const std::size_t rank_i = detail::normalized_rank(g, p, i, budget);
    const std::size_t rank_prev = i == 0 ? 0 : detail::normalized_rank(g, p, i - 1, budget);
    return dim_ci - rank_i - rank_prev;
}

/// Solves d(x) = f over F_p and returns a witness when one exists. Normalized
/// inputs are solved on the normalized basis; anything else falls back to the
/// full bar basis. The witness always satisfies differential(witness) == f.
inline std::optional<Cochain> is_coboundary(const Cochain& f) {
    const std::uint32_t i = f.degree();
    if (i == 0) throw validation_error("is_coboundary: degree must be at least 1");
    const std::uint32_t p = f.modulus();
    if (p > 251 || !is_prime(static_cast<std::int64_t>(p)))
        throw unsupported_modulus_error("is_coboundary: modulus " + std::to_string(p) +
                                        " is not a small prime; coboundary solving needs a prime field");
    const FiniteGroup& g = f.group();
    const detail::ComplexBasis basis{g.order(), f.is_normalized()};
    const std::size_t rows = basis.count(i);
    const std::size_t cols = basis.count(i - 1);
    if (rows * (cols + 1) > linalg::default_cell_budget)
        throw resource_error("is_coboundary: system exceeds the cell budget");

    std::vector<elem_t> raw(i, 0);
    std::vector<elem_t> s(i);
    std::optional<std::vector<std::uint8_t>> solution;
    if (p == 2) {
        linalg::Gf2Echelon ech(cols + 1);
        const std::size_t words = (cols + 1 + 63) / 64;
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t j = 0; j < i; ++j) s[j] = basis.digit(raw[j]);
            std::vector<std::uint64_t> row(words, 0);
            detail::differential_row(g, f.coeff(), s, basis, [&](std::size_t c, std::int32_t v) {
                if (v % 2 != 0) row[c >> 6] ^= std::uint64_t{1} << (c & 63);
            });
            if (f.at(std::span<const elem_t>(s.data(), s.size())) % 2 != 0)
                row[cols >> 6] ^= std::uint64_t{1} << (cols & 63);
            ech.add_row(std::move(row));
            detail::advance_tuple(raw, basis.base());
        }
        solution = linalg::solve_gf2(ech, cols);
    } else {
        linalg::GfpEchelon ech(cols + 1, p);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t j = 0; j < i; ++j) s[j] = basis.digit(raw[j]);
            std::vector<std::uint8_t> row(cols + 1, 0);
            detail::differential_row(g, f.coeff(), s, basis, [&](std::size_t c, std::int32_t v) {
                std::int32_t nv = (row[c] + v) % static_cast<std::int32_t>(p);
                row[c] = static_cast<std::uint8_t>(nv < 0 ? nv + static_cast<std::int32_t>(p) : nv);
            });
            row[cols] = static_cast<std::uint8_t>(f.at(std::span<const elem_t>(s.data(), s.size())) % p);
            ech.add_row(std::move(row));
            detail::advance_tuple(raw, basis.base());
        }
        solution = ech.solve(cols);
    }
    if (!solution) return std::nullopt;

    Cochain witness(g, f.coeff(), i - 1);
    std::vector<elem_t> t(i - 1, 0);
    std::vector<elem_t> full(i - 1);
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t j = 0; j + 1 < i; ++j) full[j] = basis.digit(t[j]);
        witness.set_index(witness.index_of(std::span<const elem_t>(full.data(), full.size())), (*solution)[c]);
        detail::advance_tuple(t, basis.base());
    }
    if (!(differential(witness) == f))
        throw consistency_error("is_coboundary: solver produced a non-witness; this is a bug");
    return witness;
}

} // namespace acs
