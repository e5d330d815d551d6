#pragma once

// Explicit chain homotopies for the conjugation action on group cochains.
// h_{a,f} and its multi-element generalisation h_{a1..ak,f} are sums over
// lattice paths (equivalently shuffles); they satisfy exact Stokes-type
// identities which stokes_check verifies term by term.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acs/cochain.hpp"

namespace acs {

/// A monotone path from (0,0) to (n,k): n horizontal and k vertical steps.
/// `parity` counts the grid squares above the path mod 2, which equals the
/// sign of the corresponding (k,n)-shuffle.
struct LatticePath {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::vector<bool> steps;  // false = horizontal, true = vertical
    int parity = 0;

    static LatticePath from_steps(std::uint32_t n, std::uint32_t k, std::vector<bool> steps) {
        LatticePath p;
        p.n = n;
        p.k = k;
        std::uint32_t h = 0, v = 0;
        std::uint32_t squares_above = 0;
        for (bool is_v : steps) {
            if (is_v) {
                ++v;
            } else {
                squares_above += k - v;  // column h sits under k - height squares
                ++h;
            }
        }
        if (h != n || v != k) throw validation_error("lattice path: step counts do not match the grid");
        p.steps = std::move(steps);
        p.parity = static_cast<int>(squares_above % 2);
        return p;
    }
};

/// All C(n+k, k) monotone paths, in lexicographic step order (H before V).
inline std::vector<LatticePath> enumerate_paths(std::uint32_t n, std::uint32_t k) {
    std::vector<LatticePath> out;
    std::vector<bool> steps;
    steps.reserve(n + k);
    auto rec = [&](auto&& self, std::uint32_t h, std::uint32_t v) -> void {
        if (h == n && v == k) {
            out.push_back(LatticePath::from_steps(n, k, steps));
            return;
        }
        if (h < n) {
            steps.push_back(false);
            self(self, h + 1, v);
            steps.pop_back();
        }
        if (v < k) {
            steps.push_back(true);
            self(self, h, v + 1);
            steps.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Single-element homotopy
///   h_{a,f}(g1..gn) = sum_r (-1)^r f(g1,..,g_r, a^{-1}, Ad_a g_{r+1},..,Ad_a g_n)
/// for f of degree n+1. Together with the differential it witnesses
/// h_{a,df} + d(h_{a,f}) = f^a - f for arbitrary cochains f.
inline Cochain homotopy_h(elem_t a, const Cochain& f) {
    if (f.degree() == 0) throw validation_error("homotopy_h: input must have degree at least 1");
    const FiniteGroup& g = f.group();
    const std::uint32_t m = g.order();
    const std::uint32_t nf = f.degree();
    const std::uint32_t n = nf - 1;
    const std::uint32_t mod = f.modulus();
    const elem_t ainv = g.inv(a);
    std::vector<elem_t> ad(m);
    for (elem_t x = 0; x < m; ++x) ad[x] = g.conj(a, x);

    Cochain out(g, f.coeff(), n);
    std::vector<elem_t> d(n, 0);
    std::vector<elem_t> args(nf);
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        std::uint32_t acc = 0;
        for (std::uint32_t r = 0; r <= n; ++r) {
            for (std::uint32_t j = 0; j < r; ++j) args[j] = d[j];
            args[r] = ainv;
            for (std::uint32_t j = r; j < n; ++j) args[j + 1] = ad[d[j]];
            std::uint16_t v = f.at(std::span<const elem_t>(args.data(), args.size()));
            acc += (r % 2 == 1) ? mod - v : v;
        }
        out.set_index(idx, acc % mod);
        for (std::size_t j = n; j-- > 0;) {
            if (++d[j] < m) break;
            d[j] = 0;
        }
    }
    return out;
}

/// Multi-element homotopy h_{a1..ak,f} for f of degree n+k: a signed sum over
/// all lattice paths in the n-by-k grid. A vertical step starting at height t
/// contributes a_{k-t}^{-1}; a horizontal step at height t in column s
/// contributes (a_{k-t+1}..a_k) x_s (a_{k-t+1}..a_k)^{-1}.
inline Cochain homotopy_multi(const std::vector<elem_t>& a_vec, const Cochain& f) {
    const std::uint32_t k = static_cast<std::uint32_t>(a_vec.size());
    if (k == 0) throw validation_error("homotopy_multi: need at least one group element");
    if (f.degree() < k) throw validation_error("homotopy_multi: cochain degree must be at least the element count");
    const FiniteGroup& g = f.group();
    const std::uint32_t m = g.order();
    const std::uint32_t n = f.degree() - k;
    const std::uint32_t mod = f.modulus();

    // prefix[t] = a_{k-t+1} * ... * a_k  (prefix[0] = identity)
    std::vector<elem_t> prefix(k + 1, FiniteGroup::identity());
    for (std::uint32_t t = 1; t <= k; ++t) prefix[t] = g.mul(a_vec[k - t], prefix[t - 1]);
    // conj_t[x] = prefix[t] x prefix[t]^{-1}; vert[t] = a_{k-t}^{-1} at height t
    std::vector<std::vector<elem_t>> conj_t(k + 1, std::vector<elem_t>(m));
    for (std::uint32_t t = 0; t <= k; ++t)
        for (elem_t x = 0; x < m; ++x) conj_t[t][x] = g.conj(prefix[t], x);
    std::vector<elem_t> vert(k);
    for (std::uint32_t t = 0; t < k; ++t) vert[t] = g.inv(a_vec[k - 1 - t]);

    // per-path recipes: (is_vertical, fixed element or conj table index, column)
    struct Step {
        bool vertical;
        elem_t fixed;      // vertical: the element itself
        std::uint32_t t;   // horizontal: height (conj table index)
        std::uint32_t s;   // horizontal: column
    };
    auto paths = enumerate_paths(n, k);
    std::vector<std::vector<Step>> recipes;
    std::vector<int> signs;
    for (const auto& p : paths) {
        std::vector<Step> rec;
        std::uint32_t h = 0, v = 0;
        for (bool is_v : p.steps) {
            if (is_v) {
                rec.push_back({true, vert[v], 0, 0});
                ++v;
            } else {
                rec.push_back({false, 0, v, h});
                ++h;
            }
        }
        recipes.push_back(std::move(rec));
        signs.push_back(p.parity);
    }

    Cochain out(g, f.coeff(), n);
    std::vector<elem_t> d(n, 0);
    std::vector<elem_t> args(f.degree());
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        std::uint32_t acc = 0;
        for (std::size_t pi = 0; pi < recipes.size(); ++pi) {
            const auto& rec = recipes[pi];
            for (std::size_t l = 0; l < rec.size(); ++l) {
                const Step& st = rec[l];
                args[l] = st.vertical ? st.fixed : conj_t[st.t][d[st.s]];
            }
            std::uint16_t val = f.at(std::span<const elem_t>(args.data(), args.size()));
            acc += signs[pi] ? mod - val : val;
        }
        out.set_index(idx, acc % mod);
        for (std::size_t j = n; j-- > 0;) {
            if (++d[j] < m) break;
            d[j] = 0;
        }
    }
    return out;
}

/// Report from stokes_check: pass/fail with a witness tuple on failure.
struct StokesReport {
    bool pass = true;
    std::vector<elem_t> witness;  // argument tuple where the two sides differ
    std::uint16_t lhs = 0, rhs = 0;
};

namespace detail {

inline Cochain homotopy_or_self(const std::vector<elem_t>& a_vec, const Cochain& f) {
    return a_vec.empty() ? f : homotopy_multi(a_vec, f);
}

} // namespace detail

/// Verifies the lattice-path Stokes identity for the tuple a_vec = (a_1..a_{k+1}):
///   (-1)^{k+1} h_{a1..a_{k+1}, df} - d h_{a1..a_{k+1}, f}
///     = h_{a2..a_{k+1}, f}
///       + sum_i (-1)^i h_{a1..(a_i a_{i+1})..a_{k+1}, f}
///       + (-1)^{k+1} (h_{a1..a_k, f})^{a_{k+1}},
/// where the empty subscript means f itself. With a single element this is
/// exactly the chain homotopy identity h_{a,df} + d h_{a,f} = f^a - f.
inline StokesReport stokes_check(const std::vector<elem_t>& a_vec, const Cochain& f) {
    const std::size_t len = a_vec.size();
    if (len == 0 || len > 4) throw validation_error("stokes_check: tuple length must be between 1 and 4");
    if (f.degree() < len)
        throw validation_error("stokes_check: cochain degree must be at least the tuple length");
    const std::uint32_t k = static_cast<std::uint32_t>(len) - 1;
    const FiniteGroup& g = f.group();
    const bool odd = (k + 1) % 2 == 1;

    Cochain h_df = homotopy_multi(a_vec, differential(f));
    Cochain d_h = differential(homotopy_multi(a_vec, f));
    Cochain lhs = odd ? sub(neg(h_df), d_h) : sub(h_df, d_h);

    std::vector<elem_t> tail(a_vec.begin() + 1, a_vec.end());
    Cochain rhs = detail::homotopy_or_self(tail, f);
    for (std::uint32_t i = 1; i <= k; ++i) {
        std::vector<elem_t> merged;
        merged.reserve(len - 1);
        for (std::size_t j = 0; j + 1 < i; ++j) merged.push_back(a_vec[j]);
        merged.push_back(g.mul(a_vec[i - 1], a_vec[i]));
        for (std::size_t j = i + 1; j < len; ++j) merged.push_back(a_vec[j]);
        Cochain term = homotopy_multi(merged, f);
        rhs = i % 2 == 1 ? sub(rhs, term) : add(rhs, term);
    }
    std::vector<elem_t> head(a_vec.begin(), a_vec.end() - 1);
    Cochain last = conj_action(detail::homotopy_or_self(head, f), a_vec.back());
    rhs = odd ? sub(rhs, last) : add(rhs, last);

    StokesReport report;
    if (lhs == rhs) return report;
    report.pass = false;
    const std::uint32_t n_out = lhs.degree();
    const std::uint32_t m = g.order();
    std::vector<elem_t> d(n_out, 0);
    for (std::size_t idx = 0; idx < lhs.size(); ++idx) {
        if (lhs.at_index(idx) != rhs.at_index(idx)) {
            report.witness = d;
            report.lhs = lhs.at_index(idx);
            report.rhs = rhs.at_index(idx);
            break;
        }
        for (std::size_t j = n_out; j-- > 0;) {
            if (++d[j] < m) break;
            d[j] = 0;
        }
    }
    return report;
}

} // namespace acs
