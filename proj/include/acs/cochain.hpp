#pragma once

// Inhomogeneous group cochains with Z/n coefficients: the bar differential,
// the conjugation action, and cup products. Values are stored densely in
// row-major tuple order with the first argument most significant.

#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "acs/errors.hpp"
#include "acs/group.hpp"

namespace acs {

inline constexpr std::uint32_t max_cochain_degree = 6;
inline constexpr std::size_t max_cochain_cells = std::size_t{1} << 26;
inline constexpr std::uint32_t max_coeff_modulus = 1u << 15;

/// Z/n as a coefficient module: the action of each group element is an
/// additive automorphism, i.e. multiplication by a unit mod n.
struct CoeffModule {
    std::uint32_t n = 0;
    std::vector<std::uint16_t> units;  // per group element
    bool trivial = true;

    friend bool operator==(const CoeffModule& a, const CoeffModule& b) {
        return a.n == b.n && a.units == b.units;
    }
};

inline CoeffModule make_coeff_module(const FiniteGroup& g, std::uint32_t n, std::vector<std::uint16_t> units) {
    if (n == 0 || n > max_coeff_modulus)
        throw validation_error("coefficients: modulus must be between 1 and " + std::to_string(max_coeff_modulus));
    if (units.size() != g.order()) throw validation_error("coefficients: need one unit per group element");
    for (std::uint16_t u : units)
        if (u >= n || std::gcd(static_cast<std::uint32_t>(u), n) != 1)
            throw validation_error("coefficients: action value " + std::to_string(u) + " is not a unit mod " +
                                   std::to_string(n));
    if (units[FiniteGroup::identity()] != 1 % n)
        throw validation_error("coefficients: identity must act trivially");
    for (elem_t a = 0; a < g.order(); ++a)
        for (elem_t b = 0; b < g.order(); ++b)
            if (units[g.mul(a, b)] != units[a] * units[b] % n)
                throw validation_error("coefficients: action is not multiplicative at (" + g.label(a) + ", " +
                                       g.label(b) + ")");
    bool trivial = true;
    for (std::uint16_t u : units) trivial = trivial && u == 1 % n;
    return CoeffModule{n, std::move(units), trivial};
}

inline CoeffModule trivial_coeff(const FiniteGroup& g, std::uint32_t n) {
    return make_coeff_module(g, n, std::vector<std::uint16_t>(g.order(), static_cast<std::uint16_t>(1 % n)));
}

/// Coefficients twisted by the group's built-in sign character; -1 acts as n-1.
inline CoeffModule sign_coeff(const FiniteGroup& g, std::uint32_t n) {
    auto chi = sign_character(g);
    std::vector<std::uint16_t> units(g.order());
    for (std::size_t i = 0; i < units.size(); ++i)
        units[i] = static_cast<std::uint16_t>(chi[i] == 1 ? 1 % n : (n - 1) % n);
    return make_coeff_module(g, n, std::move(units));
}

/// A degree-i cochain: a total table over G^i with entries in Z/n.
class Cochain {
public:
    Cochain(FiniteGroup g, CoeffModule coeff, std::uint32_t degree)
        : group_(std::move(g)), coeff_(std::move(coeff)), degree_(degree) {
        if (coeff_.units.size() != group_.order()) throw validation_error("cochain: coefficients built for another group");
        if (degree > max_cochain_degree)
            throw validation_error("cochain: degree cap is " + std::to_string(max_cochain_degree));
        std::size_t cells = 1;
        for (std::uint32_t i = 0; i < degree; ++i) {
            cells *= group_.order();
            if (cells > max_cochain_cells) throw resource_error("cochain: table exceeds the cell budget");
        }
        vals_.assign(cells, 0);
    }

    static Cochain from_values(FiniteGroup g, CoeffModule coeff, std::uint32_t degree,
                               std::vector<std::uint16_t> values) {
        Cochain c(std::move(g), std::move(coeff), degree);
        if (values.size() != c.vals_.size()) throw validation_error("cochain: wrong number of values");
        for (auto& v : values) v = static_cast<std::uint16_t>(v % c.coeff_.n);
        c.vals_ = std::move(values);
        return c;
    }

    const FiniteGroup& group() const { return group_; }
    const CoeffModule& coeff() const { return coeff_; }
    std::uint32_t modulus() const { return coeff_.n; }
    std::uint32_t degree() const { return degree_; }
    std::size_t size() const { return vals_.size(); }
    std::span<const std::uint16_t> values() const { return vals_; }

    std::uint16_t at_index(std::size_t idx) const { return vals_[idx]; }
    void set_index(std::size_t idx, std::uint32_t v) { vals_[idx] = static_cast<std::uint16_t>(v % coeff_.n); }

    std::size_t index_of(std::span<const elem_t> args) const {
        std::size_t idx = 0;
        for (elem_t a : args) idx = idx * group_.order() + a;
        return idx;
    }
    std::uint16_t at(std::span<const elem_t> args) const { return vals_[index_of(args)]; }
    std::uint16_t at(std::initializer_list<elem_t> args) const {
        return at(std::span<const elem_t>(args.begin(), args.size()));
    }
    void set(std::initializer_list<elem_t> args, std::uint32_t v) {
        set_index(index_of(std::span<const elem_t>(args.begin(), args.size())), v);
    }

    bool is_zero() const {
        for (auto v : vals_)
            if (v) return false;
        return true;
    }

    /// Vanishes whenever any argument is the identity.
    bool is_normalized() const {
        const std::uint32_t m = group_.order();
        std::vector<elem_t> digits(degree_, 0);
        for (std::size_t idx = 0; idx < vals_.size(); ++idx) {
            bool degenerate = false;
            for (elem_t d : digits) degenerate = degenerate || d == FiniteGroup::identity();
            if (degenerate && vals_[idx] != 0) return false;
            for (std::size_t j = degree_; j-- > 0;) {
                if (++digits[j] < m) break;
                digits[j] = 0;
            }
        }
        return true;
    }

    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.degree_ == b.degree_ && a.coeff_ == b.coeff_ && a.group_ == b.group_ && a.vals_ == b.vals_;
    }

private:
    FiniteGroup group_;
    CoeffModule coeff_;
    std::uint32_t degree_;
    std::vector<std::uint16_t> vals_;
};

namespace detail {

inline void require_same_shape(const Cochain& a, const Cochain& b, const char* op) {
    if (!(a.group() == b.group())) throw validation_error(std::string(op) + ": cochains live on different groups");
    if (!(a.coeff() == b.coeff())) throw validation_error(std::string(op) + ": coefficient modules differ");
    if (a.degree() != b.degree()) throw validation_error(std::string(op) + ": degrees differ");
}

} // namespace detail

inline Cochain add(const Cochain& a, const Cochain& b) {
    detail::require_same_shape(a, b, "add");
    Cochain out(a.group(), a.coeff(), a.degree());
    for (std::size_t i = 0; i < a.size(); ++i) out.set_index(i, a.at_index(i) + b.at_index(i));
    return out;
}

inline Cochain sub(const Cochain& a, const Cochain& b) {
    detail::require_same_shape(a, b, "sub");
    const std::uint32_t n = a.modulus();
    Cochain out(a.group(), a.coeff(), a.degree());
    for (std::size_t i = 0; i < a.size(); ++i) out.set_index(i, a.at_index(i) + n - b.at_index(i));
    return out;
}

inline Cochain neg(const Cochain& a) {
    const std::uint32_t n = a.modulus();
    Cochain out(a.group(), a.coeff(), a.degree());
    for (std::size_t i = 0; i < a.size(); ++i) out.set_index(i, n - a.at_index(i));
    return out;
}

/// The bar differential
///   df(g1..g_{i+1}) = g1.f(g2..) + sum_k (-1)^k f(..g_k g_{k+1}..)
///                     + (-1)^{i+1} f(g1..g_i).
inline Cochain differential(const Cochain& f) {
    const std::uint32_t i = f.degree();
    if (i + 1 > max_cochain_degree)
        throw validation_error("differential: output degree would exceed the cap of " +
                               std::to_string(max_cochain_degree));
    const FiniteGroup& g = f.group();
    const std::uint32_t m = g.order();
    const std::uint32_t n = f.modulus();
    Cochain out(g, f.coeff(), i + 1);

    std::vector<std::size_t> pw(i + 2);
    pw[0] = 1;
    for (std::uint32_t j = 1; j <= i + 1; ++j) pw[j] = pw[j - 1] * m;

    std::vector<elem_t> d(i + 1, 0);
    std::vector<std::size_t> prefix(i + 2, 0);  // prefix[j] = index of d[0..j-1]
    std::vector<std::size_t> suffix(i + 2, 0);  // suffix[j] = index of d[j..i], place value pw[i-j]
    const bool last_neg = (i + 1) % 2 == 1;
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        for (std::uint32_t j = 0; j <= i; ++j) prefix[j + 1] = prefix[j] * m + d[j];
        suffix[i + 1] = 0;
        for (std::uint32_t j = i + 1; j-- > 0;) suffix[j] = d[j] * pw[i - j] + suffix[j + 1];

        std::uint32_t acc = f.coeff().units[d[0]] * f.at_index(suffix[1]) % n;
        for (std::uint32_t k = 1; k <= i; ++k) {
            std::size_t merged = (prefix[k - 1] * m + g.mul(d[k - 1], d[k])) * pw[i - k] + suffix[k + 1];
            std::uint16_t v = f.at_index(merged);
            acc += (k % 2 == 1) ? n - v : v;
        }
        std::uint16_t tail = f.at_index(prefix[i + 1] / m);
        acc += last_neg ? n - tail : tail;
        out.set_index(idx, acc);

        for (std::size_t j = i + 1; j-- > 0;) {
            if (++d[j] < m) break;
            d[j] = 0;
        }
    }
    return out;
}

/// Right conjugation action f^a = a^{-1} . (f o Ad_a). Commutes with the
/// differential.
inline Cochain conj_action(const Cochain& f, elem_t a) {
    const FiniteGroup& g = f.group();
    const std::uint32_t m = g.order();
    const std::uint32_t u = f.coeff().units[g.inv(a)];
    Cochain out(g, f.coeff(), f.degree());
    std::vector<elem_t> cmap(m);
    for (elem_t x = 0; x < m; ++x) cmap[x] = g.conj(a, x);

    std::vector<elem_t> d(f.degree(), 0);
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        std::size_t src = 0;
        for (elem_t x : d) src = src * m + cmap[x];
        out.set_index(idx, u * f.at_index(src));
        for (std::size_t j = f.degree(); j-- > 0;) {
            if (++d[j] < m) break;
            d[j] = 0;
        }
    }
    return out;
}

/// Front-face/back-face cup product
///   (a cup b)(g1..g_{p+q}) = a(g1..gp) * ((g1...gp) . b(g_{p+1}..g_{p+q})),
/// with values in the module carrying the product of the two actions. Under
/// the bar differential it satisfies the graded Leibniz rule
/// d(a cup b) = da cup b + (-1)^p a cup db.
inline Cochain cup(const Cochain& a, const Cochain& b) {
    if (!(a.group() == b.group())) throw validation_error("cup: cochains live on different groups");
    if (a.modulus() != b.modulus()) throw validation_error("cup: moduli differ");
    const std::uint32_t p = a.degree(), q = b.degree();
    if (p + q > max_cochain_degree)
        throw validation_error("cup: output degree would exceed the cap of " + std::to_string(max_cochain_degree));
    const FiniteGroup& g = a.group();
    const std::uint32_t m = g.order();
    const std::uint32_t n = a.modulus();
    CoeffModule out_coeff = a.coeff();
    if (!b.coeff().trivial) {
        std::vector<std::uint16_t> units(m);
        for (elem_t x = 0; x < m; ++x)
            units[x] = static_cast<std::uint16_t>(a.coeff().units[x] * b.coeff().units[x] % n);
        out_coeff = make_coeff_module(g, n, std::move(units));
    }
    Cochain out(g, std::move(out_coeff), p + q);
    const std::size_t bsz = b.size();
    std::vector<elem_t> front(p, 0);
    for (std::size_t ia = 0; ia < a.size(); ++ia) {
        elem_t prefix = FiniteGroup::identity();
        for (elem_t x : front) prefix = g.mul(prefix, x);
        const std::uint32_t av = a.at_index(ia) * b.coeff().units[prefix] % n;
        std::size_t base = ia * bsz;
        for (std::size_t ib = 0; ib < bsz; ++ib) out.set_index(base + ib, av * b.at_index(ib) % n);
        for (std::size_t j = p; j-- > 0;) {
            if (++front[j] < m) break;
            front[j] = 0;
        }
    }
    return out;
}

/// Uniform random cochain; the seed fully determines the table.
inline Cochain random_cochain(const FiniteGroup& g, const CoeffModule& coeff, std::uint32_t degree,
                              std::mt19937_64& rng) {
    Cochain c(g, coeff, degree);
    for (std::size_t i = 0; i < c.size(); ++i)
        c.set_index(i, static_cast<std::uint32_t>(rng() % coeff.n));
    return c;
}

} // namespace acs
