#pragma once

// Integer polynomials in one variable: a small parser for displayed
// polynomials, a canonical printer, exact discriminants via fraction-free
// Sylvester determinants, and factorization-identity checks mod p.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "acs/errors.hpp"

namespace acs {

/// Dense integer polynomial, constant term first. The zero polynomial is the
/// empty coefficient vector; otherwise the leading coefficient is nonzero.
struct IntPoly {
    std::vector<std::int64_t> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    std::int64_t leading() const { return coeffs.empty() ? 0 : coeffs.back(); }
    std::int64_t coeff(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : 0; }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs == b.coeffs; }
};

namespace detail {

inline constexpr std::size_t max_parse_degree = 64;

struct PolyParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() { return text[pos]; }

    std::int64_t parse_uint() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw parse_error("expected digits", pos);
        std::int64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            int digit = text[pos] - '0';
            if (__builtin_mul_overflow(v, std::int64_t{10}, &v) || __builtin_add_overflow(v, std::int64_t{digit}, &v))
                throw parse_error("integer overflows 64 bits", start);
            ++pos;
        }
        return v;
    }

    // One term: [coefficient]['*']['x'['^' exponent]]
    void parse_term(int sign, std::vector<std::int64_t>& acc) {
        skip_ws();
        std::size_t term_start = pos;
        std::int64_t coef = 1;
        bool saw_coef = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coef = parse_uint();
            saw_coef = true;
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            if (!saw_coef) throw parse_error("'*' without a coefficient", pos);
            ++pos;
            skip_ws();
        }
        std::size_t exp = 0;
        if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) {
            ++pos;
            exp = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::int64_t e = parse_uint();
                if (e < 0 || e > static_cast<std::int64_t>(max_parse_degree))
                    throw parse_error("exponent out of range", term_start);
                exp = static_cast<std::size_t>(e);
            }
        } else if (!saw_coef) {
            throw parse_error("expected a term", term_start);
        }
        if (acc.size() < exp + 1) acc.resize(exp + 1, 0);
        std::int64_t signed_coef = sign > 0 ? coef : -coef;
        if (__builtin_add_overflow(acc[exp], signed_coef, &acc[exp]))
            throw parse_error("coefficient overflows 64 bits", term_start);
    }
};

} // namespace detail

/// Parse a sum of integer terms like "x^4 - x - 1" or "3*x^2 + 5".
inline IntPoly poly_parse(std::string_view text) {
    detail::PolyParser p{text};
    std::vector<std::int64_t> acc;
    if (p.at_end()) throw parse_error("empty polynomial", 0);
    int sign = 1;
    p.skip_ws();
    if (p.peek() == '+' || p.peek() == '-') {
        sign = p.peek() == '-' ? -1 : 1;
        ++p.pos;
    }
    p.parse_term(sign, acc);
    while (!p.at_end()) {
        char c = p.peek();
        if (c != '+' && c != '-') throw parse_error("expected '+' or '-'", p.pos);
        ++p.pos;
        p.parse_term(c == '-' ? -1 : 1, acc);
    }
    IntPoly out{std::move(acc)};
    out.trim();
    return out;
}

/// Canonical printer; poly_parse(poly_print(p)) == p.
inline std::string poly_print(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        std::int64_t c = p.coeffs[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        // int64 min cannot occur here: magnitudes come from parsed/constructed values
        std::uint64_t mag = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
        if (mag != 1 || k == 0) out += std::to_string(mag);
        if (k >= 1) {
            out += "x";
            if (k >= 2) out += "^" + std::to_string(k);
        }
    }
    return out;
}

namespace detail {

using int128 = __int128;

inline int128 checked_mul_i128(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw resource_error("discriminant: intermediate exceeds 128-bit budget");
    return r;
}

inline int128 checked_sub_i128(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw resource_error("discriminant: intermediate exceeds 128-bit budget");
    return r;
}

// Fraction-free (Bareiss) determinant over exact integers.
inline int128 bareiss_det(std::vector<std::vector<int128>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    int128 prev = 1;
    for (std::size_t r = 0; r + 1 < n; ++r) {
        if (m[r][r] == 0) {
            std::size_t swap_row = r + 1;
            while (swap_row < n && m[swap_row][r] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[r], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = r + 1; j < n; ++j) {
                int128 num = checked_sub_i128(checked_mul_i128(m[r][r], m[i][j]), checked_mul_i128(m[i][r], m[r][j]));
                m[i][j] = num / prev;  // exact by Bareiss
            }
            m[i][r] = 0;
        }
        prev = m[r][r];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

inline std::int64_t narrow_i128(int128 v, const char* what) {
    if (v > static_cast<int128>(INT64_MAX) || v < static_cast<int128>(INT64_MIN))
        throw resource_error(std::string(what) + ": result exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

inline int128 sylvester_det(const IntPoly& p, const IntPoly& q) {
    const std::size_t n = static_cast<std::size_t>(p.degree());
    const std::size_t m = static_cast<std::size_t>(q.degree());
    const std::size_t dim = n + m;
    std::vector<std::vector<int128>> s(dim, std::vector<int128>(dim, 0));
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t k = 0; k <= n; ++k) s[row][row + k] = p.coeffs[n - k];
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t k = 0; k <= m; ++k) s[m + row][row + k] = q.coeffs[m - k];
    return bareiss_det(std::move(s));
}

} // namespace detail

/// Resultant of p and q via the Sylvester determinant, exact.
inline std::int64_t poly_resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) throw validation_error("resultant: arguments must be nonzero");
    if (p.degree() == 0 && q.degree() == 0) return 1;
    return detail::narrow_i128(detail::sylvester_det(p, q), "resultant");
}

/// disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lead(p). Degree cap 8 keeps the
/// Sylvester matrix at most 15x15.
inline std::int64_t poly_discriminant(const IntPoly& p) {
    const int n = p.degree();
    if (n < 1) throw validation_error("discriminant: polynomial must have degree >= 1");
    if (n > 8) throw validation_error("discriminant: degree cap is 8, got " + std::to_string(n));
    if (n == 1) return 1;
    IntPoly dp;
    dp.coeffs.resize(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        dp.coeffs[static_cast<std::size_t>(k - 1)] = p.coeffs[static_cast<std::size_t>(k)] * k;
    dp.trim();
    detail::int128 disc = detail::sylvester_det(p, dp) / p.leading();  // exact: lead(p) divides Res(p, p')
    if ((static_cast<std::int64_t>(n) * (n - 1) / 2) % 2 == 1) disc = -disc;
    return detail::narrow_i128(disc, "discriminant");
}

/// One factor (x + shift)^exponent of a product expression mod p.
struct LinearPower {
    std::int64_t shift;
    unsigned exponent;
};

namespace detail {

inline std::vector<std::uint64_t> poly_mul_mod(const std::vector<std::uint64_t>& a,
                                               const std::vector<std::uint64_t>& b, std::uint64_t p) {
    std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    return out;
}

} // namespace detail

/// Does lhs equal the expanded product of (x + a_i)^(e_i) coefficientwise mod p?
inline bool poly_eq_mod(const IntPoly& lhs, const std::vector<LinearPower>& rhs, std::uint32_t p) {
    if (p < 2) throw validation_error("poly_eq_mod: modulus must be at least 2");
    const std::uint64_t m = p;
    std::vector<std::uint64_t> prod{1 % m};
    for (const auto& f : rhs) {
        std::int64_t s = f.shift % static_cast<std::int64_t>(m);
        if (s < 0) s += static_cast<std::int64_t>(m);
        std::vector<std::uint64_t> base{static_cast<std::uint64_t>(s), 1 % m};
        unsigned e = f.exponent;
        while (e) {  // repeated squaring
            if (e & 1) prod = detail::poly_mul_mod(prod, base, m);
            e >>= 1;
            if (e) base = detail::poly_mul_mod(base, base, m);
        }
    }
    std::size_t width = std::max(prod.size(), lhs.coeffs.size());
    for (std::size_t k = 0; k < width; ++k) {
        std::uint64_t r = k < prod.size() ? prod[k] % m : 0;
        std::int64_t c = lhs.coeff(k) % static_cast<std::int64_t>(m);
        if (c < 0) c += static_cast<std::int64_t>(m);
        if (r != static_cast<std::uint64_t>(c)) return false;
    }
    return true;
}

} // namespace acs
