#pragma once

// Exact 64-bit integer arithmetic: deterministic primality, factorization,
// Legendre/Jacobi symbols, prime splitting in quadratic fields, and the
// delta invariant obstructing quaternion embeddings.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "acs/errors.hpp"

namespace acs {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

} // namespace detail

/// Deterministic Miller-Rabin, valid for the whole 64-bit range.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline bool is_prime(std::int64_t n) { return n >= 2 && is_prime_u64(static_cast<std::uint64_t>(n)); }

namespace detail {

// Brent-cycle Pollard rho with a deterministic parameter sequence.
inline std::uint64_t pollard_rho(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        std::uint64_t power = 1, lam = 1;
        while (d == 1) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = (mulmod_u64(y, y, n) + c) % n;
            ++lam;
            std::uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

inline void factor_u64(std::uint64_t n, std::map<std::int64_t, int>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out[static_cast<std::int64_t>(n)] += 1;
        return;
    }
    for (std::uint64_t p = 2; p < 100; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                out[static_cast<std::int64_t>(p)] += 1;
                n /= p;
            }
            factor_u64(n, out);
            return;
        }
    }
    std::uint64_t d = pollard_rho(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

} // namespace detail

/// A signed integer together with its complete prime factorization.
struct FactoredInt {
    int sign = 1;                         // +1 or -1
    std::map<std::int64_t, int> factors;  // prime -> exponent, magnitude = product

    std::int64_t value() const {
        std::int64_t v = sign;
        for (auto [p, e] : factors)
            for (int i = 0; i < e; ++i) v *= p;
        return v;
    }
    bool squarefree() const {
        for (auto [p, e] : factors)
            if (e > 1) return false;
        return true;
    }
    std::vector<std::int64_t> prime_support() const {
        std::vector<std::int64_t> ps;
        for (auto [p, e] : factors) ps.push_back(p);
        return ps;
    }
};

inline FactoredInt factorize(std::int64_t n) {
    if (n == 0) throw validation_error("factorize: zero has no factorization");
    FactoredInt f;
    std::uint64_t mag;
    if (n < 0) {
        f.sign = -1;
        mag = static_cast<std::uint64_t>(-(n + 1)) + 1;
    } else {
        mag = static_cast<std::uint64_t>(n);
    }
    detail::factor_u64(mag, f.factors);
    return f;
}

inline bool is_squarefree(std::int64_t n) {
    if (n == 0) return false;
    return factorize(n).squarefree();
}

/// Jacobi symbol (a/m) for odd positive m; equals the Legendre symbol when m is prime.
inline int jacobi(std::int64_t a, std::int64_t m) {
    if (m <= 0 || m % 2 == 0) throw validation_error("jacobi: modulus must be odd and positive");
    a %= m;
    if (a < 0) a += m;
    std::int64_t n = m;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

/// Legendre symbol (a/p). Rejects even or composite p.
inline int legendre(std::int64_t a, std::int64_t p) {
    if (p <= 2 || p % 2 == 0) throw validation_error("legendre: p must be an odd prime, got " + std::to_string(p));
    if (!is_prime(p)) throw validation_error("legendre: " + std::to_string(p) + " is composite");
    return jacobi(a, p);
}

/// The quadratic field Q(sqrt(d)) for squarefree d, d != 0, 1.
struct QuadField {
    std::int64_t d;

    explicit QuadField(std::int64_t d_) : d(d_) {
        if (d == 0 || d == 1) throw validation_error("QuadField: d must be a nonzero integer other than 1");
        if (!is_squarefree(d)) throw validation_error("QuadField: d = " + std::to_string(d) + " is not squarefree");
    }
};

enum class SplitType { Split, Inert, Ramified };

inline const char* to_string(SplitType s) {
    switch (s) {
        case SplitType::Split: return "split";
        case SplitType::Inert: return "inert";
        default: return "ramified";
    }
}

/// Behaviour of an odd prime p in Q(sqrt(d)). p = 2 is deliberately unsupported.
inline SplitType split_type_quad(std::int64_t p, const QuadField& field) {
    if (p == 2) throw validation_error("split_type_quad: p = 2 is unsupported");
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw validation_error("split_type_quad: p must be an odd prime, got " + std::to_string(p));
    if (field.d % p == 0) return SplitType::Ramified;
    return legendre(field.d, p) == 1 ? SplitType::Split : SplitType::Inert;
}

namespace detail {

inline void check_delta_operand(std::int64_t d, const char* which) {
    const std::string name(which);
    if (d <= 0) throw validation_error("delta_invariant: " + name + " must be positive");
    if (d % 2 == 0) throw validation_error("delta_invariant: " + name + " must be odd");
    if (d % 4 != 1) throw validation_error("delta_invariant: " + name + " must be 1 mod 4, got " + std::to_string(d));
    if (!is_squarefree(d)) throw validation_error("delta_invariant: " + name + " must be squarefree");
}

} // namespace detail

/// Product of (d2/p) over the primes p dividing d1. Symmetric in its arguments.
/// Both arguments must be positive, odd, squarefree, coprime, and 1 mod 4.
inline int delta_invariant(std::int64_t d1, std::int64_t d2) {
    detail::check_delta_operand(d1, "d1");
    detail::check_delta_operand(d2, "d2");
    if (std::gcd(d1, d2) != 1) throw validation_error("delta_invariant: d1 and d2 must be coprime");
    int delta = 1;
    for (std::int64_t p : factorize(d1).prime_support()) delta *= legendre(d2, p);
    return delta;
}

} // namespace acs
