#pragma once

// Explicit finite groups as fully stored Cayley tables, plus verified
// homomorphisms. Elements are dense ids 0..order-1 with id 0 the identity.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "acs/errors.hpp"

namespace acs {

using elem_t = std::uint16_t;

inline constexpr std::uint32_t max_group_order = 64;

class FiniteGroup {
public:
    FiniteGroup() = default;

    /// Validates closure, identity at id 0, inverses and associativity.
    FiniteGroup(std::string name, std::uint32_t order, std::vector<elem_t> table,
                std::vector<std::string> labels = {}) {
        if (order == 0) throw validation_error("group: order must be positive");
        if (order > max_group_order)
            throw validation_error("group: order " + std::to_string(order) + " exceeds the stored-table cap of " +
                                   std::to_string(max_group_order));
        if (table.size() != static_cast<std::size_t>(order) * order)
            throw validation_error("group: multiplication table must have order^2 entries");
        auto d = std::make_shared<Data>();
        d->name = std::move(name);
        d->order = order;
        d->mul = std::move(table);
        if (labels.empty()) {
            d->labels.reserve(order);
            for (std::uint32_t g = 0; g < order; ++g) d->labels.push_back(std::to_string(g));
        } else {
            if (labels.size() != order) throw validation_error("group: need one label per element");
            d->labels = std::move(labels);
        }
        validate(*d);
        d->inv.resize(order);
        for (elem_t g = 0; g < order; ++g)
            for (elem_t h = 0; h < order; ++h)
                if (d->mul[static_cast<std::size_t>(g) * order + h] == 0) d->inv[g] = h;
        data_ = std::move(d);
    }

    std::uint32_t order() const { return data_->order; }
    const std::string& name() const { return data_->name; }
    const std::string& label(elem_t g) const { return data_->labels[g]; }

    elem_t mul(elem_t a, elem_t b) const { return data_->mul[static_cast<std::size_t>(a) * data_->order + b]; }
    elem_t inv(elem_t a) const { return data_->inv[a]; }
    static constexpr elem_t identity() { return 0; }

    elem_t conj(elem_t a, elem_t g) const { return mul(mul(a, g), inv(a)); }

    int element_order(elem_t g) const {
        int k = 1;
        elem_t x = g;
        while (x != 0) {
            x = mul(x, g);
            ++k;
        }
        return k;
    }

    bool abelian() const {
        for (elem_t a = 0; a < order(); ++a)
            for (elem_t b = a + 1; b < order(); ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    /// Structural equality: same order and same multiplication table.
    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.data_ == b.data_ || (a.data_->order == b.data_->order && a.data_->mul == b.data_->mul);
    }

private:
    struct Data {
        std::string name;
        std::uint32_t order = 0;
        std::vector<elem_t> mul;
        std::vector<elem_t> inv;
        std::vector<std::string> labels;
    };

    static void validate(const Data& d) {
        const std::uint32_t n = d.order;
        auto at = [&](elem_t a, elem_t b) { return d.mul[static_cast<std::size_t>(a) * n + b]; };
        for (std::size_t i = 0; i < d.mul.size(); ++i)
            if (d.mul[i] >= n)
                throw validation_error("group '" + d.name + "': table entry " + std::to_string(d.mul[i]) +
                                       " out of range (not closed)");
        for (elem_t g = 0; g < n; ++g) {
            if (at(0, g) != g || at(g, 0) != g)
                throw validation_error("group '" + d.name + "': element 0 is not a two-sided identity at " +
                                       d.labels[g]);
        }
        for (elem_t g = 0; g < n; ++g) {
            bool has_inv = false;
            for (elem_t h = 0; h < n; ++h)
                if (at(g, h) == 0 && at(h, g) == 0) has_inv = true;
            if (!has_inv)
                throw validation_error("group '" + d.name + "': no inverse for " + d.labels[g]);
        }
        for (elem_t a = 0; a < n; ++a)
            for (elem_t b = 0; b < n; ++b)
                for (elem_t c = 0; c < n; ++c)
                    if (at(at(a, b), c) != at(a, at(b, c)))
                        throw validation_error("group '" + d.name + "': associativity fails at (" + d.labels[a] +
                                               ", " + d.labels[b] + ", " + d.labels[c] + ")");
    }

    std::shared_ptr<const Data> data_;
};

/// A verified homomorphism between explicit groups.
struct GroupHom {
    FiniteGroup source;
    FiniteGroup target;
    std::vector<elem_t> map;  // source id -> target id
    bool surjective = false;

    elem_t operator()(elem_t g) const { return map[g]; }
};

/// Checks the homomorphism property on all pairs; the failure witness names
/// the first offending pair.
inline GroupHom verify_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                                    std::vector<elem_t> map) {
    if (map.size() != source.order()) throw validation_error("homomorphism: map must be total on the source");
    for (elem_t g : map)
        if (g >= target.order()) throw validation_error("homomorphism: image out of range");
    for (elem_t a = 0; a < source.order(); ++a)
        for (elem_t b = 0; b < source.order(); ++b)
            if (map[source.mul(a, b)] != target.mul(map[a], map[b]))
                throw validation_error("homomorphism fails at pair (" + source.label(a) + ", " + source.label(b) +
                                       "): map(ab) = " + target.label(map[source.mul(a, b)]) + " but map(a)map(b) = " +
                                       target.label(target.mul(map[a], map[b])));
    std::vector<bool> hit(target.order(), false);
    for (elem_t g : map) hit[g] = true;
    bool surjective = true;
    for (bool h : hit) surjective = surjective && h;
    return GroupHom{source, target, std::move(map), surjective};
}

namespace detail {

inline std::vector<elem_t> cyclic_table(std::uint32_t n) {
    std::vector<elem_t> t(static_cast<std::size_t>(n) * n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = static_cast<elem_t>((a + b) % n);
    return t;
}

// Ids 0..3 are (0,0), (1,0), (0,1), (1,1) with componentwise addition.
inline FiniteGroup make_v4() {
    std::vector<elem_t> t(16);
    for (elem_t a = 0; a < 4; ++a)
        for (elem_t b = 0; b < 4; ++b) t[static_cast<std::size_t>(a) * 4 + b] = a ^ b;
    return FiniteGroup("V4", 4, std::move(t), {"(0,0)", "(1,0)", "(0,1)", "(1,1)"});
}

// Ids: e, r, r2, r3, s, rs, r2s, r3s with r^4 = s^2 = e and s r s = r^-1.
inline FiniteGroup make_d4() {
    auto id = [](int rot, int ref) { return static_cast<elem_t>(ref * 4 + rot); };
    std::vector<elem_t> t(64);
    for (int r1 = 0; r1 < 4; ++r1)
        for (int f1 = 0; f1 < 2; ++f1)
            for (int r2 = 0; r2 < 4; ++r2)
                for (int f2 = 0; f2 < 2; ++f2) {
                    // (r^r1 s^f1)(r^r2 s^f2) = r^(r1 + r2 or r1 - r2) s^(f1 xor f2)
                    int rot = f1 ? (r1 - r2 + 4) % 4 : (r1 + r2) % 4;
                    t[static_cast<std::size_t>(id(r1, f1)) * 8 + id(r2, f2)] = id(rot, f1 ^ f2);
                }
    return FiniteGroup("D4", 8, std::move(t), {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"});
}

// Ids: 1, -1, i, -i, j, -j, k, -k.
inline FiniteGroup make_q8() {
    // basis: 0 -> 1, 1 -> i, 2 -> j, 3 -> k; element = (sign, basis)
    auto id = [](int sign, int basis) { return static_cast<elem_t>(basis * 2 + (sign < 0 ? 1 : 0)); };
    auto base_mul = [](int a, int b, int& sign) -> int {
        static const int tbl[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        sign = sgn[a][b];
        return tbl[a][b];
    };
    std::vector<elem_t> t(64);
    for (int a = 0; a < 4; ++a)
        for (int sa : {1, -1})
            for (int b = 0; b < 4; ++b)
                for (int sb : {1, -1}) {
                    int s;
                    int c = base_mul(a, b, s);
                    t[static_cast<std::size_t>(id(sa, a)) * 8 + id(sb, b)] = id(sa * sb * s, c);
                }
    return FiniteGroup("Q8", 8, std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

// Permutations of {0,1,2,3} in lexicographic one-line order; pq acts as
// "apply q, then p". The identity 0123 is id 0.
inline FiniteGroup make_s4() {
    std::vector<std::array<int, 4>> perms;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::array<int, 4>& q) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == q) return static_cast<elem_t>(i);
        throw error("internal: permutation lookup failed");
    };
    std::vector<elem_t> t(24 * 24);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < 24; ++a) {
        std::string lab;
        for (int v : perms[a]) lab += static_cast<char>('0' + v);
        labels.push_back(lab);
        for (std::size_t b = 0; b < 24; ++b) {
            std::array<int, 4> c;
            for (int i = 0; i < 4; ++i) c[i] = perms[a][perms[b][i]];
            t[a * 24 + b] = index_of(c);
        }
    }
    return FiniteGroup("S4", 24, std::move(t), std::move(labels));
}

struct Mat2F3 {
    int a, b, c, d;  // row major
    int det() const { return ((a * d - b * c) % 3 + 3) % 3; }
    friend bool operator==(const Mat2F3& x, const Mat2F3& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    Mat2F3 operator*(const Mat2F3& o) const {
        return Mat2F3{(a * o.a + b * o.c) % 3, (a * o.b + b * o.d) % 3, (c * o.a + d * o.c) % 3,
                      (c * o.b + d * o.d) % 3};
    }
};

inline std::vector<Mat2F3> gl2f3_elements() {
    std::vector<Mat2F3> ms;
    ms.push_back({1, 0, 0, 1});  // identity first
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) {
                    Mat2F3 m{a, b, c, d};
                    if (m.det() != 0 && !(m == ms[0])) ms.push_back(m);
                }
    return ms;
}

// Invertible 2x2 matrices over the 3-element field, identity first then
// lexicographic; labels are the four entries row-major.
inline FiniteGroup make_gl2f3() {
    auto ms = gl2f3_elements();
    const std::size_t n = ms.size();
    auto index_of = [&](const Mat2F3& m) {
        for (std::size_t i = 0; i < n; ++i)
            if (ms[i] == m) return static_cast<elem_t>(i);
        throw error("internal: matrix lookup failed");
    };
    std::vector<elem_t> t(n * n);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& m = ms[i];
        labels.push_back(std::to_string(m.a) + std::to_string(m.b) + std::to_string(m.c) + std::to_string(m.d));
        for (std::size_t j = 0; j < n; ++j) t[i * n + j] = index_of(ms[i] * ms[j]);
    }
    return FiniteGroup("GL2F3", static_cast<std::uint32_t>(n), std::move(t), std::move(labels));
}

inline FiniteGroup product_group(const FiniteGroup& A, const FiniteGroup& B, const std::string& name) {
    const std::uint32_t n = A.order() * B.order();
    if (n > max_group_order)
        throw validation_error("group: product order " + std::to_string(n) + " exceeds the cap of " +
                               std::to_string(max_group_order));
    std::vector<elem_t> t(static_cast<std::size_t>(n) * n);
    std::vector<std::string> labels(n);
    auto id = [&](elem_t a, elem_t b) { return static_cast<elem_t>(a * B.order() + b); };
    for (elem_t a1 = 0; a1 < A.order(); ++a1)
        for (elem_t b1 = 0; b1 < B.order(); ++b1) {
            labels[id(a1, b1)] = A.label(a1) + "|" + B.label(b1);
            for (elem_t a2 = 0; a2 < A.order(); ++a2)
                for (elem_t b2 = 0; b2 < B.order(); ++b2)
                    t[static_cast<std::size_t>(id(a1, b1)) * n + id(a2, b2)] = id(A.mul(a1, a2), B.mul(b1, b2));
        }
    return FiniteGroup(name, n, std::move(t), std::move(labels));
}

} // namespace detail

/// Builds a named group: "Z/n" (n <= 64), "V4", "D4", "Q8", "S4", "GL2F3",
/// or direct products joined with 'x', e.g. "Z/2xZ/4".
inline FiniteGroup construct_group(std::string_view spec) {
    auto sep = spec.find('x');
    if (sep != std::string_view::npos) {
        FiniteGroup left = construct_group(spec.substr(0, sep));
        FiniteGroup right = construct_group(spec.substr(sep + 1));
        return detail::product_group(left, right, std::string(spec));
    }
    if (spec.rfind("Z/", 0) == 0) {
        std::uint32_t n = 0;
        for (char c : spec.substr(2)) {
            if (c < '0' || c > '9') throw validation_error("unknown group name '" + std::string(spec) + "'");
            n = n * 10 + static_cast<std::uint32_t>(c - '0');
            if (n > max_group_order) break;
        }
        if (n == 0 || n > max_group_order)
            throw validation_error("cyclic group order must be between 1 and " + std::to_string(max_group_order));
        return FiniteGroup(std::string(spec), n, detail::cyclic_table(n));
    }
    if (spec == "V4") return detail::make_v4();
    if (spec == "D4") return detail::make_d4();
    if (spec == "Q8") return detail::make_q8();
    if (spec == "S4") return detail::make_s4();
    if (spec == "GL2F3") return detail::make_gl2f3();
    throw validation_error("unknown group name '" + std::string(spec) + "'");
}

/// Builds a group from an explicit Cayley table (row-major, identity at id 0).
inline FiniteGroup construct_group(std::uint32_t order, std::vector<elem_t> table,
                                   std::vector<std::string> labels = {}, std::string name = "custom") {
    return FiniteGroup(std::move(name), order, std::move(table), std::move(labels));
}

/// Generates the closure of a list of permutations (each a vector mapping
/// point -> image) and returns it as an explicit group. The identity gets
/// id 0; the rest are numbered in deterministic breadth-first order.
inline FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& generators,
                                           std::string name = "perm-group") {
    if (generators.empty()) throw validation_error("permutation group: need at least one generator");
    const std::size_t deg = generators[0].size();
    for (const auto& g : generators) {
        if (g.size() != deg) throw validation_error("permutation group: generators act on different point counts");
        std::vector<bool> seen(deg, false);
        for (int v : g) {
            if (v < 0 || static_cast<std::size_t>(v) >= deg || seen[static_cast<std::size_t>(v)])
                throw validation_error("permutation group: generator is not a permutation");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
    std::vector<std::vector<int>> elems;
    std::map<std::vector<int>, elem_t> index;
    std::vector<int> id(deg);
    for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);
    elems.push_back(id);
    index[id] = 0;
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : generators) {
            std::vector<int> prod(deg);
            for (std::size_t i = 0; i < deg; ++i) prod[i] = g[static_cast<std::size_t>(elems[head][i])];
            if (index.count(prod)) continue;
            if (elems.size() >= max_group_order)
                throw validation_error("permutation group: closure exceeds the order cap of " +
                                       std::to_string(max_group_order));
            index[prod] = static_cast<elem_t>(elems.size());
            elems.push_back(std::move(prod));
        }
    }
    const std::uint32_t n = static_cast<std::uint32_t>(elems.size());
    std::vector<elem_t> table(static_cast<std::size_t>(n) * n);
    std::vector<std::string> labels(n);
    for (elem_t a = 0; a < n; ++a) {
        std::string lab;
        for (int v : elems[a]) lab += (lab.empty() ? "" : ",") + std::to_string(v);
        labels[a] = lab;
        for (elem_t b = 0; b < n; ++b) {
            std::vector<int> prod(deg);
            for (std::size_t i = 0; i < deg; ++i) prod[i] = elems[a][static_cast<std::size_t>(elems[b][i])];
            table[static_cast<std::size_t>(a) * n + b] = index.at(prod);
        }
    }
    return FiniteGroup(std::move(name), n, std::move(table), std::move(labels));
}

/// Determinant character GL2F3 -> Z/2 (0 for det 1, 1 for det 2).
inline GroupHom gl2f3_determinant_hom(const FiniteGroup& gl, const FiniteGroup& z2) {
    auto ms = detail::gl2f3_elements();
    std::vector<elem_t> map(ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i) map[i] = ms[i].det() == 1 ? 0 : 1;
    return verify_homomorphism(gl, z2, std::move(map));
}

/// Action of GL2F3 on the four lines of the plane over the 3-element field,
/// realising the quotient onto S4 with kernel {I, -I}.
inline GroupHom gl2f3_line_action_hom(const FiniteGroup& gl, const FiniteGroup& s4) {
    auto ms = detail::gl2f3_elements();
    const int lines[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
    auto line_index = [&](int x, int y) {
        if (x != 0) {
            int s = x == 1 ? 1 : 2;  // scale so the first coordinate becomes 1
            x = 1;
            y = (y * s) % 3;
        } else {
            y = 1;
        }
        for (int i = 0; i < 4; ++i)
            if (lines[i][0] == x && lines[i][1] == y) return i;
        throw error("internal: line lookup failed");
    };
    std::vector<elem_t> map(ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i) {
        std::array<int, 4> perm{};
        for (int l = 0; l < 4; ++l) {
            int x = (ms[i].a * lines[l][0] + ms[i].b * lines[l][1]) % 3;
            int y = (ms[i].c * lines[l][0] + ms[i].d * lines[l][1]) % 3;
            perm[static_cast<std::size_t>(l)] = line_index(x, y);
        }
        // locate the permutation in S4's lexicographic labelling
        std::string lab;
        for (int v : perm) lab += static_cast<char>('0' + v);
        bool found = false;
        for (elem_t s = 0; s < s4.order(); ++s)
            if (s4.label(s) == lab) {
                map[i] = s;
                found = true;
                break;
            }
        if (!found) throw error("internal: permutation not found in S4");
    }
    return verify_homomorphism(gl, s4, std::move(map));
}

/// A surjective order-2 character as a +-1 table, used as the nontrivial
/// coefficient action in tests and checks. Defined for the built-in groups.
inline std::vector<int> sign_character(const FiniteGroup& g) {
    const std::string& n = g.name();
    std::vector<int> chi(g.order(), 1);
    if (n.rfind("Z/", 0) == 0) {
        if (g.order() % 2 != 0)
            throw validation_error("sign_character: " + n + " has no surjective order-2 character");
        for (elem_t e = 0; e < g.order(); ++e) chi[e] = e % 2 == 0 ? 1 : -1;
        return chi;
    }
    if (n == "V4") {
        chi = {1, -1, 1, -1};  // first coordinate
        return chi;
    }
    if (n == "D4") {
        for (elem_t e = 0; e < 8; ++e) chi[e] = e < 4 ? 1 : -1;  // reflections map to -1
        return chi;
    }
    if (n == "Q8") {
        // kernel {1, -1, i, -i}
        for (elem_t e = 0; e < 8; ++e) chi[e] = e < 4 ? 1 : -1;
        return chi;
    }
    if (n == "S4") {
        for (elem_t e = 0; e < 24; ++e) {
            const std::string& lab = g.label(e);
            int invs = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (lab[static_cast<std::size_t>(i)] > lab[static_cast<std::size_t>(j)]) ++invs;
            chi[e] = invs % 2 == 0 ? 1 : -1;
        }
        return chi;
    }
    if (n == "GL2F3") {
        auto ms = detail::gl2f3_elements();
        for (std::size_t i = 0; i < ms.size(); ++i) chi[i] = ms[i].det() == 1 ? 1 : -1;
        return chi;
    }
    throw validation_error("sign_character: no built-in character for group '" + n + "'");
}

} // namespace acs
