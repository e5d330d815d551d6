#pragma once

// Central extensions 0 -> Z/n -> total -> base -> 1 with a normalized
// section: the extension 2-cocycle, section-defect trivialisations, splitness
// tests, and pullbacks of cochains along homomorphisms.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acs/cochain.hpp"
#include "acs/cohomology.hpp"
#include "acs/group.hpp"

namespace acs {

class CentralExtension {
public:
    /// Validates that proj_map is a surjective homomorphism whose kernel is
    /// the central cyclic subgroup generated by kernel_gen, and picks the
    /// default normalized section (least preimage id per base element).
    CentralExtension(FiniteGroup total, FiniteGroup base, std::vector<elem_t> proj_map, elem_t kernel_gen,
                     std::string name = "extension")
        : name_(std::move(name)), proj_(verify_homomorphism(total, base, std::move(proj_map))) {
        if (!proj_.surjective) throw validation_error(name_ + ": projection must be surjective");
        const FiniteGroup& G = proj_.source;
        const FiniteGroup& A = proj_.target;
        if (G.order() % A.order() != 0) throw validation_error(name_ + ": total order not divisible by base order");
        n_ = G.order() / A.order();

        // kernel_embed(j) = kernel_gen^j must enumerate ker(proj) exactly once
        kernel_elems_.clear();
        elem_t z = FiniteGroup::identity();
        for (std::uint32_t j = 0; j < n_; ++j) {
            kernel_elems_.push_back(z);
            z = G.mul(z, kernel_gen);
        }
        if (z != FiniteGroup::identity())
            throw validation_error(name_ + ": kernel generator has order other than " + std::to_string(n_));
        kernel_index_.assign(G.order(), -1);
        for (std::uint32_t j = 0; j < n_; ++j) {
            if (kernel_index_[kernel_elems_[j]] != -1)
                throw validation_error(name_ + ": kernel generator repeats before closing");
            kernel_index_[kernel_elems_[j]] = static_cast<int>(j);
        }
        for (elem_t g = 0; g < G.order(); ++g) {
            bool in_ker = proj_(g) == FiniteGroup::identity();
            if (in_ker != (kernel_index_[g] >= 0))
                throw validation_error(name_ + ": kernel of the projection is not generated by the given element");
        }
        for (elem_t k : kernel_elems_)
            for (elem_t g = 0; g < G.order(); ++g)
                if (G.mul(k, g) != G.mul(g, k))
                    throw validation_error(name_ + ": kernel element " + G.label(k) + " is not central (fails at " +
                                           G.label(g) + ")");

        // default section: least preimage id; id 0 lies over the base identity
        section_.assign(A.order(), 0);
        std::vector<bool> seen(A.order(), false);
        for (elem_t g = 0; g < G.order(); ++g) {
            elem_t a = proj_(g);
            if (!seen[a]) {
                seen[a] = true;
                section_[a] = g;
            }
        }
    }

    const std::string& name() const { return name_; }
    const FiniteGroup& total() const { return proj_.source; }
    const FiniteGroup& base() const { return proj_.target; }
    const GroupHom& proj() const { return proj_; }
    std::uint32_t kernel_order() const { return n_; }
    elem_t kernel_embed(std::uint32_t j) const { return kernel_elems_[j % n_]; }
    elem_t section(elem_t a) const { return section_[a]; }

    /// Position of g inside the kernel, or an error if g lies outside it.
    std::uint32_t kernel_index(elem_t g) const {
        int j = kernel_index_[g];
        if (j < 0)
            throw validation_error(name_ + ": element " + total().label(g) + " is not in the kernel");
        return static_cast<std::uint32_t>(j);
    }

    /// Copy of this extension carrying a different normalized section.
    CentralExtension with_section(std::vector<elem_t> s) const {
        const FiniteGroup& A = base();
        if (s.size() != A.order()) throw validation_error(name_ + ": section must be total on the base");
        if (s[FiniteGroup::identity()] != FiniteGroup::identity())
            throw validation_error(name_ + ": section must send identity to identity");
        for (elem_t a = 0; a < A.order(); ++a)
            if (proj_(s[a]) != a) throw validation_error(name_ + ": not a section of the projection");
        CentralExtension copy = *this;
        copy.section_ = std::move(s);
        return copy;
    }

private:
    std::string name_;
    GroupHom proj_;
    std::uint32_t n_ = 0;
    std::vector<elem_t> kernel_elems_;
    std::vector<int> kernel_index_;
    std::vector<elem_t> section_;
};

/// The normalized 2-cocycle of the extension:
/// eps(x,y) = embed^{-1}( sigma(x) sigma(y) sigma(xy)^{-1} ).
inline Cochain extension_cocycle(const CentralExtension& ext) {
    const FiniteGroup& A = ext.base();
    const FiniteGroup& G = ext.total();
    Cochain eps(A, trivial_coeff(A, ext.kernel_order()), 2);
    for (elem_t x = 0; x < A.order(); ++x)
        for (elem_t y = 0; y < A.order(); ++y) {
            elem_t defect = G.mul(G.mul(ext.section(x), ext.section(y)), G.inv(ext.section(A.mul(x, y))));
            eps.set({x, y}, ext.kernel_index(defect));
        }
    return eps;
}

/// A commuting square over the extension: f : lifted -> base together with a
/// lift f~ : lifted -> total satisfying proj o f~ = f.
struct ExtensionLift {
    GroupHom f;       // lifted -> base
    GroupHom f_tilde; // lifted -> total
};

/// The default lift: the total group over itself via the identity.
inline ExtensionLift identity_lift(const CentralExtension& ext) {
    std::vector<elem_t> id(ext.total().order());
    for (elem_t g = 0; g < ext.total().order(); ++g) id[g] = g;
    GroupHom identity = verify_homomorphism(ext.total(), ext.total(), std::move(id));
    return ExtensionLift{ext.proj(), identity};
}

/// gamma(g) = embed^{-1}( sigma(f(g)) f~(g)^{-1} ), a kernel-valued 1-cochain
/// on the lifted group with d(gamma) equal to the pullback of the extension
/// cocycle along f; gamma vanishes at the identity and restricts to a
/// homomorphism on ker(f).
inline Cochain section_defect_gamma(const CentralExtension& ext, const ExtensionLift& lift) {
    if (!(lift.f.target == ext.base())) throw validation_error("section defect: lift must map to the base group");
    if (!(lift.f_tilde.target == ext.total())) throw validation_error("section defect: lift must land in the total group");
    if (!(lift.f.source == lift.f_tilde.source)) throw validation_error("section defect: square has mismatched sources");
    const FiniteGroup& At = lift.f.source;
    const FiniteGroup& G = ext.total();
    for (elem_t g = 0; g < At.order(); ++g)
        if (ext.proj()(lift.f_tilde(g)) != lift.f(g))
            throw validation_error("section defect: square does not commute at " + At.label(g));
    Cochain gamma(At, trivial_coeff(At, ext.kernel_order()), 1);
    for (elem_t g = 0; g < At.order(); ++g) {
        elem_t val = G.mul(ext.section(lift.f(g)), G.inv(lift.f_tilde(g)));
        gamma.set({g}, ext.kernel_index(val));
    }
    return gamma;
}

/// Pullback along a homomorphism: (rho* c)(g1..gi) = c(rho g1, .., rho gi).
/// The coefficient action transports along rho.
inline Cochain pullback_cocycle(const Cochain& c, const GroupHom& rho) {
    if (!(rho.target == c.group())) throw validation_error("pullback: homomorphism target differs from the cochain group");
    if (c.degree() > 3) throw validation_error("pullback: degree cap is 3");
    const FiniteGroup& G = rho.source;
    const std::uint32_t m = G.order();
    std::vector<std::uint16_t> units(m);
    for (elem_t g = 0; g < m; ++g) units[g] = c.coeff().units[rho(g)];
    Cochain out(G, make_coeff_module(G, c.modulus(), std::move(units)), c.degree());
    std::vector<elem_t> d(c.degree(), 0);
    std::vector<elem_t> mapped(c.degree());
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        for (std::size_t j = 0; j < mapped.size(); ++j) mapped[j] = rho(d[j]);
        out.set_index(idx, c.at(std::span<const elem_t>(mapped.data(), mapped.size())));
        for (std::size_t j = d.size(); j-- > 0;) {
            if (++d[j] < m) break;
            d[j] = 0;
        }
    }
    return out;
}

/// True iff the extension cocycle is a coboundary, equivalently iff a
/// homomorphic section exists. Needs a prime kernel order.
inline bool is_split_central(const CentralExtension& ext) {
    return is_coboundary(extension_cocycle(ext)).has_value();
}

/// Built-in extension roster.
inline CentralExtension construct_extension(std::string_view name) {
    if (name == "Z4_over_Z2") {
        FiniteGroup z4 = construct_group("Z/4");
        FiniteGroup z2 = construct_group("Z/2");
        return CentralExtension(z4, z2, {0, 1, 0, 1}, 2, std::string(name));
    }
    if (name == "V4_over_Z2") {
        FiniteGroup v4 = construct_group("V4");
        FiniteGroup z2 = construct_group("Z/2");
        // projection to the first coordinate; kernel is the second factor
        return CentralExtension(v4, z2, {0, 1, 0, 1}, 2, std::string(name));
    }
    if (name == "Q8_over_V4") {
        FiniteGroup q8 = construct_group("Q8");
        FiniteGroup v4 = construct_group("V4");
        // 1,-1 -> (0,0); i,-i -> (1,0); j,-j -> (0,1); k,-k -> (1,1)
        return CentralExtension(q8, v4, {0, 0, 1, 1, 2, 2, 3, 3}, 1, std::string(name));
    }
    if (name == "D4_over_V4") {
        FiniteGroup d4 = construct_group("D4");
        FiniteGroup v4 = construct_group("V4");
        // e,r2 -> (0,0); r,r3 -> (1,0); s,r2s -> (0,1); rs,r3s -> (1,1)
        return CentralExtension(d4, v4, {0, 1, 0, 1, 2, 3, 2, 3}, 2, std::string(name));
    }
    if (name == "GL2F3_over_S4") {
        FiniteGroup gl = construct_group("GL2F3");
        FiniteGroup s4 = construct_group("S4");
        GroupHom action = gl2f3_line_action_hom(gl, s4);
        // kernel generator: -I, the unique order-2 central element
        elem_t minus_i = 0;
        bool found = false;
        for (elem_t g = 1; g < gl.order(); ++g)
            if (action(g) == FiniteGroup::identity()) {
                minus_i = g;
                found = true;
                break;
            }
        if (!found) throw error("internal: GL2F3 line action has trivial kernel");
        return CentralExtension(gl, s4, action.map, minus_i, std::string(name));
    }
    throw validation_error("unknown extension '" + std::string(name) + "'");
}

inline std::vector<std::string> builtin_extension_names() {
    return {"Z4_over_Z2", "V4_over_Z2", "Q8_over_V4", "D4_over_V4", "GL2F3_over_S4"};
}

} // namespace acs
