#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>

#include "acs/extension.hpp"
#include "acs/json_io.hpp"
#include "binary_octahedral.hpp"

using namespace acs;

namespace {

// brute-force splitness oracle: search all normalized sections for a
// homomorphic one (equivalently a complement meeting the kernel trivially)
bool split_by_section_search(const CentralExtension& ext) {
    const FiniteGroup& G = ext.total();
    const FiniteGroup& A = ext.base();
    std::vector<std::vector<elem_t>> fibers(A.order());
    for (elem_t g = 0; g < G.order(); ++g) fibers[ext.proj()(g)].push_back(g);
    std::vector<std::size_t> pick(A.order(), 0);
    while (true) {
        std::vector<elem_t> sigma(A.order());
        for (elem_t a = 0; a < A.order(); ++a) sigma[a] = fibers[a][pick[a]];
        if (sigma[0] == FiniteGroup::identity()) {
            bool hom = true;
            for (elem_t a = 0; a < A.order() && hom; ++a)
                for (elem_t b = 0; b < A.order() && hom; ++b)
                    hom = G.mul(sigma[a], sigma[b]) == sigma[A.mul(a, b)];
            if (hom) return true;
        }
        std::size_t j = 0;
        while (j < pick.size() && ++pick[j] == fibers[j].size()) pick[j++] = 0;
        if (j == pick.size()) return false;
    }
}

// every normalized section of the extension
std::vector<std::vector<elem_t>> all_normalized_sections(const CentralExtension& ext) {
    const FiniteGroup& G = ext.total();
    const FiniteGroup& A = ext.base();
    std::vector<std::vector<elem_t>> fibers(A.order());
    for (elem_t g = 0; g < G.order(); ++g) fibers[ext.proj()(g)].push_back(g);
    std::vector<std::vector<elem_t>> out;
    std::vector<std::size_t> pick(A.order(), 0);
    while (true) {
        std::vector<elem_t> sigma(A.order());
        for (elem_t a = 0; a < A.order(); ++a) sigma[a] = fibers[a][pick[a]];
        if (sigma[0] == FiniteGroup::identity()) out.push_back(sigma);
        std::size_t j = 1;  // never move the identity fiber off e
        pick[0] = 0;
        while (j < pick.size() && ++pick[j] == fibers[j].size()) pick[j++] = 0;
        if (j == pick.size()) return out;
    }
}

} // namespace

TEST_CASE("extension cocycles of the built-in roster") {
    SECTION("Z/4 over Z/2: the single nonzero value") {
        CentralExtension ext = construct_extension("Z4_over_Z2");
        Cochain eps = extension_cocycle(ext);
        CHECK(eps.at({1, 1}) == 1);
        CHECK(eps.at({0, 0}) == 0);
        CHECK(eps.at({0, 1}) == 0);
        CHECK(eps.at({1, 0}) == 0);
        CHECK(is_cocycle(eps));
        CHECK(eps.is_normalized());
    }
    SECTION("a product with homomorphic section has zero cocycle") {
        CentralExtension ext = construct_extension("V4_over_Z2");
        CHECK(extension_cocycle(ext).is_zero());
    }
    SECTION("Q8 over V4: nonzero, a cocycle, not a coboundary") {
        CentralExtension ext = construct_extension("Q8_over_V4");
        Cochain eps = extension_cocycle(ext);
        CHECK_FALSE(eps.is_zero());
        CHECK(is_cocycle(eps));
        CHECK_FALSE(is_coboundary(eps).has_value());
        // exhaustive oracle over all 16 one-cochains on V4
        bool any = false;
        for (int mask = 0; mask < 16; ++mask) {
            std::vector<std::uint16_t> vals(4);
            for (int j = 0; j < 4; ++j) vals[static_cast<std::size_t>(j)] = (mask >> j) & 1;
            Cochain x = Cochain::from_values(ext.base(), trivial_coeff(ext.base(), 2), 1, vals);
            any = any || differential(x) == eps;
        }
        CHECK_FALSE(any);
    }
}

TEST_CASE("splitness of the built-in extensions") {
    CHECK(is_split_central(construct_extension("V4_over_Z2")));
    CHECK_FALSE(is_split_central(construct_extension("Z4_over_Z2")));
    CHECK_FALSE(is_split_central(construct_extension("Q8_over_V4")));
    CHECK_FALSE(is_split_central(construct_extension("D4_over_V4")));
    CHECK_FALSE(is_split_central(construct_extension("GL2F3_over_S4")));
    CHECK_THROWS_AS(construct_extension("nonsense"), validation_error);
}

TEST_CASE("splitness agrees with the brute-force section search for small totals") {
    for (const char* name : {"Z4_over_Z2", "V4_over_Z2", "Q8_over_V4", "D4_over_V4"}) {
        CentralExtension ext = construct_extension(name);
        REQUIRE(ext.total().order() <= 16);
        REQUIRE(is_split_central(ext) == split_by_section_search(ext));
    }
}

TEST_CASE("changing the section moves the cocycle by an exact coboundary") {
    for (const char* name : {"Z4_over_Z2", "V4_over_Z2", "Q8_over_V4", "D4_over_V4"}) {
        CentralExtension ext = construct_extension(name);
        if (ext.base().order() > 4) continue;
        Cochain eps = extension_cocycle(ext);
        for (const auto& sigma : all_normalized_sections(ext)) {
            Cochain eps2 = extension_cocycle(ext.with_section(sigma));
            auto witness = is_coboundary(sub(eps2, eps));
            REQUIRE(witness.has_value());
            REQUIRE(differential(*witness) == sub(eps2, eps));
        }
    }
}

TEST_CASE("section defect under the default lift") {
    SECTION("worked Z/4 over Z/2 values") {
        CentralExtension ext = construct_extension("Z4_over_Z2");
        Cochain gamma = section_defect_gamma(ext, identity_lift(ext));
        // gamma(g) = sigma(proj g) * g^{-1}: values 0,0,2,2 in the kernel = 0,0,1,1 mod 2
        CHECK(gamma.at({0}) == 0);
        CHECK(gamma.at({1}) == 0);
        CHECK(gamma.at({2}) == 1);
        CHECK(gamma.at({3}) == 1);
        CHECK(differential(gamma) == pullback_cocycle(extension_cocycle(ext), ext.proj()));
    }
    SECTION("contract on every built-in extension") {
        for (const std::string& name : builtin_extension_names()) {
            CentralExtension ext = construct_extension(name);
            Cochain gamma = section_defect_gamma(ext, identity_lift(ext));
            Cochain eps = extension_cocycle(ext);
            REQUIRE(differential(gamma) == pullback_cocycle(eps, ext.proj()));
            REQUIRE(gamma.at({FiniteGroup::identity()}) == 0);
            // restricted to the kernel it is a homomorphism
            const FiniteGroup& G = ext.total();
            for (std::uint32_t i = 0; i < ext.kernel_order(); ++i)
                for (std::uint32_t j = 0; j < ext.kernel_order(); ++j) {
                    elem_t g = ext.kernel_embed(i), h = ext.kernel_embed(j);
                    REQUIRE(gamma.at({G.mul(g, h)}) ==
                            (gamma.at({g}) + gamma.at({h})) % ext.kernel_order());
                }
        }
    }
    SECTION("non-commuting squares are rejected") {
        CentralExtension ext = construct_extension("Q8_over_V4");
        // f~ = identity on Q8 but f = the wrong projection (swap two classes)
        std::vector<elem_t> wrong = {0, 0, 2, 2, 1, 1, 3, 3};
        GroupHom f = verify_homomorphism(ext.total(), ext.base(), wrong);
        std::vector<elem_t> id(ext.total().order());
        for (elem_t g = 0; g < ext.total().order(); ++g) id[g] = g;
        GroupHom ftilde = verify_homomorphism(ext.total(), ext.total(), id);
        CHECK_THROWS_AS(section_defect_gamma(ext, ExtensionLift{f, ftilde}), validation_error);
    }
}

TEST_CASE("pullbacks of cochains") {
    FiniteGroup z4 = construct_group("Z/4");
    FiniteGroup z2 = construct_group("Z/2");
    GroupHom proj = verify_homomorphism(z4, z2, {0, 1, 0, 1});
    std::mt19937_64 rng(13);

    SECTION("along the identity is the identity") {
        std::vector<elem_t> id = {0, 1};
        GroupHom identity = verify_homomorphism(z2, z2, id);
        Cochain c = random_cochain(z2, trivial_coeff(z2, 2), 2, rng);
        CHECK(pullback_cocycle(c, identity) == c);
    }
    SECTION("of a cocycle is a cocycle") {
        for (int trial = 0; trial < 100; ++trial) {
            Cochain beta = random_cochain(z2, trivial_coeff(z2, 2), 1, rng);
            Cochain f = differential(beta);
            REQUIRE(is_cocycle(pullback_cocycle(f, proj)));
        }
    }
    SECTION("commutes with the differential and the cup product") {
        Cochain alpha = Cochain::from_values(z2, trivial_coeff(z2, 2), 1, {0, 1});
        Cochain eps(z2, trivial_coeff(z2, 2), 2);
        eps.set({1, 1}, 1);
        Cochain pulled_cup = pullback_cocycle(cup(alpha, eps), proj);
        Cochain cup_pulled = cup(pullback_cocycle(alpha, proj), pullback_cocycle(eps, proj));
        CHECK(pulled_cup == cup_pulled);
        for (int trial = 0; trial < 30; ++trial) {
            Cochain c = random_cochain(z2, trivial_coeff(z2, 4), 2, rng);
            REQUIRE(differential(pullback_cocycle(c, proj)) == pullback_cocycle(differential(c), proj));
        }
    }
}

TEST_CASE("kernel lookups reject elements outside the kernel") {
    CentralExtension ext = construct_extension("Q8_over_V4");
    CHECK(ext.kernel_index(ext.kernel_embed(1)) == 1);
    CHECK_THROWS_WITH(ext.kernel_index(2), Catch::Matchers::ContainsSubstring("not in the kernel"));
}

TEST_CASE("extension validation catches bad data") {
    FiniteGroup d4 = construct_group("D4");
    FiniteGroup z2 = construct_group("Z/2");
    // reflection parity D4 -> Z/2 has kernel <r> of order 4, which is not central
    CHECK_THROWS_WITH(CentralExtension(d4, z2, {0, 0, 0, 0, 1, 1, 1, 1}, 1),
                      Catch::Matchers::ContainsSubstring("not central"));
    // kernel generator of the wrong order
    FiniteGroup z4 = construct_group("Z/4");
    CHECK_THROWS_AS(CentralExtension(z4, z2, {0, 1, 0, 1}, 1), validation_error);
    // non-surjective projection
    FiniteGroup z1 = construct_group("Z/1");
    CHECK_THROWS_AS(CentralExtension(z4, z4, {0, 0, 0, 0}, 1), validation_error);
}

TEST_CASE("the quaternion model of the second double cover of S4") {
    FiniteGroup s4 = construct_group("S4");
    auto model = binoct::build(s4);
    REQUIRE(model.group.order() == 48);

    SECTION("it has a unique involution, unlike GL2F3") {
        int involutions = 0;
        for (elem_t g = 0; g < model.group.order(); ++g)
            involutions += model.group.element_order(g) == 2;
        CHECK(involutions == 1);
        FiniteGroup gl = construct_group("GL2F3");
        int gl_involutions = 0;
        for (elem_t g = 0; g < gl.order(); ++g) gl_involutions += gl.element_order(g) == 2;
        CHECK(gl_involutions > 1);
    }
    SECTION("its index-2 sequence cannot split") {
        // no order-2 element maps to an odd permutation
        auto chi = sign_character(s4);
        for (elem_t g = 0; g < model.group.order(); ++g)
            if (model.group.element_order(g) == 2) REQUIRE(chi[model.proj_to_s4[g]] == 1);
    }
    SECTION("it is a non-split central extension of S4 by Z/2") {
        CentralExtension ext(model.group, s4, model.proj_to_s4, model.minus_one);
        CHECK(ext.kernel_order() == 2);
        CHECK_FALSE(is_split_central(ext));
    }
}

TEST_CASE("the three nontrivial degree-2 classes of S4 are distinct and sum to zero") {
    FiniteGroup s4 = construct_group("S4");
    Cochain eps_plus = extension_cocycle(construct_extension("GL2F3_over_S4"));
    auto model = binoct::build(s4);
    Cochain eps_minus = extension_cocycle(CentralExtension(model.group, s4, model.proj_to_s4, model.minus_one));
    auto chi = sign_character(s4);
    std::vector<std::uint16_t> sgn(s4.order());
    for (std::size_t i = 0; i < sgn.size(); ++i) sgn[i] = chi[i] == 1 ? 0 : 1;
    Cochain alpha = Cochain::from_values(s4, trivial_coeff(s4, 2), 1, sgn);
    Cochain eps_det = cup(alpha, alpha);  // the cover classified by sign cup sign

    REQUIRE(is_cocycle(eps_det));
    // all three nontrivial
    CHECK_FALSE(is_coboundary(eps_plus).has_value());
    CHECK_FALSE(is_coboundary(eps_minus).has_value());
    CHECK_FALSE(is_coboundary(eps_det).has_value());
    // pairwise distinct classes
    CHECK_FALSE(is_coboundary(sub(eps_plus, eps_minus)).has_value());
    CHECK_FALSE(is_coboundary(sub(eps_plus, eps_det)).has_value());
    CHECK_FALSE(is_coboundary(sub(eps_minus, eps_det)).has_value());
    // together with zero they exhaust a rank-2 group over F2
    CHECK(is_coboundary(add(add(eps_plus, eps_minus), eps_det)).has_value());
}

#ifdef ACS_REPO_DIR
TEST_CASE("the shipped double-cover fixture matches the quaternion construction") {
    std::ifstream in(std::string(ACS_REPO_DIR) + "/fixtures/ext_2minus_s4.json");
    REQUIRE(in.good());
    CentralExtension ext = extension_from_json(nlohmann::json::parse(in));
    FiniteGroup s4 = construct_group("S4");
    auto model = binoct::build(s4);
    CHECK(ext.total() == model.group);
    CHECK(ext.base() == s4);
    CHECK(extension_cocycle(ext) ==
          extension_cocycle(CentralExtension(model.group, s4, model.proj_to_s4, model.minus_one)));
}
#endif

TEST_CASE("extensions load from JSON fixtures") {
    auto j = nlohmann::json::parse(R"({
        "name": "z4-fixture",
        "total_group": {"order": 4, "table": [0,1,2,3, 1,2,3,0, 2,3,0,1, 3,0,1,2]},
        "base_group": "Z/2",
        "proj_table": [0, 1, 0, 1],
        "kernel_gen": 2
    })");
    CentralExtension ext = extension_from_json(j);
    CHECK(ext.kernel_order() == 2);
    Cochain eps = extension_cocycle(ext);
    CHECK(eps.at({1, 1}) == 1);
    CHECK_FALSE(is_split_central(ext));
}
