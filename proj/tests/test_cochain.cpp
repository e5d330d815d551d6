#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "acs/cochain.hpp"
#include "acs/cohomology.hpp"
#include "acs/json_io.hpp"
#include "bar_oracle.hpp"

using namespace acs;

TEST_CASE("differential basics") {
    FiniteGroup z2 = construct_group("Z/2");

    SECTION("degree-0 with trivial action maps to zero") {
        Cochain m(z2, trivial_coeff(z2, 4), 0);
        m.set({}, 3);
        CHECK(differential(m).is_zero());
    }
    SECTION("identity character of Z/2 is a cocycle") {
        Cochain f = Cochain::from_values(z2, trivial_coeff(z2, 2), 1, {0, 1});
        Cochain df = differential(f);
        CHECK(df.at({1, 1}) == 0);  // f(1) - f(0) + f(1) = 2 = 0
        CHECK(df.is_zero());
    }
    SECTION("degree cap is enforced") {
        FiniteGroup z1 = construct_group("Z/1");
        Cochain top(z1, trivial_coeff(z1, 2), 6);
        CHECK_THROWS_AS(differential(top), validation_error);
    }
}

TEST_CASE("d compose d vanishes on random cochains over Q8") {
    FiniteGroup q8 = construct_group("Q8");
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint32_t degree = 1 + trial % 3;
        const CoeffModule coeff = trial % 2 ? trivial_coeff(q8, 2) : sign_coeff(q8, 4);
        Cochain f = random_cochain(q8, coeff, degree, rng);
        REQUIRE(differential(differential(f)).is_zero());
    }
}

TEST_CASE("conjugation action") {
    FiniteGroup d4 = construct_group("D4");
    FiniteGroup v4 = construct_group("V4");
    std::mt19937_64 rng(55);

    SECTION("by the identity is the identity") {
        Cochain f = random_cochain(d4, trivial_coeff(d4, 4), 2, rng);
        CHECK(conj_action(f, FiniteGroup::identity()) == f);
    }
    SECTION("is trivial on an abelian group with trivial coefficients") {
        Cochain f = random_cochain(v4, trivial_coeff(v4, 4), 2, rng);
        for (elem_t a = 0; a < v4.order(); ++a) CHECK(conj_action(f, a) == f);
    }
    SECTION("commutes with the differential, including an order-4 element") {
        elem_t r = 1;  // the rotation
        REQUIRE(d4.element_order(r) == 4);
        for (int trial = 0; trial < 50; ++trial) {
            Cochain f = random_cochain(d4, sign_coeff(d4, 4), 2, rng);
            REQUIRE(differential(conj_action(f, r)) == conj_action(differential(f), r));
            for (elem_t a = 0; a < d4.order(); ++a)
                REQUIRE(differential(conj_action(f, a)) == conj_action(differential(f), a));
        }
    }
}

TEST_CASE("cup products") {
    FiniteGroup z2 = construct_group("Z/2");
    FiniteGroup v4 = construct_group("V4");
    std::mt19937_64 rng(77);

    SECTION("against zero is zero") {
        Cochain a = random_cochain(z2, trivial_coeff(z2, 2), 1, rng);
        Cochain zero(z2, trivial_coeff(z2, 2), 2);
        CHECK(cup(a, zero).is_zero());
    }
    SECTION("single product evaluation") {
        Cochain alpha = Cochain::from_values(z2, trivial_coeff(z2, 2), 1, {0, 1});
        Cochain eps(z2, trivial_coeff(z2, 2), 2);
        eps.set({1, 1}, 1);
        Cochain c = cup(alpha, eps);
        CHECK(c.at({1, 1, 1}) == 1);
        CHECK(c.at({0, 1, 1}) == 0);
    }
    SECTION("graded Leibniz rule on random pairs") {
        const std::pair<std::uint32_t, std::uint32_t> shapes[] = {{1, 1}, {1, 2}, {2, 1}};
        for (int trial = 0; trial < 100; ++trial) {
            auto [p, q] = shapes[trial % 3];
            Cochain a = random_cochain(v4, trivial_coeff(v4, 4), p, rng);
            Cochain b = random_cochain(v4, trivial_coeff(v4, 4), q, rng);
            Cochain lhs = differential(cup(a, b));
            Cochain rhs = p % 2 == 0 ? add(cup(differential(a), b), cup(a, differential(b)))
                                     : sub(cup(differential(a), b), cup(a, differential(b)));
            REQUIRE(lhs == rhs);
        }
    }
    SECTION("a 1-cocycle alpha satisfies d(alpha cup g) = -(alpha cup dg)") {
        Cochain alpha = Cochain::from_values(v4, trivial_coeff(v4, 2), 1, {0, 1, 0, 1});
        REQUIRE(is_cocycle(alpha));
        for (int trial = 0; trial < 20; ++trial) {
            Cochain gamma = random_cochain(v4, trivial_coeff(v4, 2), 1, rng);
            REQUIRE(differential(cup(alpha, gamma)) == neg(cup(alpha, differential(gamma))));
        }
    }
    SECTION("bilinearity and associativity") {
        for (int trial = 0; trial < 50; ++trial) {
            Cochain a = random_cochain(v4, trivial_coeff(v4, 6), 1, rng);
            Cochain b = random_cochain(v4, trivial_coeff(v4, 6), 1, rng);
            Cochain c = random_cochain(v4, trivial_coeff(v4, 6), 1, rng);
            REQUIRE(cup(a, add(b, c)) == add(cup(a, b), cup(a, c)));
            REQUIRE(cup(cup(a, b), c) == cup(a, cup(b, c)));
        }
    }
    SECTION("Leibniz also holds across twisted coefficient pairings") {
        FiniteGroup d4 = construct_group("D4");
        const CoeffModule mods[] = {trivial_coeff(d4, 4), sign_coeff(d4, 4)};
        for (int trial = 0; trial < 60; ++trial) {
            Cochain a = random_cochain(d4, mods[trial % 2], 1 + trial % 2, rng);
            Cochain b = random_cochain(d4, mods[(trial / 2) % 2], 1, rng);
            Cochain lhs = differential(cup(a, b));
            Cochain rhs = a.degree() % 2 == 0 ? add(cup(differential(a), b), cup(a, differential(b)))
                                              : sub(cup(differential(a), b), cup(a, differential(b)));
            REQUIRE(lhs == rhs);
        }
    }
    SECTION("mismatches are rejected") {
        Cochain a = random_cochain(z2, trivial_coeff(z2, 2), 1, rng);
        Cochain b = random_cochain(v4, trivial_coeff(v4, 2), 1, rng);
        CHECK_THROWS_AS(cup(a, b), validation_error);
        Cochain c = random_cochain(z2, trivial_coeff(z2, 4), 1, rng);
        CHECK_THROWS_AS(cup(a, c), validation_error);
    }
}

TEST_CASE("cocycle and coboundary detection") {
    FiniteGroup z2 = construct_group("Z/2");
    FiniteGroup z4 = construct_group("Z/4");
    std::mt19937_64 rng(99);

    SECTION("the zero cochain is a coboundary with zero witness") {
        Cochain zero(z4, trivial_coeff(z4, 2), 2);
        auto w = is_coboundary(zero);
        REQUIRE(w.has_value());
        CHECK(w->is_zero());
    }
    SECTION("differentials are coboundaries, witnesses are exact") {
        for (int trial = 0; trial < 40; ++trial) {
            std::uint32_t degree = 1 + trial % 2;
            Cochain beta = random_cochain(z4, trivial_coeff(z4, 3), degree, rng);
            Cochain f = differential(beta);  // generally not normalized
            auto w = is_coboundary(f);
            REQUIRE(w.has_value());
            REQUIRE(differential(*w) == f);
        }
    }
    SECTION("the extension cocycle of Z/4 over Z/2 is not a coboundary") {
        Cochain eps(z2, trivial_coeff(z2, 2), 2);
        eps.set({1, 1}, 1);
        REQUIRE(is_cocycle(eps));
        // independent oracle: all four 1-cochains on Z/2
        bool any = false;
        for (int v0 = 0; v0 < 2; ++v0)
            for (int v1 = 0; v1 < 2; ++v1) {
                Cochain x = Cochain::from_values(z2, trivial_coeff(z2, 2), 1,
                                                 {static_cast<std::uint16_t>(v0), static_cast<std::uint16_t>(v1)});
                any = any || differential(x) == eps;
            }
        CHECK_FALSE(any);
        CHECK_FALSE(is_coboundary(eps).has_value());
    }
    SECTION("composite moduli are rejected for solving") {
        Cochain f = random_cochain(z4, trivial_coeff(z4, 4), 2, rng);
        CHECK_THROWS_AS(is_coboundary(f), unsupported_modulus_error);
        Cochain g(z4, trivial_coeff(z4, 2), 0);
        CHECK_THROWS_AS(is_coboundary(g), validation_error);
    }
    SECTION("nontrivial action coboundaries solve too") {
        for (int trial = 0; trial < 20; ++trial) {
            Cochain beta = random_cochain(z4, sign_coeff(z4, 3), 1, rng);
            Cochain f = differential(beta);
            auto w = is_coboundary(f);
            REQUIRE(w.has_value());
            REQUIRE(differential(*w) == f);
        }
    }
}

TEST_CASE("cohomology dimensions match the full bar-complex oracle") {
    FiniteGroup z2 = construct_group("Z/2");
    FiniteGroup v4 = construct_group("V4");

    SECTION("stated values") {
        for (std::uint32_t i = 0; i <= 3; ++i) {
            CHECK(cohomology_dim(z2, 2, i) == 1);
            CHECK(oracle::full_bar_dim(z2, 2, i) == 1);
        }
        CHECK(cohomology_dim(z2, 3, 1) == 0);
        CHECK(oracle::full_bar_dim(z2, 3, 1) == 0);
        CHECK(cohomology_dim(v4, 2, 1) == 2);
        CHECK(oracle::full_bar_dim(v4, 2, 1) == 2);
    }
    SECTION("the symmetric group has one character and two extension classes") {
        FiniteGroup s4 = construct_group("S4");
        CHECK(cohomology_dim(s4, 2, 1) == 1);
        CHECK(cohomology_dim(s4, 2, 2) == 2);
    }
    SECTION("normalized and full complexes agree on groups of order <= 8") {
        for (const char* name : {"Z/2", "Z/3", "Z/4", "V4", "Z/8", "D4", "Q8"}) {
            FiniteGroup g = construct_group(name);
            for (std::uint32_t i = 0; i <= 2; ++i)
                REQUIRE(cohomology_dim(g, 2, i) == oracle::full_bar_dim(g, 2, i));
        }
        for (const char* name : {"Z/3", "Z/4", "V4"}) {
            FiniteGroup g = construct_group(name);
            for (std::uint32_t i = 0; i <= 2; ++i)
                REQUIRE(cohomology_dim(g, 3, i) == oracle::full_bar_dim(g, 3, i));
        }
    }
    SECTION("degree and budget limits raise explicit errors") {
        CHECK_THROWS_AS(cohomology_dim(z2, 2, 4), validation_error);
        CHECK_THROWS_AS(cohomology_dim(z2, 4, 1), unsupported_modulus_error);
        CHECK_THROWS_AS(cohomology_dim(construct_group("Z/13"), 2, 3), resource_error);
        CHECK(cohomology_dim(construct_group("Z/4"), 2, 3) == oracle::full_bar_dim(construct_group("Z/4"), 2, 3));
        // order 12 sits exactly at the default degree-3 budget
        CHECK(cohomology_dim(construct_group("Z/12"), 2, 3) == 1);
    }
}

TEST_CASE("cochain dump format round-trips") {
    FiniteGroup q8 = construct_group("Q8");
    std::mt19937_64 rng(2024);
    Cochain f = random_cochain(q8, sign_coeff(q8, 4), 2, rng);
    auto j = cochain_to_json(f);
    CHECK(j.at("group") == "Q8");
    CHECK(j.at("n") == 4);
    CHECK(j.at("degree") == 2);
    CHECK(j.at("values").size() == 64);
    CHECK(cochain_from_json(j, q8) == f);

    Cochain g = random_cochain(q8, trivial_coeff(q8, 2), 1, rng);
    auto jg = cochain_to_json(g);
    CHECK_FALSE(jg.contains("units"));  // trivial action stays implicit
    CHECK(cochain_from_json(jg, q8) == g);
}

TEST_CASE("coefficient module validation") {
    FiniteGroup z4 = construct_group("Z/4");
    CHECK_THROWS_AS(make_coeff_module(z4, 4, {1, 2, 1, 2}), validation_error);  // 2 not a unit
    CHECK_THROWS_AS(make_coeff_module(z4, 4, {3, 1, 3, 1}), validation_error);  // identity acts nontrivially
    CHECK_THROWS_AS(make_coeff_module(z4, 4, {1, 1, 3, 1}), validation_error);  // not multiplicative
    CHECK(sign_coeff(z4, 4).units == std::vector<std::uint16_t>{1, 3, 1, 3});
    CHECK(trivial_coeff(z4, 2).trivial);
}
