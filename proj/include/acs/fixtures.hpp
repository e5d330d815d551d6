#pragma once

// Family fixtures: the field-theoretic data each evaluation family needs
// (discriminant datum D, ramified-support primes, the quadratic-subfield
// choices per cohomology class), plus polynomial fixtures used by the
// factor-check verifications. A bundled set ships with the library; users
// can point at their own JSON file instead.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "acs/errors.hpp"
#include "acs/polynomial.hpp"

namespace acs {

struct FamilyFixture {
    std::string name;
    std::string base_group;   // A
    std::string cover_group;  // Gamma
    std::int64_t D = 0;       // positive discriminant datum |D|
    std::optional<std::int64_t> d1, d2;
    std::vector<std::int64_t> dl_support;                // prime support of the relative discriminant norm
    std::map<std::string, std::int64_t> alpha_choices;   // class label -> signed squarefree divisor datum M
    std::int64_t min_t = 1;                              // 2 where the construction needs t > 1
    std::map<std::string, std::string> provenance;
};

struct PolyFixture {
    std::string name;
    std::string text;
    std::optional<std::uint32_t> factor_mod;
    std::vector<LinearPower> factors;
};

struct FixtureSet {
    std::vector<FamilyFixture> families;
    std::vector<PolyFixture> polynomials;

    const FamilyFixture& family(const std::string& name) const {
        for (const auto& f : families)
            if (f.name == name) return f;
        throw validation_error("unknown family fixture '" + name + "'");
    }
    const PolyFixture& polynomial(const std::string& name) const {
        for (const auto& p : polynomials)
            if (p.name == name) return p;
        throw validation_error("unknown polynomial fixture '" + name + "'");
    }
};

inline FixtureSet load_fixtures_from_json(const nlohmann::json& j) {
    FixtureSet out;
    if (!j.is_object()) throw validation_error("fixtures: top level must be an object");
    for (const auto& jf : j.value("families", nlohmann::json::array())) {
        FamilyFixture f;
        f.name = jf.at("name").get<std::string>();
        f.base_group = jf.at("base_group").get<std::string>();
        f.cover_group = jf.at("cover_group").get<std::string>();
        f.D = jf.at("D").get<std::int64_t>();
        if (jf.contains("d1")) f.d1 = jf.at("d1").get<std::int64_t>();
        if (jf.contains("d2")) f.d2 = jf.at("d2").get<std::int64_t>();
        f.dl_support = jf.at("DL_support").get<std::vector<std::int64_t>>();
        for (const auto& [label, m] : jf.at("alpha_choices").items())
            f.alpha_choices[label] = m.get<std::int64_t>();
        f.min_t = jf.value("min_t", std::int64_t{1});
        if (jf.contains("provenance"))
            for (const auto& [key, val] : jf.at("provenance").items()) f.provenance[key] = val.get<std::string>();
        out.families.push_back(std::move(f));
    }
    for (const auto& jp : j.value("polynomials", nlohmann::json::array())) {
        PolyFixture p;
        p.name = jp.at("name").get<std::string>();
        p.text = jp.at("text").get<std::string>();
        if (jp.contains("factor_check")) {
            const auto& fc = jp.at("factor_check");
            p.factor_mod = fc.at("mod").get<std::uint32_t>();
            for (const auto& pair : fc.at("factors"))
                p.factors.push_back(LinearPower{pair.at(0).get<std::int64_t>(), pair.at(1).get<unsigned>()});
        }
        out.polynomials.push_back(std::move(p));
    }
    return out;
}

inline FixtureSet load_fixtures(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text, nullptr, true, true);
    return load_fixtures_from_json(j);
}

/// The bundled fixture data, also shipped as fixtures/acs_families.json.
inline const char* bundled_fixtures_json() {
    return R"JSON({
  "families": [
    {
      "name": "cyclic-5",
      "base_group": "Z/2",
      "cover_group": "Z/4",
      "D": 5,
      "DL_support": [5],
      "alpha_choices": {"c1": 5},
      "min_t": 1,
      "provenance": {
        "description": "degree-4 cyclic subfield of the 5th cyclotomic field over Q(sqrt(5))",
        "field_data": "dL = 5^3, dK = 5, DL = 5"
      }
    },
    {
      "name": "v4-5-29",
      "base_group": "V4",
      "cover_group": "Q8",
      "D": 145,
      "d1": 5,
      "d2": 29,
      "DL_support": [3, 5, 29],
      "alpha_choices": {"c1": 5, "c2": 29, "c3": 145},
      "min_t": 1,
      "provenance": {
        "description": "LMFDB quaternion octic over Q(sqrt(5), sqrt(29))",
        "polynomial": "x^8 - x^7 + 98x^6 - 105x^5 + 3191x^4 + 1665x^3 + 44072x^2 + 47933x + 328171",
        "field_data": "DL = 3^2 5^2 29^2"
      }
    },
    {
      "name": "v4-5-21",
      "base_group": "V4",
      "cover_group": "Q8",
      "D": 105,
      "d1": 5,
      "d2": 21,
      "DL_support": [3, 5, 7],
      "alpha_choices": {"c1": 5, "c2": 21, "c3": 105},
      "min_t": 1,
      "provenance": {
        "description": "LMFDB quaternion octic over Q(sqrt(5), sqrt(21))",
        "polynomial": "x^8 - x^7 - 34x^6 + 29x^5 + 361x^4 - 305x^3 - 1090x^2 + 1345x - 395",
        "field_data": "DL = 3^2 5^2 7^2"
      }
    },
    {
      "name": "d4-21",
      "base_group": "V4",
      "cover_group": "D4",
      "D": 21,
      "DL_support": [3],
      "alpha_choices": {"c1": -3, "c2": -7, "c3": 21},
      "min_t": 1,
      "provenance": {
        "description": "LMFDB dihedral octic over Q(sqrt(-3), sqrt(-7))",
        "polynomial": "x^8 - 3x^7 + 4x^6 - 3x^5 + 3x^4 - 3x^3 + 4x^2 - 3x + 1",
        "field_data": "dL = 3^6 7^4, dK = 3^2 7^2, DL = 3^2"
      }
    },
    {
      "name": "s4-283",
      "base_group": "S4",
      "cover_group": "GL2F3",
      "D": 283,
      "DL_support": [3],
      "alpha_choices": {"c1": -283},
      "min_t": 2,
      "provenance": {
        "description": "splitting field of the quartic below (S4 base) with a GL(2,F3) octic cover, both from the LMFDB",
        "polynomial": "x^4 - x - 1",
        "cover_polynomial": "x^8 - 4x^7 + 7x^6 + 7x^5 - 51x^4 + 50x^3 + 61x^2 - 107x - 83",
        "field_data": "dL = 3^24 283^24, dK = 283^12, DL = 3^24"
      }
    },
    {
      "name": "s4-2777",
      "base_group": "S4",
      "cover_group": "2-S4",
      "D": 2777,
      "DL_support": [2777],
      "alpha_choices": {"c1": 2777},
      "min_t": 2,
      "provenance": {
        "description": "splitting field of the quartic below (S4 base) with the 16T65 double cover given by the degree-16 polynomial fixture",
        "polynomial": "x^4 - x^3 - 4x^2 + x + 2",
        "field_data": "prime 2777 divides DL; gcd(DL, D) = 2777"
      }
    }
  ],
  "polynomials": [
    {
      "name": "s4-283-quartic",
      "text": "x^4 - x - 1"
    },
    {
      "name": "s4-2777-quartic",
      "text": "x^4 - x^3 - 4x^2 + x + 2"
    },
    {
      "name": "s4-2777-deg16",
      "text": "x^16 + 5x^15 - 790x^14 - 4654x^13 + 234254x^12 + 1612152x^11 - 33235504x^10 - 263221982x^9 + 2331584048x^8 + 21321377994x^7 - 74566280958x^6 - 825209618478x^5 + 922238608476x^4 + 13790070608536x^3 - 6704968288135x^2 - 80794234036917x + 87192014930816",
      "factor_check": {
        "mod": 2777,
        "factors": [[1372, 4], [1791, 4], [1822, 4], [2653, 4]]
      }
    }
  ]
}
)JSON";
}

inline const FixtureSet& bundled_fixtures() {
    static const FixtureSet set = load_fixtures(bundled_fixtures_json());
    return set;
}

} // namespace acs
