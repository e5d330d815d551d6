#pragma once

// JSON forms of the external interfaces: Cayley-table group input,
// permutation-generator group input, extension fixtures, and the cochain
// dump format {group, n, degree, values}.

#include <string>
#include <vector>

#include "json.hpp"

#include "acs/cochain.hpp"
#include "acs/extension.hpp"
#include "acs/group.hpp"

namespace acs {

/// Group input: {"order": n, "table": row-major array, "labels"?: [...]}
/// or {"perm_generators": [[...], ...]}. Identity must be element 0.
inline FiniteGroup group_from_json(const nlohmann::json& j, std::string name = "custom") {
    if (!j.is_object()) throw validation_error("group json: expected an object");
    if (j.contains("perm_generators")) {
        std::vector<std::vector<int>> gens = j.at("perm_generators").get<std::vector<std::vector<int>>>();
        return group_from_permutations(gens, std::move(name));
    }
    std::uint32_t order = j.at("order").get<std::uint32_t>();
    std::vector<elem_t> table;
    for (const auto& v : j.at("table")) table.push_back(v.get<elem_t>());
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return construct_group(order, std::move(table), std::move(labels), std::move(name));
}

/// Accepts either a built-in group name or an inline group object.
inline FiniteGroup group_from_json_or_name(const nlohmann::json& j, const std::string& fallback_name) {
    if (j.is_string()) return construct_group(j.get<std::string>());
    return group_from_json(j, fallback_name);
}

/// Extension fixture:
/// {"total_group": name|object, "base_group": name|object,
///  "proj_table": [...], "kernel_gen": id, "name"?: str}
inline CentralExtension extension_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw validation_error("extension json: expected an object");
    std::string name = j.value("name", std::string("extension"));
    FiniteGroup total = group_from_json_or_name(j.at("total_group"), name + "-total");
    FiniteGroup base = group_from_json_or_name(j.at("base_group"), name + "-base");
    std::vector<elem_t> proj;
    for (const auto& v : j.at("proj_table")) proj.push_back(v.get<elem_t>());
    elem_t kernel_gen = j.at("kernel_gen").get<elem_t>();
    return CentralExtension(std::move(total), std::move(base), std::move(proj), kernel_gen, std::move(name));
}

/// Cochain dump: {"group": name, "n": modulus, "degree": i,
///                "values": flat row-major array, "units"?: [...]}.
inline nlohmann::json cochain_to_json(const Cochain& c) {
    nlohmann::json j;
    j["group"] = c.group().name();
    j["n"] = c.modulus();
    j["degree"] = c.degree();
    j["values"] = std::vector<std::uint16_t>(c.values().begin(), c.values().end());
    if (!c.coeff().trivial) j["units"] = c.coeff().units;
    return j;
}

/// Rebuilds a cochain against an explicitly supplied group (the dump stores
/// only the group's display name).
inline Cochain cochain_from_json(const nlohmann::json& j, const FiniteGroup& g) {
    std::uint32_t n = j.at("n").get<std::uint32_t>();
    std::uint32_t degree = j.at("degree").get<std::uint32_t>();
    std::vector<std::uint16_t> values = j.at("values").get<std::vector<std::uint16_t>>();
    CoeffModule coeff = j.contains("units")
                            ? make_coeff_module(g, n, j.at("units").get<std::vector<std::uint16_t>>())
                            : trivial_coeff(g, n);
    return Cochain::from_values(g, std::move(coeff), degree, std::move(values));
}

} // namespace acs
