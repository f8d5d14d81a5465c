#pragma once

#include <fstream>
#include <set>
#include <string>

#include <json.hpp>

#include "liepois/quasitriangular.hpp"

namespace liepois {

// Algebra-spec JSON: {"dim": n, "basis": [...], "brackets": [[i,j,k,"p/q"],...],
// "r": [[i,j,"p/q"],...]}. Indices 0-based, rationals as decimal-free strings
// (or bare integers). Unknown fields are rejected.
inline AlgebraBundle load_algebra_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw InputError("algebra spec: top level must be an object");
    static const std::set<std::string> known = {"dim", "basis", "brackets", "r"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!known.count(it.key()))
            throw InputError("algebra spec: unknown field \"" + it.key() + "\"");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer())
        throw InputError("algebra spec: missing integer field \"dim\"");
    long long dim_ll = doc["dim"].get<long long>();
    if (dim_ll < 1 || dim_ll > 16) throw InputError("algebra spec: dim out of range");
    unsigned dim = static_cast<unsigned>(dim_ll);

    std::vector<std::string> labels;
    if (!doc.contains("basis") || !doc["basis"].is_array() || doc["basis"].size() != dim)
        throw InputError("algebra spec: \"basis\" must list dim strings");
    for (const auto& b : doc["basis"]) {
        if (!b.is_string()) throw InputError("algebra spec: basis labels must be strings");
        labels.push_back(b.get<std::string>());
    }

    auto parse_rational = [](const nlohmann::json& v, const char* where) {
        if (v.is_number_integer())
            return Rational(static_cast<long long>(v.get<long long>()));
        if (v.is_string()) {
            std::string s = v.get<std::string>();
            if (s.find('.') != std::string::npos)
                throw InputError(std::string("algebra spec: decimal rational in ") + where);
            try {
                return Rational::from_string(s);
            } catch (const std::exception&) {
                throw InputError(std::string("algebra spec: bad rational in ") + where);
            }
        }
        throw InputError(std::string("algebra spec: rational must be string in ") + where);
    };
    auto parse_index = [dim](const nlohmann::json& v, const char* where) {
        if (!v.is_number_integer())
            throw InputError(std::string("algebra spec: index must be integer in ") + where);
        long long i = v.get<long long>();
        if (i < 0 || i >= static_cast<long long>(dim))
            throw InputError(std::string("algebra spec: index out of range in ") + where);
        return static_cast<unsigned>(i);
    };

    LieAlgebra g(dim, labels);
    if (doc.contains("brackets")) {
        if (!doc["brackets"].is_array())
            throw InputError("algebra spec: \"brackets\" must be an array");
        for (const auto& e : doc["brackets"]) {
            if (!e.is_array() || e.size() != 4)
                throw InputError("algebra spec: bracket entries are [i, j, k, rational]");
            g.set_structure_constant(parse_index(e[0], "brackets"),
                                     parse_index(e[1], "brackets"),
                                     parse_index(e[2], "brackets"),
                                     parse_rational(e[3], "brackets"));
        }
    }
    Matrix r = zero_matrix(dim);
    if (doc.contains("r")) {
        if (!doc["r"].is_array()) throw InputError("algebra spec: \"r\" must be an array");
        for (const auto& e : doc["r"]) {
            if (!e.is_array() || e.size() != 3)
                throw InputError("algebra spec: r entries are [i, j, rational]");
            r[parse_index(e[0], "r")][parse_index(e[1], "r")] = parse_rational(e[2], "r");
        }
    }
    return {std::move(g), std::move(r)};
}

inline AlgebraBundle load_algebra(const std::string& name_or_path) {
    if (name_or_path == "sl2") return builtin_sl2();
    if (name_or_path == "abelian2") return builtin_abelian2();
    std::ifstream in(name_or_path);
    if (!in) throw InputError("cannot open algebra file: " + name_or_path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("algebra file " + name_or_path + ": " + e.what());
    }
    return load_algebra_json(doc);
}

}  // namespace liepois
