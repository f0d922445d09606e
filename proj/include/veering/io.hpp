#pragma once

#include <cstdio>
#include <optional>
#include <string>

#include <json.hpp>

#include "veering/angles.hpp"
#include "veering/errors.hpp"
#include "veering/triangulation.hpp"

namespace veering {

// tri-json: {"name": str, "tetrahedra": n,
//            "gluings": [[[t', [p0,p1,p2,p3]] x4] x n],
//            "taut": [p_0..p_{n-1}]  (optional)}
// gluings[t][f] = [t', perm] with perm[f] = f'. Serialization is canonical:
// fixed key order, no whitespace, so parse-serialize round trips are
// byte-exact.

struct TriFile {
    Triangulation tri;
    std::optional<TautStructure> taut;
};

inline TriFile parse_triangulation(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail("schema", std::string("not valid JSON: ") + e.what());
    }
    require(j.is_object(), "schema", "top level is not a JSON object");
    require(j.contains("name") && j["name"].is_string(), "schema", "missing string field \"name\"");
    require(j.contains("tetrahedra") && j["tetrahedra"].is_number_integer(), "schema",
            "missing integer field \"tetrahedra\"");
    require(j.contains("gluings") && j["gluings"].is_array(), "schema", "missing array field \"gluings\"");

    TriFile out;
    out.tri.name = j["name"].get<std::string>();
    out.tri.n = j["tetrahedra"].get<int>();
    require(out.tri.n >= 1, "schema", "\"tetrahedra\" must be at least 1");
    require(static_cast<int>(j["gluings"].size()) == out.tri.n, "schema",
            "\"gluings\" has " + std::to_string(j["gluings"].size()) + " entries, expected " +
                std::to_string(out.tri.n));
    out.tri.glue.assign(static_cast<std::size_t>(out.tri.n), {});
    for (int t = 0; t < out.tri.n; ++t) {
        const nlohmann::json& row = j["gluings"][static_cast<std::size_t>(t)];
        require(row.is_array() && row.size() == 4, "schema",
                "gluings[" + std::to_string(t) + "] is not an array of 4 faces");
        for (int f = 0; f < 4; ++f) {
            const nlohmann::json& cell = row[static_cast<std::size_t>(f)];
            std::string where = "gluings[" + std::to_string(t) + "][" + std::to_string(f) + "]";
            require(cell.is_array() && cell.size() == 2 && cell[0].is_number_integer() &&
                        cell[1].is_array() && cell[1].size() == 4,
                    "schema", where + " is not [tet, [p0,p1,p2,p3]]");
            std::array<int, 4> image{};
            for (int i = 0; i < 4; ++i) {
                require(cell[1][static_cast<std::size_t>(i)].is_number_integer(), "schema",
                        where + " permutation entry is not an integer");
                image[static_cast<std::size_t>(i)] = cell[1][static_cast<std::size_t>(i)].get<int>();
                require(image[static_cast<std::size_t>(i)] >= 0 && image[static_cast<std::size_t>(i)] < 4,
                        "schema", where + " permutation entry out of range");
            }
            int seen = 0;
            for (int v : image) seen |= 1 << v;
            require(seen == 0xF, "schema", where + " permutation is not a bijection");
            out.tri.glue[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)] =
                FaceGluing{cell[0].get<int>(), Perm4(image)};
        }
    }
    validate(out.tri);

    if (j.contains("taut")) {
        require(j["taut"].is_array() && static_cast<int>(j["taut"].size()) == out.tri.n, "schema",
                "\"taut\" must be an array of one pair index per tetrahedron");
        TautStructure taut;
        for (const nlohmann::json& v : j["taut"]) {
            require(v.is_number_integer() && v.get<int>() >= 0 && v.get<int>() <= 2, "schema",
                    "\"taut\" entries must be 0, 1 or 2");
            taut.pi_pair.push_back(v.get<int>());
        }
        out.taut = taut;
    }
    for (auto it = j.begin(); it != j.end(); ++it)
        require(it.key() == "name" || it.key() == "tetrahedra" || it.key() == "gluings" || it.key() == "taut",
                "schema", "unknown field \"" + it.key() + "\"");
    return out;
}

inline std::string serialize_triangulation(const Triangulation& tri,
                                           const std::optional<TautStructure>& taut = std::nullopt) {
    nlohmann::ordered_json j;
    j["name"] = tri.name;
    j["tetrahedra"] = tri.n;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int t = 0; t < tri.n; ++t) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = tri.glue[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
            row.push_back({g.tet, {g.perm[0], g.perm[1], g.perm[2], g.perm[3]}});
        }
        rows.push_back(row);
    }
    j["gluings"] = rows;
    if (taut) j["taut"] = taut->pi_pair;
    return j.dump();
}

/// FNV-1a of the canonical serialization; identifies inputs in reports.
inline std::string input_digest(const Triangulation& tri,
                                const std::optional<TautStructure>& taut = std::nullopt) {
    std::string s = serialize_triangulation(tri, taut);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace veering
