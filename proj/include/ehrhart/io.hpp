#pragma once

// JSON documents for polytopes and cones.
//
//   polytope: { "name": string, "ambient_dim": int, "vertices": [[rat, ...], ...] }
//   cone:     { "name": string, "ambient_dim": int, "generators": [[int, ...], ...] }
//
// A rat is a JSON integer or a string "p" / "p/q". "name" is optional.

#include <filesystem>
#include <string>
#include <string_view>

#include "ehrhart/cones.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/report.hpp"

namespace ehrhart {

struct NamedCone {
    std::string name;
    RationalCone cone;
};

/// Throws ParseError (with line and column from the parser) on malformed text.
Json parse_json(std::string_view text, const std::string& source = "<input>");
Json read_json_file(const std::filesystem::path& path);

/// Throws ParseError on a document of the wrong shape.
RationalPolytope polytope_from_json(const Json& j);
Json polytope_to_json(const RationalPolytope& p);

NamedCone cone_from_json(const Json& j);
Json cone_to_json(const RationalCone& k, const std::string& name = {});

RationalPolytope read_polytope(const std::filesystem::path& path);
NamedCone read_cone(const std::filesystem::path& path);

/// Two-space indented dump followed by a newline.
std::string dump(const Json& j);

}  // namespace ehrhart
