#include "ehrhart/io.hpp"

#include <fstream>
#include <sstream>

#include "ehrhart/errors.hpp"

namespace ehrhart {

namespace {

Rat rat_from(const Json& v) {
    if (v.is_number_integer()) return Rat(Int(v.dump()));
    if (v.is_string()) return parse_rat(v.get<std::string>());
    throw ParseError("expected an integer or a rational string, got " + v.dump());
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::size_t ambient_of(const Json& j) {
    const Json& a = field(j, "ambient_dim");
    if (!a.is_number_integer() || a.get<long>() < 0) throw ParseError("ambient_dim must be a nonnegative integer");
    return a.get<std::size_t>();
}

std::string name_of(const Json& j) {
    const auto it = j.find("name");
    if (it == j.end()) return {};
    if (!it->is_string()) throw ParseError("name must be a string");
    return it->get<std::string>();
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(source + ": " + e.what());
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path.string());
}

RationalPolytope polytope_from_json(const Json& j) {
    const std::size_t ambient = ambient_of(j);
    const Json& vs = field(j, "vertices");
    if (!vs.is_array() || vs.empty()) throw ParseError("vertices must be a nonempty array");
    std::vector<RatVec> points;
    for (const auto& v : vs) {
        if (!v.is_array() || v.size() != ambient) throw ParseError("vertex " + v.dump() + " does not have ambient_dim coordinates");
        RatVec p;
        for (const auto& x : v) p.push_back(rat_from(x));
        points.push_back(std::move(p));
    }
    return normalize(points, name_of(j));
}

Json polytope_to_json(const RationalPolytope& p) {
    Json j;
    j["name"] = p.name();
    j["ambient_dim"] = p.ambient_dim();
    Json vs = Json::array();
    for (const auto& v : p.vertices()) vs.push_back(rat_array(v));
    j["vertices"] = vs;
    return j;
}

NamedCone cone_from_json(const Json& j) {
    const std::size_t ambient = ambient_of(j);
    const Json& gs = field(j, "generators");
    if (!gs.is_array() || gs.empty()) throw ParseError("generators must be a nonempty array");
    std::vector<IntVec> gens;
    for (const auto& g : gs) {
        if (!g.is_array() || g.size() != ambient) throw ParseError("generator " + g.dump() + " does not have ambient_dim coordinates");
        IntVec v;
        for (const auto& x : g) {
            const Rat r = rat_from(x);
            if (!is_integer(r)) throw ParseError("cone generators must be integral");
            v.push_back(r.get_num());
        }
        gens.push_back(std::move(v));
    }
    return {name_of(j), RationalCone(ambient, std::move(gens))};
}

Json cone_to_json(const RationalCone& k, const std::string& name) {
    Json j;
    if (!name.empty()) j["name"] = name;
    j["ambient_dim"] = k.ambient_dim();
    Json gs = Json::array();
    for (const auto& g : k.generators()) gs.push_back(int_array(g));
    j["generators"] = gs;
    return j;
}

RationalPolytope read_polytope(const std::filesystem::path& path) {
    RationalPolytope p = polytope_from_json(read_json_file(path));
    if (p.name().empty()) p = p.renamed(path.stem().string());
    return p;
}

NamedCone read_cone(const std::filesystem::path& path) {
    NamedCone c = cone_from_json(read_json_file(path));
    if (c.name.empty()) c.name = path.stem().string();
    return c;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ehrhart
