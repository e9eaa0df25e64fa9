#include "ehrhart/cli.hpp"

#include <fstream>
#include <functional>
#include <map>

#include "ehrhart/cones.hpp"
#include "ehrhart/corpus.hpp"
#include "ehrhart/enumerate.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/io.hpp"
#include "ehrhart/semimagic.hpp"
#include "ehrhart/structure.hpp"
#include "ehrhart/triangulate.hpp"

namespace ehrhart {

namespace {

using Handler = std::function<RunResult(const RunConfig&)>;

const std::string& input(const RunConfig& c, std::size_t i) {
    if (c.inputs.size() <= i)
        throw InvalidArgument("command '" + c.command + "' needs " + std::to_string(i + 1) + " input file(s)");
    return c.inputs[i];
}

Flavor flavor_of(const RunConfig& c) {
    if (c.flavor == "vertices") return Flavor::vertices;
    if (c.flavor == "all") return Flavor::all_lattice_points;
    throw InvalidArgument("unknown triangulation flavor '" + c.flavor + "' (vertices | all)");
}

std::vector<Rat> x0_points(const RunConfig& c) {
    std::vector<Rat> out;
    for (const auto& s : c.x0) out.push_back(parse_rat(s));
    if (out.empty()) out = {make_rat(1, 2), make_rat(1, 3), make_rat(-3, 5)};
    return out;
}

int exit_for(Verdict v) { return v == Verdict::fail ? 1 : 0; }

RunResult from_report(const Report& r) { return {exit_for(r.verdict), to_json(r)}; }

Json quasi_json(const QuasiPoly& q) {
    const QuasiPoly r = q.reduced();
    if (r.period() == 1) return r.constituent(0).to_string("n");
    Json a = Json::array();
    for (const auto& c : r.constituents()) a.push_back(c.to_string("n"));
    return a;
}

Json summary(const Report& r) {
    Json j = to_json(r);
    j["failures"] = r.failures();
    return j;
}

RunResult cmd_count(const RunConfig& c) {
    const auto p = read_polytope(input(c, 0));
    IntVec closed, interior;
    for (long n = 0; n <= c.max_n; ++n) {
        closed.push_back(count_dilate(p, n));
        interior.push_back(n == 0 ? Int(p.dim() == 0 ? 1 : 0) : count_dilate(p, n, Region::relative_interior));
    }
    Json j;
    j["polytope"] = p.name();
    j["counts"] = int_array(closed);
    j["interior_counts"] = int_array(interior);
    return {0, j};
}

RunResult cmd_ehrhart(const RunConfig& c) {
    const auto p = read_polytope(input(c, 0));
    const auto e = ehrhart(p);
    Json j;
    j["polytope"] = p.name();
    j["dim"] = e.dim;
    j["period"] = e.minimal_period();
    j["poly"] = quasi_json(e.quasi);
    j["interior_poly"] = quasi_json(e.quasi_interior);
    j["hstar"] = rat_array(e.hstar.coeffs);
    j["hstar_period"] = e.hstar.period;
    return {0, j};
}

RunResult cmd_hstar(const RunConfig& c) {
    const auto p = read_polytope(input(c, 0));
    const auto e = ehrhart(p);
    Json j;
    j["polytope"] = p.name();
    j["dim"] = e.dim;
    j["period"] = e.hstar.period;
    j["hstar"] = rat_array(e.hstar.coeffs);
    j["degree"] = e.hstar.degree;
    j["codegree"] = e.hstar.codegree;
    j["counts"] = rat_array(e.counts);
    return {0, j};
}

RunResult cmd_reciprocity(const RunConfig& c) {
    const auto p = read_polytope(input(c, 0));
    return from_report(reciprocity_check(p, ehrhart(p), c.max_n, c.max_n));
}

RunResult cmd_cone_reciprocity(const RunConfig& c) {
    const auto k = read_cone(input(c, 0));
    Report r = stanley_reciprocity_check(k.cone, c.trials, c.seed);
    r.details["cone"] = k.name;
    return from_report(r);
}

RunResult cmd_specialize(const RunConfig& c) {
    const auto p = read_polytope(input(c, 0));
    return from_report(specialization_check(p, x0_points(c)));
}

RunResult cmd_decompose(const RunConfig& c) {
    const auto p = read_polytope(input(c, 0));
    const auto t = placing_triangulation(p, flavor_of(c));
    Report r = betke_mcmullen_check(p, t, ehrhart(p));
    r.details["triangulation"] = to_json(t);
    return from_report(r);
}

RunResult cmd_triangulate(const RunConfig& c) {
    const auto p = read_polytope(input(c, 0));
    const auto t = placing_triangulation(p, flavor_of(c));
    Json j = to_json(t);
    j["polytope"] = p.name();
    j["flavor"] = c.flavor;
    j["h_T"] = rat_array(h_polynomial(t.f_vector(), t.dim).coefficients());
    return {0, j};
}

RunResult cmd_inequalities(const RunConfig& c) {
    const auto p = read_polytope(input(c, 0));
    const auto e = ehrhart(p);
    const auto pr = profile(e.hstar);
    std::vector<Report> reports{stanley_inequalities(pr), stapledon_inequalities(pr), athanasiadis_check(p, e)};
    Verdict v = Verdict::pass;
    Json all = Json::array();
    for (const auto& r : reports) {
        v = combine(v, r.verdict);
        all.push_back(to_json(r));
    }
    Json j;
    j["polytope"] = p.name();
    j["verdict"] = to_string(v);
    j["reports"] = all;
    return {exit_for(v), j};
}

RunResult cmd_hibi(const RunConfig& c) { return from_report(hibi_check(read_polytope(input(c, 0)))); }

RunResult cmd_ab(const RunConfig& c) {
    const auto p = read_polytope(input(c, 0));
    return from_report(ab_check(p, ehrhart(p)));
}

RunResult cmd_monotonic(const RunConfig& c) {
    return from_report(monotonicity_check(read_polytope(input(c, 0)), read_polytope(input(c, 1))));
}

RunResult cmd_semimagic(const RunConfig& c) {
    const long rmax = c.rmax < 0 ? 0 : c.rmax;
    AdgResult a = adg_report(c.n, rmax);
    if (c.rmax >= 0) {
        a.table.values.resize(static_cast<std::size_t>(c.rmax) + 1);
        a.report.details["values"] = int_array(IntVec(a.table.values.begin(), a.table.values.end()));
    }
    return from_report(a.report);
}

Json polytope_entry(const RationalPolytope& p, const RunConfig& c, Verdict& overall) {
    Json entry;
    entry["name"] = p.name();
    entry["kind"] = "polytope";
    Json checks = Json::array();
    auto push = [&](const Report& r) {
        overall = combine(overall, r.verdict);
        checks.push_back(summary(r));
    };
    try {
        const auto e = ehrhart(p);
        entry["dim"] = e.dim;
        entry["period"] = e.period;
        entry["hstar"] = rat_array(e.hstar.coeffs);
        push(reciprocity_check(p, e, c.max_n, c.max_n));
        push(specialization_check(p, e, x0_points(c)));
        if (p.is_lattice()) {
            for (Flavor f : {Flavor::vertices, Flavor::all_lattice_points}) {
                Report r = betke_mcmullen_check(p, placing_triangulation(p, f), e);
                r.details["flavor"] = f == Flavor::vertices ? "vertices" : "all";
                push(r);
            }
            const auto pr = profile(e.hstar);
            push(stanley_inequalities(pr));
            push(stapledon_inequalities(pr));
            push(ab_check(p, e));
            push(athanasiadis_check(p, e));
            if (p.is_full_dimensional()) push(hibi_check(p, e));
        }
    } catch (const Error& err) {
        overall = Verdict::fail;
        entry["error"] = err.what();
    }
    entry["checks"] = checks;
    return entry;
}

RunResult cmd_corpus_verify(const RunConfig& c) {
    const std::filesystem::path dir = c.corpus.empty() ? default_corpus_dir() : std::filesystem::path(c.corpus);
    const Corpus corpus = load_corpus(dir);
    Verdict overall = Verdict::pass;
    Json entries = Json::array();
    for (const auto& p : corpus.polytopes) entries.push_back(polytope_entry(p, c, overall));
    for (const auto& k : corpus.cones) {
        Json entry;
        entry["name"] = k.name;
        entry["kind"] = "cone";
        Json checks = Json::array();
        try {
            for (const Report& r : {stanley_reciprocity_check(k.cone, c.trials, c.seed), partition_check(k.cone, 4)}) {
                overall = combine(overall, r.verdict);
                checks.push_back(summary(r));
            }
        } catch (const Error& err) {
            overall = Verdict::fail;
            entry["error"] = err.what();
        }
        entry["checks"] = checks;
        entries.push_back(entry);
    }
    for (const auto& p : random_lattice_polytopes(c.random_count, c.seed)) {
        Json entry;
        entry["name"] = p.name();
        entry["kind"] = "random-polytope";
        entry["polytope"] = polytope_to_json(p);
        try {
            const Report r = reciprocity_check(p, ehrhart(p), c.max_n, c.max_n);
            overall = combine(overall, r.verdict);
            entry["checks"] = Json::array({summary(r)});
        } catch (const Error& err) {
            overall = Verdict::fail;
            entry["error"] = err.what();
        }
        entries.push_back(entry);
    }
    std::size_t checks = 0, failed = 0, not_met = 0;
    for (const auto& e : entries) {
        if (e.contains("error")) ++failed;
        if (!e.contains("checks")) continue;
        for (const auto& r : e["checks"]) {
            ++checks;
            if (r["verdict"] == "fail") ++failed;
            if (r["verdict"] == "hypothesis-not-met") ++not_met;
        }
    }
    Json j;
    j["seed"] = c.seed;
    j["verdict"] = to_string(overall);
    j["summary"] = {{"polytopes", corpus.polytopes.size()},
                    {"cones", corpus.cones.size()},
                    {"random_polytopes", c.random_count},
                    {"checks", checks},
                    {"failed", failed},
                    {"hypothesis_not_met", not_met}};
    j["entries"] = entries;
    return {exit_for(overall), j};
}

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> h{
        {"count", cmd_count},
        {"ehrhart", cmd_ehrhart},
        {"hstar", cmd_hstar},
        {"reciprocity", cmd_reciprocity},
        {"cone-reciprocity", cmd_cone_reciprocity},
        {"specialize", cmd_specialize},
        {"decompose", cmd_decompose},
        {"triangulate", cmd_triangulate},
        {"inequalities", cmd_inequalities},
        {"hibi", cmd_hibi},
        {"ab", cmd_ab},
        {"monotonic", cmd_monotonic},
        {"semimagic", cmd_semimagic},
        {"corpus-verify", cmd_corpus_verify},
    };
    return h;
}

std::string kind_of(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "parse-error";
    if (dynamic_cast<const Unsupported*>(&e)) return "unsupported";
    if (dynamic_cast<const InvalidArgument*>(&e)) return "invalid-argument";
    if (dynamic_cast<const InconsistentCounts*>(&e)) return "inconsistent-counts";
    if (dynamic_cast<const PoleError*>(&e)) return "pole";
    if (dynamic_cast<const TheoremViolation*>(&e)) return "theorem-violation";
    return "error";
}

}  // namespace

std::vector<std::string> commands() {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
}

RunResult run(const RunConfig& config) {
    const auto& h = handlers();
    const auto it = h.find(config.command);
    try {
        if (it == h.end()) throw InvalidArgument("unknown command '" + config.command + "'");
        return it->second(config);
    } catch (const std::exception& e) {
        return {1, Json{{"error", e.what()}, {"kind", kind_of(e)}}};
    }
}

int run_and_emit(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const RunResult r = run(config);
    const std::string text = dump(r.output);
    if (config.out.empty()) {
        out << text;
    } else {
        std::ofstream f(config.out);
        if (!f) {
            err << "cannot write " << config.out << "\n";
            return 1;
        }
        f << text;
    }
    if (r.output.contains("error")) err << "error: " << r.output["error"].get<std::string>() << "\n";
    return r.exit_code;
}

}  // namespace ehrhart
