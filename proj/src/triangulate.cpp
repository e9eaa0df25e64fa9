#include "ehrhart/triangulate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ehrhart/cones.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/linalg.hpp"

namespace ehrhart {

namespace {

void subsets_into(const Cell& cell, std::set<Cell>& out) {
    const std::size_t n = cell.size();
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        Cell f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ul << i)) f.push_back(cell[i]);
        out.insert(std::move(f));
    }
}

bool by_size_then_lex(const Cell& a, const Cell& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

IntVec f_vector_of(const std::vector<Cell>& faces, long e) {
    IntVec f(static_cast<std::size_t>(e + 2));
    for (const auto& face : faces) f[face.size()] += 1;
    return f;
}

}  // namespace

std::vector<Cell> Triangulation::faces() const {
    std::set<Cell> all;
    for (const auto& c : cells) subsets_into(c, all);
    if (all.empty()) all.insert(Cell{});
    std::vector<Cell> out(all.begin(), all.end());
    std::sort(out.begin(), out.end(), by_size_then_lex);
    return out;
}

IntVec Triangulation::f_vector() const { return f_vector_of(faces(), dim); }

std::vector<IntVec> Triangulation::lifted(const Cell& face) const {
    std::vector<IntVec> out;
    for (auto i : face) {
        IntVec v = points[i];
        v.push_back(1);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Cell> Triangulation::boundary_faces() const {
    std::map<Cell, int> seen;
    for (const auto& c : cells)
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
            Cell f;
            for (std::size_t j = 0; j < c.size(); ++j)
                if (j != drop) f.push_back(c[j]);
            ++seen[f];
        }
    std::vector<Cell> out;
    for (const auto& [f, count] : seen)
        if (count == 1) out.push_back(f);
    return out;
}

Triangulation placing_triangulation(const RationalPolytope& p, Flavor flavor) {
    if (!p.is_lattice()) throw InvalidArgument("placing triangulation needs a lattice polytope");
    Triangulation t;
    t.dim = p.dim();
    t.points = flavor == Flavor::vertices ? p.lattice_vertices() : enumerate_points(p);
    std::sort(t.points.begin(), t.points.end());
    std::vector<IntVec> lifted;
    for (auto v : t.points) {
        v.push_back(1);
        lifted.push_back(std::move(v));
    }
    t.cells = place_vectors(lifted);
    for (const auto& c : t.cells)
        if (static_cast<long>(c.size()) != t.dim + 1) throw TheoremViolation("placing produced a cell of wrong size");
    return t;
}

Poly h_polynomial(const IntVec& f, long e) {
    if (static_cast<long>(f.size()) != e + 2) throw InvalidArgument("h_polynomial: f-vector length must be e + 2");
    Poly h;
    const Poly one_minus{1, -1};
    for (long k = -1; k <= e; ++k) {
        const Int& fk = f[static_cast<std::size_t>(k + 1)];
        if (fk == 0) continue;
        h += Poly::monomial(Rat(fk), static_cast<std::size_t>(k + 1)) * pow(one_minus, static_cast<unsigned>(e - k));
    }
    return h;
}

LinkData link(const Triangulation& t, const Cell& delta) {
    Cell d = delta;
    std::sort(d.begin(), d.end());
    std::set<Cell> faces;
    bool found = false;
    for (const auto& c : t.cells) {
        if (!std::includes(c.begin(), c.end(), d.begin(), d.end())) continue;
        found = true;
        Cell rest;
        std::set_difference(c.begin(), c.end(), d.begin(), d.end(), std::back_inserter(rest));
        subsets_into(rest, faces);
    }
    if (!found && !(d.empty() && t.cells.empty())) throw InvalidArgument("link: simplex is not a face of the triangulation");
    if (faces.empty()) faces.insert(Cell{});
    LinkData out;
    out.dim = t.dim - static_cast<long>(d.size());
    out.f = f_vector_of({faces.begin(), faces.end()}, out.dim);
    return out;
}

Poly box_polynomial(const std::vector<IntVec>& lifted_vertices) {
    if (lifted_vertices.empty()) return Poly{1};
    HalfOpenSimplicialCone c{lifted_vertices, std::vector<bool>(lifted_vertices.size(), false)};
    Poly b;
    for (const auto& pt : parallelepiped_points(c, BoxMode::open))
        b += Poly::monomial(Rat(1), pt.height.get_ui());
    return b;
}

Poly box_polynomial(const Triangulation& t, const Cell& delta) { return box_polynomial(t.lifted(delta)); }

Int normalized_volume(const Triangulation& t, const Cell& face) { return lattice_index(t.lifted(face)); }

Int normalized_volume(const Triangulation& t) {
    Int v = 0;
    for (const auto& c : t.cells) v += normalized_volume(t, c);
    return v;
}

bool is_unimodular(const Triangulation& t) {
    return std::all_of(t.cells.begin(), t.cells.end(), [&](const Cell& c) { return normalized_volume(t, c) == 1; });
}

bool is_boundary_unimodular(const Triangulation& t) {
    const auto b = t.boundary_faces();
    return std::all_of(b.begin(), b.end(), [&](const Cell& c) { return normalized_volume(t, c) == 1; });
}

HStarData betke_mcmullen(const Triangulation& t) {
    Poly h;
    for (const auto& face : t.faces()) {
        const Poly b = box_polynomial(t, face);
        if (b.is_zero()) continue;
        const LinkData l = link(t, face);
        h += h_polynomial(l.f, l.dim) * b;
    }
    return make_hstar(h.coefficients(), t.dim, 1);
}

Report betke_mcmullen_check(const RationalPolytope& p, const Triangulation& t, const EhrhartResult& e) {
    Report r;
    r.theorem = "betke-mcmullen";
    const HStarData bm = betke_mcmullen(t);
    const Poly ht = h_polynomial(t.f_vector(), t.dim);
    const bool unimodular = is_unimodular(t);
    const long top = std::max({bm.degree, e.hstar.degree, ht.degree(), 0L});
    for (long j = 0; j <= top; ++j) {
        const Rat counted = e.hstar.at(j);
        r.add(Json{{"check", "sum-over-faces"}, {"j", j}}, bm.at(j), counted, bm.at(j) == counted);
        r.add(Json{{"check", "hstar-dominates-hT"}, {"j", j}}, ht.coeff(j), counted, ht.coeff(j) <= counted);
        if (unimodular)
            r.add(Json{{"check", "unimodular-equality"}, {"j", j}}, ht.coeff(j), counted, ht.coeff(j) == counted);
    }
    r.details["polytope"] = p.name();
    r.details["cells"] = t.cells.size();
    r.details["unimodular"] = unimodular;
    r.details["normalized_volume"] = normalized_volume(t).get_si();
    r.details["h_T"] = rat_array(ht.coefficients());
    r.details["hstar"] = rat_array(bm.coeffs);
    return r.conclude();
}

Json to_json(const Triangulation& t) {
    Json j;
    j["dim"] = t.dim;
    Json pts = Json::array();
    for (const auto& p : t.points) pts.push_back(int_array(p));
    j["points"] = pts;
    Json cells = Json::array();
    for (const auto& c : t.cells) cells.push_back(c);
    j["cells"] = cells;
    j["f_vector"] = int_array(t.f_vector());
    j["unimodular"] = is_unimodular(t);
    j["normalized_volume"] = normalized_volume(t).get_si();
    return j;
}

}  // namespace ehrhart
