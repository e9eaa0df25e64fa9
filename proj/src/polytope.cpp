#include "ehrhart/polytope.hpp"

#include <algorithm>
#include <set>

#include "ehrhart/detail/combinations.hpp"
#include "ehrhart/enumerate.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/linalg.hpp"

namespace ehrhart {

namespace {

Constraint make_constraint(const RatVec& normal_and_offset) {
    IntVec prim = primitive(normal_and_offset);
    Constraint c;
    c.offset = prim.back();
    prim.pop_back();
    c.normal = std::move(prim);
    return c;
}

std::vector<Constraint> affine_equalities(const std::vector<RatVec>& points) {
    const std::size_t n = points.front().size();
    RatMatrix rows;
    rows.reserve(points.size());
    for (const auto& v : points) {
        RatVec row = v;
        row.emplace_back(-1);
        rows.push_back(std::move(row));
    }
    std::vector<Constraint> eqs;
    for (const auto& b : nullspace(rows, n + 1)) eqs.push_back(make_constraint(b));
    return eqs;
}

std::vector<RatVec> dedup_sorted(std::vector<RatVec> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

void check_shape(const std::vector<RatVec>& points) {
    if (points.empty()) throw InvalidArgument("polytope needs at least one point");
    const std::size_t n = points.front().size();
    for (const auto& p : points)
        if (p.size() != n) throw InvalidArgument("points have inconsistent dimensions");
}

}  // namespace

HRep facets(const std::vector<RatVec>& input) {
    check_shape(input);
    const std::vector<RatVec> points = dedup_sorted(input);
    const std::size_t n = points.front().size();
    HRep h;
    h.equalities = affine_equalities(points);
    const std::size_t dim = n - h.equalities.size();
    if (dim == 0) return h;

    std::set<Constraint> found;
    detail::for_each_combination(points.size(), dim, [&](const std::vector<std::size_t>& subset) {
        RatMatrix rows;
        for (auto i : subset) {
            RatVec row = points[i];
            row.emplace_back(-1);
            rows.push_back(std::move(row));
        }
        // Keep the normal inside the direction space of the affine hull.
        for (const auto& e : h.equalities) {
            RatVec row = to_rat(e.normal);
            row.emplace_back(0);
            rows.push_back(std::move(row));
        }
        const auto ns = nullspace(rows, n + 1);
        if (ns.size() != 1) return true;
        RatVec hyper = ns.front();
        const RatVec normal(hyper.begin(), hyper.end() - 1);
        bool any_pos = false, any_neg = false;
        for (const auto& v : points) {
            const Rat s = dot(normal, v) - hyper.back();
            if (s > 0) any_pos = true;
            if (s < 0) any_neg = true;
        }
        if (any_pos && any_neg) return true;
        if (!any_pos && !any_neg) return true;
        if (any_pos)
            for (auto& x : hyper) x = -x;
        found.insert(make_constraint(hyper));
        return true;
    });
    h.inequalities.assign(found.begin(), found.end());
    return h;
}

bool satisfies(const Constraint& c, const RatVec& x, bool strict) {
    const Rat s = dot(c.normal, x);
    return strict ? s < c.offset : s <= c.offset;
}

namespace {

bool on_hyperplane(const Constraint& c, const RatVec& x) { return dot(c.normal, x) == c.offset; }

}  // namespace

RationalPolytope normalize(const std::vector<RatVec>& input, std::string name) {
    check_shape(input);
    const std::vector<RatVec> points = dedup_sorted(input);
    const std::size_t n = points.front().size();
    HRep h = facets(points);

    RationalPolytope p;
    p.name_ = std::move(name);
    p.ambient_dim_ = n;
    p.dim_ = static_cast<long>(n - h.equalities.size());
    for (const auto& v : points) {
        // v is extreme iff its tight constraints pin it down uniquely.
        IntMatrix tight;
        for (const auto& e : h.equalities) tight.push_back(e.normal);
        for (const auto& f : h.inequalities)
            if (on_hyperplane(f, v)) tight.push_back(f.normal);
        if (rank(tight) == n) p.vertices_.push_back(v);
    }
    p.hrep_ = std::move(h);
    p.is_lattice_ = std::all_of(p.vertices_.begin(), p.vertices_.end(), [](const RatVec& v) {
        return std::all_of(v.begin(), v.end(), [](const Rat& x) { return is_integer(x); });
    });
    return p;
}

RationalPolytope normalize(const std::vector<IntVec>& points, std::string name) {
    std::vector<RatVec> r;
    r.reserve(points.size());
    for (const auto& v : points) r.push_back(to_rat(v));
    return normalize(r, std::move(name));
}

Int RationalPolytope::denominator() const {
    Int d = 1;
    for (const auto& v : vertices_)
        for (const auto& x : v) d = lcm(d, x.get_den());
    return d;
}

std::vector<IntVec> RationalPolytope::lattice_vertices() const {
    if (!is_lattice_) throw InvalidArgument("polytope '" + name_ + "' is not a lattice polytope");
    std::vector<IntVec> out;
    out.reserve(vertices_.size());
    for (const auto& v : vertices_) {
        IntVec w;
        w.reserve(v.size());
        for (const auto& x : v) w.emplace_back(x.get_num());
        out.push_back(std::move(w));
    }
    return out;
}

RationalPolytope RationalPolytope::renamed(std::string name) const {
    RationalPolytope p = *this;
    p.name_ = std::move(name);
    return p;
}

std::vector<RatVec> vertices_of(const HRep& hrep, std::size_t ambient_dim) {
    RatMatrix eq_rows;
    RatVec eq_rhs;
    for (const auto& e : hrep.equalities) {
        eq_rows.push_back(to_rat(e.normal));
        eq_rhs.emplace_back(e.offset);
    }
    const std::size_t eq_rank = rank(eq_rows);
    const std::size_t need = ambient_dim - eq_rank;
    std::set<RatVec> out;
    detail::for_each_combination(hrep.inequalities.size(), need, [&](const std::vector<std::size_t>& subset) {
        RatMatrix rows = eq_rows;
        RatVec rhs = eq_rhs;
        for (auto i : subset) {
            rows.push_back(to_rat(hrep.inequalities[i].normal));
            rhs.emplace_back(hrep.inequalities[i].offset);
        }
        if (rank(rows) != ambient_dim) return true;
        const auto x = solve(rows, rhs);
        if (!x) return true;
        for (const auto& f : hrep.inequalities)
            if (!satisfies(f, *x, false)) return true;
        out.insert(*x);
        return true;
    });
    return {out.begin(), out.end()};
}

bool contains(const RationalPolytope& p, const RatVec& x, Region region) {
    if (x.size() != p.ambient_dim()) throw InvalidArgument("contains: point has wrong dimension");
    for (const auto& e : p.hrep().equalities)
        if (!on_hyperplane(e, x)) return false;
    const bool strict = region == Region::relative_interior;
    for (const auto& f : p.hrep().inequalities)
        if (!satisfies(f, x, strict)) return false;
    return true;
}

bool contains(const RationalPolytope& p, const IntVec& x, Region region) { return contains(p, to_rat(x), region); }

RationalPolytope dilate(const RationalPolytope& p, const Rat& t) {
    if (t <= 0) throw InvalidArgument("dilate: factor must be positive");
    RationalPolytope out = p;
    for (auto& v : out.vertices_)
        for (auto& x : v) x *= t;
    auto rescale = [&](Constraint& c) {
        RatVec row = to_rat(c.normal);
        row.emplace_back(c.offset * t);
        c = make_constraint(row);
    };
    for (auto& c : out.hrep_.equalities) rescale(c);
    for (auto& c : out.hrep_.inequalities) rescale(c);
    std::sort(out.hrep_.inequalities.begin(), out.hrep_.inequalities.end());
    out.is_lattice_ = std::all_of(out.vertices_.begin(), out.vertices_.end(), [](const RatVec& v) {
        return std::all_of(v.begin(), v.end(), [](const Rat& x) { return is_integer(x); });
    });
    return out;
}

RationalPolytope translate(const RationalPolytope& p, const RatVec& shift) {
    if (shift.size() != p.ambient_dim()) throw InvalidArgument("translate: shift has wrong dimension");
    RationalPolytope out = p;
    for (auto& v : out.vertices_)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += shift[i];
    std::sort(out.vertices_.begin(), out.vertices_.end());
    auto move = [&](Constraint& c) {
        RatVec row = to_rat(c.normal);
        row.emplace_back(Rat(c.offset) + dot(c.normal, shift));
        c = make_constraint(row);
    };
    for (auto& c : out.hrep_.equalities) move(c);
    for (auto& c : out.hrep_.inequalities) move(c);
    std::sort(out.hrep_.inequalities.begin(), out.hrep_.inequalities.end());
    out.is_lattice_ = std::all_of(out.vertices_.begin(), out.vertices_.end(), [](const RatVec& v) {
        return std::all_of(v.begin(), v.end(), [](const Rat& x) { return is_integer(x); });
    });
    return out;
}

bool contains_polytope(const RationalPolytope& inner, const RationalPolytope& outer) {
    if (inner.ambient_dim() != outer.ambient_dim())
        throw InvalidArgument("contains_polytope: ambient dimensions differ");
    return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                       [&](const RatVec& v) { return contains(outer, v, Region::closed); });
}

ReflexiveResult reflexive_check(const RationalPolytope& p) {
    if (!p.is_lattice()) throw InvalidArgument("reflexive_check: '" + p.name() + "' is not a lattice polytope");
    if (!p.is_full_dimensional())
        throw Unsupported("reflexive_check: only full-dimensional polytopes are supported");
    ReflexiveResult r;
    const auto interior = enumerate_points(p, Region::relative_interior);
    r.interior_points = interior.size();
    if (interior.size() != 1) {
        r.reason = std::to_string(interior.size()) + " interior lattice points (need exactly 1)";
        return r;
    }
    const IntVec& z = interior.front();
    for (const auto& f : p.hrep().inequalities) {
        const Int g = content(f.normal);
        // Lattice facets have integral offsets after dividing by the normal's content.
        const Rat shifted = make_rat(f.offset - dot(f.normal, z), g);
        if (shifted != 1) {
            r.reason = "facet with offset " + to_string(shifted) + " after centering";
            return r;
        }
    }
    r.is_reflexive = true;
    IntVec t;
    for (const auto& x : z) t.emplace_back(-x);
    r.witness_translate = std::move(t);
    r.reason = "all centered facet offsets equal 1";
    return r;
}

}  // namespace ehrhart
