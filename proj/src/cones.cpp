#include "ehrhart/cones.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>

#include "ehrhart/detail/combinations.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/linalg.hpp"
#include "ehrhart/placing.hpp"

namespace ehrhart {

namespace {

std::string vec_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

// Inward facet normals of cone(generators) inside its span. Normals are
// orthogonal to the span complement, so they vanish exactly on facets.
std::vector<IntVec> inward_facets(std::size_t ambient, const std::vector<IntVec>& gens) {
    const auto complement = span_complement(gens, ambient);
    RatMatrix grows;
    for (const auto& g : gens) grows.push_back(to_rat(g));
    const std::size_t r = rank(grows);
    std::set<IntVec> found;
    detail::for_each_combination(gens.size(), r - 1, [&](const std::vector<std::size_t>& sub) {
        RatMatrix rows;
        for (auto i : sub) rows.push_back(to_rat(gens[i]));
        for (const auto& c : complement) rows.push_back(to_rat(c));
        const auto ns = nullspace(rows, ambient);
        if (ns.size() != 1) return true;
        IntVec a = primitive(ns.front());
        bool pos = false;
        bool neg = false;
        for (const auto& g : gens) {
            const Int s = dot(a, g);
            if (s > 0) pos = true;
            if (s < 0) neg = true;
        }
        if (pos && neg) return true;
        if (neg)
            for (auto& x : a) x = -x;
        if (pos || neg) found.insert(std::move(a));
        return true;
    });
    return {found.begin(), found.end()};
}

Rat monomial(const RatVec& z, const IntVec& m) {
    Rat v = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!m[i].fits_slong_p()) throw Unsupported("monomial exponent too large");
        v *= pow(z[i], m[i].get_si());
    }
    return v;
}

bool in_box(const Rat& l, bool open_low, bool open_high) {
    if (open_low ? l <= 0 : l < 0) return false;
    if (open_high ? l >= 1 : l > 1) return false;
    return true;
}

}  // namespace

bool is_pointed(std::size_t ambient, const std::vector<IntVec>& gens) {
    if (gens.empty()) return true;
    RatMatrix grows;
    for (const auto& g : gens) grows.push_back(to_rat(g));
    const std::size_t r = rank(grows);
    const auto normals = inward_facets(ambient, gens);
    IntMatrix m(normals.begin(), normals.end());
    return rank(m) == r;
}

RationalCone::RationalCone(std::size_t ambient_dim, std::vector<IntVec> generators) : ambient_dim_(ambient_dim) {
    for (const auto& g : generators) {
        if (g.size() != ambient_dim) throw InvalidArgument("cone generator has wrong dimension");
        if (is_zero(g)) throw InvalidArgument("cone generator is zero");
        IntVec p = primitive(to_rat(g));
        if (std::find(generators_.begin(), generators_.end(), p) == generators_.end())
            generators_.push_back(std::move(p));
    }
    if (generators_.empty()) throw InvalidArgument("cone needs at least one generator");
    if (!is_pointed(ambient_dim_, generators_)) throw Unsupported("cone is not pointed");
    RatMatrix rows;
    for (const auto& g : generators_) rows.push_back(to_rat(g));
    dim_ = static_cast<long>(rank(rows));
}

ConeHRep cone_inequalities(const RationalCone& k) {
    ConeHRep h;
    for (auto a : inward_facets(k.ambient_dim(), k.generators())) {
        for (auto& x : a) x = -x;
        h.inequalities.push_back(std::move(a));
    }
    std::sort(h.inequalities.begin(), h.inequalities.end());
    h.equalities = span_complement(k.generators(), k.ambient_dim());
    return h;
}

bool cone_contains(const ConeHRep& h, const IntVec& x, ConeRegion region) {
    for (const auto& e : h.equalities)
        if (dot(e, x) != 0) return false;
    for (const auto& a : h.inequalities) {
        const Int s = dot(a, x);
        if (s > 0 || (region == ConeRegion::interior && s == 0)) return false;
    }
    return true;
}

RationalCone cone_from_inequalities(const ConeHRep& h, std::size_t ambient) {
    RatMatrix eq;
    for (const auto& e : h.equalities) {
        if (e.size() != ambient) throw InvalidArgument("cone constraint has wrong dimension");
        eq.push_back(to_rat(e));
    }
    for (const auto& a : h.inequalities)
        if (a.size() != ambient) throw InvalidArgument("cone constraint has wrong dimension");
    const std::size_t r = rank(eq);
    if (r >= ambient) throw InvalidArgument("cone is the origin");
    std::set<IntVec> rays;
    detail::for_each_combination(h.inequalities.size(), ambient - 1 - r, [&](const std::vector<std::size_t>& sub) {
        RatMatrix rows = eq;
        for (auto i : sub) rows.push_back(to_rat(h.inequalities[i]));
        const auto ns = nullspace(rows, ambient);
        if (ns.size() != 1) return true;
        IntVec v = primitive(ns.front());
        for (int sign = 0; sign < 2; ++sign) {
            if (std::all_of(h.inequalities.begin(), h.inequalities.end(),
                            [&](const IntVec& a) { return dot(a, v) <= 0; }))
                rays.insert(v);
            for (auto& x : v) x = -x;
        }
        return true;
    });
    if (rays.empty()) throw Unsupported("cone is not pointed");
    return RationalCone(ambient, {rays.begin(), rays.end()});
}

RationalCone homogenize(const RationalPolytope& p) {
    std::vector<IntVec> gens;
    for (auto v : p.vertices()) {
        v.push_back(1);
        gens.push_back(primitive(v));
    }
    return RationalCone(p.ambient_dim() + 1, std::move(gens));
}

std::vector<BoxPoint> parallelepiped_points(const HalfOpenSimplicialCone& c, BoxMode mode) {
    const auto& gens = c.generators;
    const std::size_t k = gens.size();
    if (k == 0) return {BoxPoint{{}, 0}};
    const std::size_t n = gens.front().size();
    if (c.open.size() != k) throw InvalidArgument("open flags do not match generators");

    // Pick k coordinates on which the generators are independent.
    std::vector<std::size_t> pivots;
    RatMatrix sub;
    for (std::size_t j = 0; j < n && pivots.size() < k; ++j) {
        RatVec row(k);
        for (std::size_t i = 0; i < k; ++i) row[i] = gens[i][j];
        sub.push_back(row);
        if (rank(sub) == pivots.size() + 1)
            pivots.push_back(j);
        else
            sub.pop_back();
    }
    if (pivots.size() != k) throw InvalidArgument("parallelepiped generators are dependent");

    // Inverse of the pivot block, column by column.
    std::vector<RatVec> inv(k, RatVec(k));
    for (std::size_t col = 0; col < k; ++col) {
        RatVec e(k);
        e[col] = 1;
        const auto x = solve(sub, e);
        for (std::size_t i = 0; i < k; ++i) inv[i][col] = (*x)[i];
    }

    std::vector<Int> lo(k), hi(k);
    for (std::size_t t = 0; t < k; ++t)
        for (const auto& g : gens) {
            const Int& v = g[pivots[t]];
            if (v < 0) lo[t] += v;
            else hi[t] += v;
        }

    std::vector<BoxPoint> out;
    std::vector<Int> cur = lo;
    while (true) {
        RatVec lambda(k);
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
            Rat l = 0;
            for (std::size_t t = 0; t < k; ++t) l += inv[i][t] * cur[t];
            bool open_low, open_high;
            switch (mode) {
                case BoxMode::half_open: open_low = c.open[i]; open_high = !c.open[i]; break;
                case BoxMode::open: open_low = open_high = true; break;
                default: open_low = !c.open[i]; open_high = c.open[i]; break;
            }
            ok = in_box(l, open_low, open_high);
            lambda[i] = l;
        }
        if (ok) {
            IntVec m(n);
            for (std::size_t j = 0; j < n && ok; ++j) {
                Rat s = 0;
                for (std::size_t i = 0; i < k; ++i) s += lambda[i] * gens[i][j];
                if (!is_integer(s)) ok = false;
                else m[j] = s.get_num();
            }
            if (ok) {
                Int h = m.back();
                out.push_back({std::move(m), std::move(h)});
            }
        }
        std::size_t t = 0;
        while (t < k && cur[t] == hi[t]) {
            cur[t] = lo[t];
            ++t;
        }
        if (t == k) break;
        ++cur[t];
    }
    std::sort(out.begin(), out.end(), [](const BoxPoint& a, const BoxPoint& b) { return a.point < b.point; });
    return out;
}

Decomposition decompose(const RationalCone& k) {
    const auto& gens = k.generators();
    const auto cells = place_vectors(gens);
    const auto complement = span_complement(gens, k.ambient_dim());

    // Normal of each facet of each cell, indexed like the cell.
    std::vector<std::vector<IntVec>> normals;
    for (const auto& cell : cells) {
        std::vector<IntVec> row;
        for (std::size_t d = 0; d < cell.size(); ++d) row.push_back(facet_normal(gens, cell, d, complement));
        normals.push_back(std::move(row));
    }

    std::mt19937_64 rng(0x5eed);
    Decomposition out;
    while (true) {
        RatVec w(k.ambient_dim());
        for (auto i : cells.front()) {
            const Rat c = 1 + make_rat(static_cast<long>(rng() % 1000003), 1000003);
            for (std::size_t j = 0; j < w.size(); ++j) w[j] += c * gens[i][j];
        }
        bool generic = true;
        for (const auto& row : normals)
            for (const auto& a : row)
                if (dot(a, w) == 0) generic = false;
        if (!generic) continue;
        out.reference = std::move(w);
        break;
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
        HalfOpenSimplicialCone piece;
        for (std::size_t d = 0; d < cells[c].size(); ++d) {
            piece.generators.push_back(gens[cells[c][d]]);
            piece.open.push_back(dot(normals[c][d], out.reference) < 0);
        }
        out.pieces.push_back(std::move(piece));
    }
    return out;
}

IntVec grading_vector(const RationalCone& k) {
    IntVec g(k.ambient_dim());
    for (const auto& a : inward_facets(k.ambient_dim(), k.generators()))
        for (std::size_t j = 0; j < g.size(); ++j) g[j] += a[j];
    return g;
}

std::vector<IntVec> piece_points_up_to(const HalfOpenSimplicialCone& c, BoxMode mode, const IntVec& grading,
                                       const Int& max_height) {
    std::vector<Int> step;
    for (const auto& g : c.generators) {
        step.push_back(dot(grading, g));
        if (step.back() <= 0) throw InvalidArgument("grading is not positive on the piece");
    }
    std::vector<IntVec> out;
    auto walk = [&](auto&& self, IntVec m, Int h, std::size_t from) -> void {
        out.push_back(m);
        for (std::size_t i = from; i < c.generators.size(); ++i) {
            const Int nh = h + step[i];
            if (nh > max_height) continue;
            IntVec next = m;
            for (std::size_t j = 0; j < next.size(); ++j) next[j] += c.generators[i][j];
            self(self, std::move(next), nh, i);
        }
    };
    for (const auto& b : parallelepiped_points(c, mode)) {
        const Int h = dot(grading, b.point);
        if (h <= max_height) walk(walk, b.point, h, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVec> cone_points_up_to(const RationalCone& k, const Int& max_height) {
    const IntVec g = grading_vector(k);
    const std::size_t n = k.ambient_dim();
    std::vector<Int> lo(n), hi(n);
    for (const auto& r : k.generators()) {
        const Rat scale = make_rat(max_height, dot(g, r));
        for (std::size_t j = 0; j < n; ++j) {
            const Rat c = scale * r[j];
            lo[j] = std::min(lo[j], floor(c));
            hi[j] = std::max(hi[j], ceil(c));
        }
    }
    const ConeHRep h = cone_inequalities(k);
    std::vector<IntVec> out;
    IntVec cur = lo;
    while (true) {
        if (dot(g, cur) <= max_height && cone_contains(h, cur, ConeRegion::closed)) out.push_back(cur);
        std::size_t t = 0;
        while (t < n && cur[t] == hi[t]) {
            cur[t] = lo[t];
            ++t;
        }
        if (t == n) break;
        ++cur[t];
    }
    std::sort(out.begin(), out.end());
    return out;
}

Report partition_check(const RationalCone& k, long max_height) {
    Report r;
    r.theorem = "half-open-partition";
    const Decomposition dec = decompose(k);
    const IntVec g = grading_vector(k);
    const ConeHRep h = cone_inequalities(k);
    const auto all = cone_points_up_to(k, max_height);
    for (int interior = 0; interior < 2; ++interior) {
        std::vector<IntVec> expected;
        for (const auto& m : all)
            if (!interior || cone_contains(h, m, ConeRegion::interior)) expected.push_back(m);
        std::vector<IntVec> got;
        for (const auto& piece : dec.pieces) {
            const BoxMode mode = interior ? BoxMode::closed_open_dual : BoxMode::half_open;
            for (auto& m : piece_points_up_to(piece, mode, g, max_height)) got.push_back(std::move(m));
        }
        std::sort(got.begin(), got.end());
        for (long height = 0; height <= max_height; ++height) {
            auto at = [&](const std::vector<IntVec>& v) {
                std::vector<IntVec> s;
                for (const auto& m : v)
                    if (dot(g, m) == height) s.push_back(m);
                return s;
            };
            const auto e = at(expected);
            const auto p = at(got);
            r.add(Json{{"region", interior ? "interior" : "closed"}, {"height", height}}, Rat(static_cast<long>(p.size())),
                  Rat(static_cast<long>(e.size())), e == p);
        }
    }
    r.details["pieces"] = dec.pieces.size();
    r.details["grading"] = int_array(g);
    r.details["reference"] = rat_array(dec.reference);
    return r.conclude();
}

ConeGF generating_function(const RationalCone& k, ConeRegion region) {
    ConeGF f;
    for (const auto& piece : decompose(k).pieces) {
        ConeGF::Piece p;
        const BoxMode mode = region == ConeRegion::closed ? BoxMode::half_open : BoxMode::closed_open_dual;
        for (auto& b : parallelepiped_points(piece, mode)) p.numerator.push_back(std::move(b.point));
        p.denominator = piece.generators;
        f.pieces.push_back(std::move(p));
    }
    return f;
}

Rat evaluate(const ConeGF& f, const RatVec& z) {
    Rat total = 0;
    for (const auto& p : f.pieces) {
        Rat den = 1;
        for (const auto& g : p.denominator) {
            if (g.size() != z.size()) throw InvalidArgument("evaluation point has wrong dimension");
            const Rat factor = 1 - monomial(z, g);
            if (factor == 0) throw PoleError("pole at generator " + vec_string(g));
            den *= factor;
        }
        Rat num = 0;
        for (const auto& m : p.numerator) num += monomial(z, m);
        total += num / den;
    }
    return total;
}

Rat sigma_eval(const RationalCone& k, const RatVec& z, ConeRegion region) {
    return evaluate(generating_function(k, region), z);
}

Report stanley_reciprocity_check(const RationalCone& k, int trials, std::uint64_t seed) {
    Report r;
    r.theorem = "stanley-reciprocity";
    const ConeGF closed = generating_function(k, ConeRegion::closed);
    const ConeGF interior = generating_function(k, ConeRegion::interior);
    const Rat sign = k.dim() % 2 == 0 ? 1 : -1;
    std::mt19937_64 rng(seed);
    auto draw = [&] {
        const long num = static_cast<long>(rng() % 50) + 1;
        const long den = static_cast<long>(rng() % 50) + 1;
        const bool neg = rng() % 2 == 1;
        return make_rat(neg ? -num : num, den);
    };
    int rejected = 0;
    for (int t = 0; t < trials;) {
        RatVec z(k.ambient_dim());
        for (auto& x : z) x = draw();
        RatVec inv(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) inv[i] = 1 / z[i];
        Rat lhs, rhs;
        try {
            lhs = evaluate(closed, inv);
            rhs = sign * evaluate(interior, z);
        } catch (const PoleError&) {
            if (++rejected > 1000) throw Unsupported("could not find evaluation points avoiding the poles");
            continue;
        }
        r.add(t, lhs, rhs, lhs == rhs, {{"z", rat_array(z)}});
        ++t;
    }
    r.details["dim"] = k.dim();
    r.details["pieces"] = closed.pieces.size();
    r.details["seed"] = seed;
    r.details["rejected_poles"] = rejected;
    return r.conclude();
}

Report specialization_check(const RationalPolytope& p, const EhrhartResult& e, const std::vector<Rat>& points) {
    Report r;
    r.theorem = "ehrhart-series-specialization";
    const ConeGF f = generating_function(homogenize(p), ConeRegion::closed);
    const Poly h = e.hstar.as_poly();
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Rat& x0 = points[i];
        RatVec z(p.ambient_dim() + 1, Rat(1));
        z.back() = x0;
        const Rat den = pow(1 - pow(x0, e.hstar.period), e.hstar.dim + 1);
        if (den == 0) throw PoleError("x0 is a pole of the Ehrhart series");
        const Rat rhs = h(x0) / den;
        const Rat lhs = evaluate(f, z);
        r.add(rat_json(x0), lhs, rhs, lhs == rhs);
    }
    r.details["hstar"] = rat_array(e.hstar.coeffs);
    r.details["period"] = e.hstar.period;
    return r.conclude();
}

Report specialization_check(const RationalPolytope& p, const std::vector<Rat>& points) {
    return specialization_check(p, ehrhart(p), points);
}

}  // namespace ehrhart
