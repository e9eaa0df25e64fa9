#include "ehrhart/enumerate.hpp"

#include <algorithm>
#include <map>

#include "ehrhart/errors.hpp"
#include "ehrhart/linalg.hpp"

namespace ehrhart {

namespace {

// Integer form of the constraints of t·P: <a, x> <= bound (after rounding)
// and <a, x> == value for the affine hull.
struct ScaledSystem {
    std::vector<IntVec> ineq_normals;
    IntVec ineq_bounds;
    RatMatrix eq_rows;  // [a | c t]
    IntVec lo, hi;
    bool empty = false;
};

ScaledSystem scale_system(const RationalPolytope& p, const Rat& t, Region region) {
    ScaledSystem s;
    const std::size_t n = p.ambient_dim();
    for (const auto& f : p.hrep().inequalities) {
        const Rat rhs = f.offset * t;
        s.ineq_normals.push_back(f.normal);
        if (region == Region::closed)
            s.ineq_bounds.push_back(floor(rhs));
        else
            s.ineq_bounds.push_back(Int(ceil(rhs) - 1));
    }
    for (const auto& e : p.hrep().equalities) {
        RatVec row = to_rat(e.normal);
        row.emplace_back(e.offset * t);
        s.eq_rows.push_back(std::move(row));
    }
    s.lo.resize(n);
    s.hi.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat mn = p.vertices().front()[i], mx = mn;
        for (const auto& v : p.vertices()) {
            if (v[i] < mn) mn = v[i];
            if (v[i] > mx) mx = v[i];
        }
        s.lo[i] = ceil(mn * t);
        s.hi[i] = floor(mx * t);
        if (s.lo[i] > s.hi[i]) s.empty = true;
    }
    return s;
}

bool passes_inequalities(const ScaledSystem& s, const IntVec& x) {
    for (std::size_t k = 0; k < s.ineq_normals.size(); ++k)
        if (dot(s.ineq_normals[k], x) > s.ineq_bounds[k]) return false;
    return true;
}

bool passes_equalities(const ScaledSystem& s, const IntVec& x) {
    for (const auto& row : s.eq_rows) {
        Rat acc = 0;
        for (std::size_t i = 0; i < x.size(); ++i) acc += row[i] * x[i];
        if (acc != row.back()) return false;
    }
    return true;
}

// Odometer over the given coordinates of x within [lo, hi].
template <typename Fn>
void odometer(IntVec& x, const std::vector<std::size_t>& coords, const IntVec& lo, const IntVec& hi, Fn&& fn) {
    for (auto c : coords) x[c] = lo[c];
    while (true) {
        fn();
        std::size_t k = 0;
        while (k < coords.size()) {
            const auto c = coords[k];
            if (x[c] < hi[c]) {
                ++x[c];
                break;
            }
            x[c] = lo[c];
            ++k;
        }
        if (k == coords.size()) return;
    }
}

void scan(const RationalPolytope& p, const Rat& t, Region region, ScanStrategy strategy,
          const std::function<void(const IntVec&)>& visit) {
    const ScaledSystem s = scale_system(p, t, region);
    if (s.empty) return;
    const std::size_t n = p.ambient_dim();
    IntVec x(n);
    if (n == 0) {
        visit(x);
        return;
    }

    if (strategy == ScanStrategy::bounding_box || s.eq_rows.empty()) {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        odometer(x, all, s.lo, s.hi, [&] {
            if (passes_equalities(s, x) && passes_inequalities(s, x)) visit(x);
        });
        return;
    }

    const Echelon e = row_reduce(s.eq_rows);
    for (auto piv : e.pivots)
        if (piv == n) return;  // inconsistent affine hull: no points
    std::vector<bool> is_pivot(n, false);
    for (auto piv : e.pivots) is_pivot[piv] = true;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_pivot[i]) free.push_back(i);

    // Integer rows: scale * x_pivot = rhs - sum coeff_f x_f.
    struct PivotRow {
        std::size_t pivot;
        Int scale;
        Int rhs;
        std::vector<std::pair<std::size_t, Int>> terms;
    };
    std::vector<PivotRow> rows;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        Int den = 1;
        for (const auto& v : e.rows[r]) den = lcm(den, v.get_den());
        PivotRow pr;
        pr.pivot = e.pivots[r];
        pr.scale = den;
        pr.rhs = Int(e.rows[r][n] * den);
        for (auto f : free)
            if (e.rows[r][f] != 0) pr.terms.emplace_back(f, Int(e.rows[r][f] * den));
        rows.push_back(std::move(pr));
    }

    Int num;
    auto fill_pivots = [&]() {
        for (const auto& pr : rows) {
            num = pr.rhs;
            for (const auto& [f, c] : pr.terms) num -= c * x[f];
            if (!mpz_divisible_p(num.get_mpz_t(), pr.scale.get_mpz_t())) return false;
            mpz_divexact(x[pr.pivot].get_mpz_t(), num.get_mpz_t(), pr.scale.get_mpz_t());
            if (x[pr.pivot] < s.lo[pr.pivot] || x[pr.pivot] > s.hi[pr.pivot]) return false;
        }
        return true;
    };
    if (free.empty()) {
        if (fill_pivots() && passes_inequalities(s, x)) visit(x);
        return;
    }
    odometer(x, free, s.lo, s.hi, [&] {
        if (fill_pivots() && passes_inequalities(s, x)) visit(x);
    });
}

}  // namespace

std::vector<IntVec> enumerate_points(const RationalPolytope& p, Region region, ScanStrategy strategy) {
    std::vector<IntVec> out;
    scan(p, Rat(1), region, strategy, [&](const IntVec& x) { out.push_back(x); });
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_point_in_dilate(const RationalPolytope& p, long n, Region region, ScanStrategy strategy,
                              const std::function<void(const IntVec&)>& visit) {
    if (n < 1) throw InvalidArgument("for_each_point_in_dilate: n must be >= 1");
    scan(p, Rat(n), region, strategy, visit);
}

Int count_dilate(const RationalPolytope& p, long n, Region region, ScanStrategy strategy) {
    if (n < 0) throw InvalidArgument("count_dilate: n must be >= 0");
    if (n == 0) return 1;
    Int count = 0;
    scan(p, Rat(n), region, strategy, [&](const IntVec&) { ++count; });
    return count;
}

EhrhartResult ehrhart(const RationalPolytope& p) {
    EhrhartResult res;
    res.id = p.name();
    res.dim = p.dim();
    const Int den = p.denominator();
    if (!den.fits_slong_p()) throw Unsupported("ehrhart: vertex denominators too large");
    res.period = den.get_si();
    const long d = res.dim;
    const long per = res.period;

    std::map<long, Int> closed_cache;
    auto closed = [&](long n) -> const Int& {
        auto it = closed_cache.find(n);
        if (it == closed_cache.end()) it = closed_cache.emplace(n, count_dilate(p, n, Region::closed)).first;
        return it->second;
    };

    std::vector<Poly> constituents, interior_constituents;
    for (long r = 0; r < per; ++r) {
        std::vector<std::pair<long, Rat>> samples;
        for (long k = 0; k <= d; ++k) samples.emplace_back(r + per * k, Rat(closed(r + per * k)));
        constituents.push_back(interpolate(samples));

        std::vector<std::pair<long, Rat>> inner;
        const long k0 = (r == 0) ? 1 : 0;
        for (long k = k0; k <= k0 + d; ++k) {
            const long n = r + per * k;
            inner.emplace_back(n, Rat(count_dilate(p, n, Region::relative_interior)));
        }
        interior_constituents.push_back(interpolate(inner));
    }
    res.quasi = QuasiPoly(std::move(constituents));
    res.quasi_interior = QuasiPoly(std::move(interior_constituents));

    // Nodes above cover n = 0 .. per*(d+1)-1; the next `per` dilates are guards.
    const long total = per * (d + 2);
    for (long n = 0; n < total; ++n) res.counts.emplace_back(closed(n));
    res.hstar = hstar_from_counts(res.counts, d, per);
    return res;
}

HStarData hstar_with_period(const EhrhartResult& e, long period) {
    if (period < 1 || period % e.period != 0)
        throw InvalidArgument("hstar_with_period: period must be a multiple of " + std::to_string(e.period));
    RatVec counts;
    for (long n = 0; n < period * (e.dim + 2); ++n) counts.push_back(evaluate(e.quasi, n));
    return hstar_from_counts(counts, e.dim, period);
}

Report reciprocity_check(const RationalPolytope& p, const EhrhartResult& e, long max_n, long direct_cap) {
    Report rep;
    rep.theorem = "ehrhart-macdonald-reciprocity";
    rep.details["polytope"] = p.name();
    rep.details["dim"] = e.dim;
    rep.details["period"] = e.period;
    const Rat sign = (e.dim % 2 == 0) ? 1 : -1;
    for (long n = 1; n <= max_n; ++n) {
        const Rat lhs = evaluate(e.quasi, -n);
        const Rat interior = evaluate(e.quasi_interior, n);
        const Rat rhs = sign * interior;
        bool ok = lhs == rhs;
        Json extra;
        extra["interior_poly"] = rat_json(interior);
        if (n <= direct_cap) {
            const Int direct = count_dilate(p, n, Region::relative_interior);
            extra["interior_direct"] = direct.get_str();
            ok = ok && Rat(direct) == interior;
        }
        rep.add(n, lhs, rhs, ok, std::move(extra));
    }
    return rep.conclude();
}

Report reciprocity_check(const RationalPolytope& p, long max_n) {
    return reciprocity_check(p, ehrhart(p), max_n, max_n);
}

long first_interior_dilate(const RationalPolytope& p, long limit) {
    for (long n = 1; n <= limit; ++n)
        if (count_dilate(p, n, Region::relative_interior) > 0) return n;
    return 0;
}

}  // namespace ehrhart
