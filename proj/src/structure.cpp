#include "ehrhart/structure.hpp"

#include <algorithm>
#include <numeric>

#include "ehrhart/errors.hpp"
#include "ehrhart/linalg.hpp"
#include "ehrhart/triangulate.hpp"

namespace ehrhart {

namespace {

Rat window(const HStarProfile& pr, long from, long to) {
    Rat s = 0;
    for (long j = from; j <= to; ++j) s += pr.h(j);
    return s;
}

Json idx(const char* family, long j) { return Json{{"family", family}, {"j", j}}; }

Rat as_rat(bool b) { return b ? 1 : 0; }

}  // namespace

Rat HStarProfile::h(long j) const {
    if (j < 0 || j >= static_cast<long>(coeffs.size())) return 0;
    return coeffs[static_cast<std::size_t>(j)];
}

HStarProfile profile(const HStarData& h) {
    if (h.period != 1) throw Unsupported("h*-profile needs a lattice polytope (period 1)");
    HStarProfile pr;
    pr.d = h.dim;
    pr.coeffs = h.coeffs;
    pr.s = static_cast<long>(pr.coeffs.size()) - 1;
    pr.l = pr.d + 1 - pr.s;
    if (pr.coeffs.empty() || pr.coeffs.front() != 1) throw InvalidArgument("h*_0 must be 1");
    if (pr.l < 1) throw InvalidArgument("h* degree exceeds the dimension");
    for (const auto& c : pr.coeffs)
        if (!is_integer(c) || c < 0) throw InvalidArgument("h* coefficients must be nonnegative integers");
    return pr;
}

Report stanley_inequalities(const HStarProfile& pr) {
    Report r;
    r.theorem = "stanley-inequalities";
    for (long j = 0; j <= pr.d; ++j) {
        const Rat lhs = window(pr, 0, j);
        const Rat rhs = window(pr, pr.s - j, pr.s);
        r.add(j, lhs, rhs, lhs <= rhs);
    }
    r.details["d"] = pr.d;
    r.details["s"] = pr.s;
    r.details["hstar"] = rat_array(pr.coeffs);
    return r.conclude();
}

Report stapledon_inequalities(const HStarProfile& pr) {
    Report r;
    r.theorem = "stapledon-inequalities";
    // Family A: h*_2 + ... + h*_{j+1} >= h*_{d-1} + ... + h*_{d-j}; reported as lhs <= rhs.
    for (long j = 0; j <= pr.d / 2 - 1; ++j) {
        const Rat big = window(pr, 2, j + 1);
        const Rat small = window(pr, pr.d - j, pr.d - 1);
        r.add(idx("A", j), small, big, small <= big);
    }
    // Family B: h*_{2-l} + ... + h*_1 <= h*_{j-l+1} + ... + h*_j.
    for (long j = 2; j <= pr.d - 1; ++j) {
        const Rat lhs = window(pr, 2 - pr.l, 1);
        const Rat rhs = window(pr, j - pr.l + 1, j);
        r.add(idx("B", j), lhs, rhs, lhs <= rhs);
    }
    r.add(idx("trivial", 1), pr.h(pr.d), pr.h(1), pr.h(pr.d) <= pr.h(1));
    r.details["d"] = pr.d;
    r.details["s"] = pr.s;
    r.details["l"] = pr.l;
    r.details["hstar"] = rat_array(pr.coeffs);
    return r.conclude();
}

ABDecomposition ab_decomposition(const HStarProfile& pr) {
    const long d = pr.d;
    const long l = pr.l;
    const long m = d - l;  // degree bound of b; negative means b = 0
    const std::size_t na = static_cast<std::size_t>(d + 1);
    const std::size_t nb = m >= 0 ? static_cast<std::size_t>(m + 1) : 0;
    const std::size_t n = na + nb;

    Poly geometric;
    for (long i = 0; i < l; ++i) geometric += Poly::monomial(Rat(1), static_cast<std::size_t>(i));
    const Poly c = geometric * Poly(pr.coeffs);
    if (c.degree() > d) throw TheoremViolation("a/b: left-hand side exceeds degree d");

    RatMatrix rows;
    RatVec rhs;
    for (long k = 0; k <= d; ++k) {
        RatVec row(n);
        row[static_cast<std::size_t>(k)] = 1;
        if (k - l >= 0 && k - l <= m) row[na + static_cast<std::size_t>(k - l)] = 1;
        rows.push_back(row);
        rhs.push_back(c.coeff(k));
    }
    for (long i = 0; i < d - i; ++i) {
        RatVec row(n);
        row[static_cast<std::size_t>(i)] = 1;
        row[static_cast<std::size_t>(d - i)] = -1;
        rows.push_back(row);
        rhs.push_back(0);
    }
    for (long i = 0; i < m - i; ++i) {
        RatVec row(n);
        row[na + static_cast<std::size_t>(i)] = 1;
        row[na + static_cast<std::size_t>(m - i)] = -1;
        rows.push_back(row);
        rhs.push_back(0);
    }
    if (rank(rows) != n) throw TheoremViolation("a/b: solution is not unique");
    const auto x = solve(rows, rhs);
    if (!x) throw TheoremViolation("a/b: system is inconsistent");
    ABDecomposition out;
    out.a = Poly(RatVec(x->begin(), x->begin() + static_cast<long>(na)));
    out.b = Poly(RatVec(x->begin() + static_cast<long>(na), x->end()));
    return out;
}

Report ab_check(const RationalPolytope& p, const EhrhartResult& e) {
    Report r;
    r.theorem = "stapledon-ab-decomposition";
    const HStarProfile pr = profile(e.hstar);
    ABDecomposition ab;
    try {
        ab = ab_decomposition(pr);
    } catch (const TheoremViolation& err) {
        r.verdict = Verdict::fail;
        r.details["error"] = err.what();
        return r;
    }
    Poly geometric;
    for (long i = 0; i < pr.l; ++i) geometric += Poly::monomial(Rat(1), static_cast<std::size_t>(i));
    const Poly lhs = geometric * Poly(pr.coeffs);
    const Poly rhs = ab.a + ab.b * Poly::monomial(Rat(1), static_cast<std::size_t>(pr.l));
    for (long k = 0; k <= pr.d; ++k)
        r.add(idx("reconstruction", k), lhs.coeff(k), rhs.coeff(k), lhs.coeff(k) == rhs.coeff(k));
    for (long k = 0; k <= pr.d; ++k) r.add(idx("a-nonnegative", k), 0, ab.a.coeff(k), ab.a.coeff(k) >= 0);
    for (long k = 0; k <= std::max(0L, pr.d - pr.l); ++k)
        r.add(idx("b-nonnegative", k), 0, ab.b.coeff(k), ab.b.coeff(k) >= 0);
    r.add(idx("a0", 0), ab.a.coeff(0), 1, ab.a.coeff(0) == 1);
    for (long j = 2; j <= pr.d - 1; ++j) r.add(idx("a-chain", j), ab.a.coeff(1), ab.a.coeff(j), ab.a.coeff(1) <= ab.a.coeff(j));
    r.details["a"] = rat_array(ab.a.coefficients());
    r.details["b"] = rat_array(ab.b.coefficients());
    r.details["l"] = pr.l;
    if (p.is_full_dimensional()) {
        const bool refl = reflexive_check(dilate(p, pr.l)).is_reflexive;
        r.add(idx("b-zero-iff-reflexive", pr.l), as_rat(ab.b.is_zero()), as_rat(refl), ab.b.is_zero() == refl);
        r.details["reflexive_dilate"] = refl;
    }
    return r.conclude();
}

Report hibi_check(const RationalPolytope& p, const EhrhartResult& e) {
    Report r;
    r.theorem = "hibi-palindromic-reflexive";
    const HStarProfile pr = profile(e.hstar);
    const bool palindromic = is_palindromic(e.hstar.as_poly(), pr.s);
    const ReflexiveResult refl = reflexive_check(dilate(p, pr.l));
    r.add(Json{{"l", pr.l}}, as_rat(palindromic), as_rat(refl.is_reflexive), palindromic == refl.is_reflexive);
    r.details["hstar"] = rat_array(pr.coeffs);
    r.details["palindromic"] = palindromic;
    r.details["reflexive"] = refl.is_reflexive;
    r.details["interior_points"] = refl.interior_points;
    if (refl.witness_translate) r.details["translate"] = int_array(*refl.witness_translate);
    if (!refl.reason.empty()) r.details["reason"] = refl.reason;
    return r.conclude();
}

Report hibi_check(const RationalPolytope& p) { return hibi_check(p, ehrhart(p)); }

Report athanasiadis_check(const RationalPolytope& p, const EhrhartResult& e) {
    Report r;
    r.theorem = "athanasiadis-unimodular-bounds";
    const HStarProfile pr = profile(e.hstar);
    const long d = pr.d;
    const Triangulation t = placing_triangulation(p, Flavor::all_lattice_points);
    const bool unimodular = is_unimodular(t);
    const bool boundary = unimodular || is_boundary_unimodular(t);
    if (unimodular) {
        for (long i = (d + 1) / 2; i < d; ++i) r.add(idx("descending-tail", i), pr.h(i + 1), pr.h(i), pr.h(i + 1) <= pr.h(i));
        for (long j = 0; j <= d; ++j) {
            const Rat bound(binomial(Int(pr.h(1).get_num() + j - 1), j));
            r.add(idx("binomial-bound", j), pr.h(j), bound, pr.h(j) <= bound);
        }
    }
    if (boundary) {
        for (long j = 0; j <= d / 2 - 1; ++j) r.add(idx("boundary-A", j), pr.h(d - j), pr.h(j + 1), pr.h(d - j) <= pr.h(j + 1));
        for (long j = 0; j <= d / 2 - 1; ++j) {
            const Int top = pr.h(1).get_num() - pr.h(d).get_num() + j + 1;
            const Rat lhs = window(pr, 0, j + 1);
            const Rat rhs = window(pr, d - j, d) + Rat(binomial(top, j + 1));
            r.add(idx("boundary-B", j), lhs, rhs, lhs <= rhs);
        }
    }
    r.details["unimodular_triangulation"] = unimodular;
    r.details["unimodular_boundary"] = boundary;
    r.details["cells"] = t.cells.size();
    r.details["hstar"] = rat_array(pr.coeffs);
    r.conclude();
    if (r.verdict == Verdict::pass && !unimodular) r.verdict = Verdict::hypothesis_not_met;
    return r;
}

Report athanasiadis_check(const RationalPolytope& p) { return athanasiadis_check(p, ehrhart(p)); }

Report monotonicity_check(const RationalPolytope& p, const RationalPolytope& q) {
    if (p.ambient_dim() != q.ambient_dim()) throw InvalidArgument("monotonicity: ambient dimensions differ");
    if (!contains_polytope(p, q)) throw InvalidArgument("monotonicity: first polytope is not contained in the second");
    Report r;
    r.theorem = "stanley-monotonicity";
    const EhrhartResult ep = ehrhart(p);
    const EhrhartResult eq = ehrhart(q);
    const long period = std::lcm(ep.period, eq.period);
    const HStarData hp = hstar_with_period(ep, period);
    const HStarData hq = hstar_with_period(eq, period);
    const long top = std::max(hp.degree, hq.degree);
    for (long j = 0; j <= top; ++j) r.add(j, hp.at(j), hq.at(j), hp.at(j) <= hq.at(j));
    r.details["period"] = period;
    r.details["inner"] = {{"name", p.name()}, {"dim", hp.dim}, {"hstar", rat_array(hp.coeffs)}};
    r.details["outer"] = {{"name", q.name()}, {"dim", hq.dim}, {"hstar", rat_array(hq.coeffs)}};
    return r.conclude();
}

}  // namespace ehrhart
