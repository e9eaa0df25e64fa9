#pragma once

// Linear relations among h*-coefficients: the Stanley and Stapledon
// inequality families, the a/b decomposition, palindromy versus reflexivity,
// unimodular-triangulation bounds and monotonicity under inclusion.

#include "ehrhart/enumerate.hpp"
#include "ehrhart/poly.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/report.hpp"

namespace ehrhart {

struct HStarProfile {
    long d = 0;
    long s = 0;  // degree
    long l = 0;  // codegree d + 1 - s
    RatVec coeffs;

    /// h*_j, zero outside 0..s.
    Rat h(long j) const;
};

/// Throws Unsupported for period > 1 and InvalidArgument for an invalid profile.
HStarProfile profile(const HStarData& h);

/// h*_0 + ... + h*_j <= h*_s + ... + h*_{s-j} for 0 <= j <= d.
Report stanley_inequalities(const HStarProfile& pr);

/// Families A and B plus h*_1 >= h*_d; out-of-range coefficients read as zero.
Report stapledon_inequalities(const HStarProfile& pr);

struct ABDecomposition {
    Poly a;
    Poly b;
};

/// Unique a, b with (1 + ... + x^{l-1}) h*(x) = a(x) + x^l b(x), a palindromic
/// of degree d, b palindromic about d - l. Throws TheoremViolation when the
/// system is inconsistent or underdetermined.
ABDecomposition ab_decomposition(const HStarProfile& pr);

/// Reconstruction, nonnegativity and the a-chain; for full-dimensional P also
/// b == 0 against reflexive_check(lP).
Report ab_check(const RationalPolytope& p, const EhrhartResult& e);

/// h* palindromic <=> lP is a translate of a reflexive polytope.
/// Requires a full-dimensional lattice polytope.
Report hibi_check(const RationalPolytope& p, const EhrhartResult& e);
Report hibi_check(const RationalPolytope& p);

/// Bounds implied by a regular unimodular triangulation (placing on all lattice
/// points) and by a unimodular boundary. Verdict hypothesis-not-met when the
/// placing triangulation is not unimodular and nothing failed.
Report athanasiadis_check(const RationalPolytope& p, const EhrhartResult& e);
Report athanasiadis_check(const RationalPolytope& p);

/// P ⊆ Q implies h*_P <= h*_Q componentwise, both written over (1 - x^p)^(dim+1)
/// with p the lcm of the two periods. Throws InvalidArgument unless P ⊆ Q.
Report monotonicity_check(const RationalPolytope& p, const RationalPolytope& q);

}  // namespace ehrhart
