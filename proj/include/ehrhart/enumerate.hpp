#pragma once

// Lattice points of dilates and the Ehrhart counting pipeline.

#include <functional>
#include <string>
#include <vector>

#include "ehrhart/poly.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/report.hpp"

namespace ehrhart {

enum class ScanStrategy {
    /// Every integer point of the vertex bounding box, filtered by membership.
    bounding_box,
    /// Only the box coordinates left free by the affine-hull equalities are
    /// scanned; the rest are solved for. Same result, far fewer candidates
    /// for lower-dimensional polytopes.
    affine_hull,
};

/// Integer points of t·P (t = 1 for the plain polytope), sorted lexicographically.
std::vector<IntVec> enumerate_points(const RationalPolytope& p, Region region = Region::closed,
                                     ScanStrategy strategy = ScanStrategy::affine_hull);

/// #(nP ∩ Z^d) for region closed, #(relint(nP) ∩ Z^d) otherwise. n >= 0;
/// the zero dilate is the single point 0.
Int count_dilate(const RationalPolytope& p, long n, Region region = Region::closed,
                 ScanStrategy strategy = ScanStrategy::affine_hull);

/// Visits the integer points of nP (n >= 1) without materializing them.
void for_each_point_in_dilate(const RationalPolytope& p, long n, Region region, ScanStrategy strategy,
                              const std::function<void(const IntVec&)>& visit);

struct EhrhartResult {
    std::string id;
    long dim = 0;
    long period = 1;  // lcm of vertex denominators (an upper bound for the minimal period)
    QuasiPoly quasi;
    QuasiPoly quasi_interior;
    HStarData hstar;
    RatVec counts;  // closed counts for n = 0 .. period*(dim+2)-1, all enumerated directly

    long minimal_period() const { return quasi.minimal_period(); }
};

/// Ehrhart quasipolynomial of P and of its relative interior, interpolated
/// per residue class from the smallest admissible dilates, plus the h*-vector
/// over (1 - x^period)^(dim+1). Throws InconsistentCounts if the directly
/// counted guard dilates disagree with the series structure.
EhrhartResult ehrhart(const RationalPolytope& p);

/// h*-vector of the Ehrhart series written over (1 - x^period)^(dim+1) for a
/// multiple `period` of the polytope's own period.
HStarData hstar_with_period(const EhrhartResult& e, long period);

/// ehr(-n) == (-1)^dim ehr_interior(n) for n = 1..max_n; for n <= direct_cap the
/// interior value is also checked against a direct count of relint(nP).
Report reciprocity_check(const RationalPolytope& p, const EhrhartResult& e, long max_n, long direct_cap);
Report reciprocity_check(const RationalPolytope& p, long max_n);

/// Smallest n >= 1 with an interior lattice point in nP (searched up to limit; 0 if none).
long first_interior_dilate(const RationalPolytope& p, long limit);

}  // namespace ehrhart
