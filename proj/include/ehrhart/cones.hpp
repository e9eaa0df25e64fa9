#pragma once

// Rational cones, half-open simplicial decompositions and exact evaluation of
// integer-point generating functions
//
//   sigma_K(z) = sum_{m in K ∩ Z^d} z^m
//
// as sums of (sum_{m in Pi} z^m) / prod_i (1 - z^{g_i}) over half-open
// simplicial pieces.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ehrhart/enumerate.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/rational.hpp"
#include "ehrhart/report.hpp"

namespace ehrhart {

/// Pointed cone spanned by primitive, pairwise non-proportional integer rays.
class RationalCone {
public:
    /// Normalizes generators (primitive, deduplicated, order of first occurrence kept).
    /// Throws InvalidArgument for zero or ragged generators and Unsupported
    /// for non-pointed cones.
    RationalCone(std::size_t ambient_dim, std::vector<IntVec> generators);

    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<IntVec>& generators() const { return generators_; }
    long dim() const { return dim_; }

private:
    std::size_t ambient_dim_;
    std::vector<IntVec> generators_;
    long dim_ = 0;
};

/// {x : <a, x> <= 0 for a in inequalities, <e, x> = 0 for e in equalities}.
struct ConeHRep {
    std::vector<IntVec> inequalities;
    std::vector<IntVec> equalities;
};

/// Whether the generators span a pointed cone (exhaustive facet scan).
bool is_pointed(std::size_t ambient_dim, const std::vector<IntVec>& generators);

ConeHRep cone_inequalities(const RationalCone& k);
/// Rays of a pointed cone given in H-form (desk-scale subset scan).
RationalCone cone_from_inequalities(const ConeHRep& h, std::size_t ambient_dim);

enum class ConeRegion { closed, interior };
bool cone_contains(const ConeHRep& h, const IntVec& x, ConeRegion region);

/// cone(P): nonnegative span of the vertices lifted to height 1.
RationalCone homogenize(const RationalPolytope& p);

struct HalfOpenSimplicialCone {
    std::vector<IntVec> generators;  // linearly independent
    std::vector<bool> open;          // open[i]: the facet omitting generators[i] is excluded
};

enum class BoxMode {
    /// lambda_i in [0,1) where the facet is closed, (0,1] where it is open.
    half_open,
    /// lambda_i in (0,1) for all i: the open fundamental parallelepiped.
    open,
    /// Complementary flags: (0,1] where closed, [0,1) where open.
    closed_open_dual,
};

struct BoxPoint {
    IntVec point;
    Int height;  // last coordinate

    friend bool operator==(const BoxPoint&, const BoxPoint&) = default;
};

/// Integer points sum lambda_i g_i of the parallelepiped selected by `mode`.
/// Throws InvalidArgument when the generators are dependent.
std::vector<BoxPoint> parallelepiped_points(const HalfOpenSimplicialCone& c, BoxMode mode);

struct Decomposition {
    std::vector<HalfOpenSimplicialCone> pieces;
    RatVec reference;  // generic point strictly inside the first piece
};

/// Placing triangulation of K by its rays with facets opened by a generic
/// reference point: a facet of a piece is open iff the reference point lies
/// strictly on its outer side. The pieces partition K ∩ Z^d.
Decomposition decompose(const RationalCone& k);

/// Lattice points of a half-open piece (in the given mode) whose grading
/// <grading, m> is at most max_height; grading must be positive on the generators.
std::vector<IntVec> piece_points_up_to(const HalfOpenSimplicialCone& c, BoxMode mode, const IntVec& grading,
                                       const Int& max_height);

/// Integer vector that is strictly positive on every nonzero point of K.
IntVec grading_vector(const RationalCone& k);

/// Lattice points of K with <grading_vector(K), m> <= max_height, by a box scan.
std::vector<IntVec> cone_points_up_to(const RationalCone& k, const Int& max_height);

/// For heights 0..max_height: the half-open pieces of decompose(K) cover the
/// lattice points of K (closed) and of its interior (flipped flags) exactly once.
Report partition_check(const RationalCone& k, long max_height);

struct ConeGF {
    struct Piece {
        std::vector<IntVec> numerator;    // exponents m, multiplicity one each
        std::vector<IntVec> denominator;  // generators g, factors (1 - z^g)
    };
    std::vector<Piece> pieces;
};

ConeGF generating_function(const RationalCone& k, ConeRegion region = ConeRegion::closed);

/// Exact value of the rational function at z. Throws PoleError naming the
/// generator g with z^g = 1.
Rat evaluate(const ConeGF& f, const RatVec& z);

Rat sigma_eval(const RationalCone& k, const RatVec& z, ConeRegion region = ConeRegion::closed);

/// sigma_K(1/z) == (-1)^dim K sigma_{K°}(z) at `trials` seeded random rational points.
Report stanley_reciprocity_check(const RationalCone& k, int trials, std::uint64_t seed);

/// sigma_{cone(P)}(1, ..., 1, x0) == h*(x0) / (1 - x0^p)^(dim+1) for each x0.
Report specialization_check(const RationalPolytope& p, const std::vector<Rat>& points);
Report specialization_check(const RationalPolytope& p, const EhrhartResult& e, const std::vector<Rat>& points);

}  // namespace ehrhart
