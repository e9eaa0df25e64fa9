#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ehrhart/rational.hpp"

namespace ehrhart {

/// <normal, x> = offset (equality) or <normal, x> <= offset (inequality).
/// Stored primitive: gcd(normal..., offset) == 1.
struct Constraint {
    IntVec normal;
    Int offset;

    friend bool operator==(const Constraint&, const Constraint&) = default;
    friend auto operator<=>(const Constraint& a, const Constraint& b) {
        if (a.normal != b.normal) return a.normal < b.normal ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.offset != b.offset) return a.offset < b.offset ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

/// Facet description relative to the affine hull.
struct HRep {
    std::vector<Constraint> equalities;
    std::vector<Constraint> inequalities;  // one per facet, each tight on a facet
};

enum class Region { closed, relative_interior };

/// Convex hull of finitely many rational points, kept irredundant.
/// Construct through normalize(); immutable afterwards.
class RationalPolytope {
public:
    const std::string& name() const { return name_; }
    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<RatVec>& vertices() const { return vertices_; }
    long dim() const { return dim_; }
    const HRep& hrep() const { return hrep_; }
    bool is_lattice() const { return is_lattice_; }
    bool is_full_dimensional() const { return dim_ == static_cast<long>(ambient_dim_); }

    /// lcm of all vertex-coordinate denominators; 1 for lattice polytopes.
    Int denominator() const;

    /// Vertices as integer vectors; throws InvalidArgument unless is_lattice().
    std::vector<IntVec> lattice_vertices() const;

    RationalPolytope renamed(std::string name) const;

    friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
    }

private:
    friend RationalPolytope normalize(const std::vector<RatVec>& points, std::string name);
    friend RationalPolytope dilate(const RationalPolytope& p, const Rat& t);
    friend RationalPolytope translate(const RationalPolytope& p, const RatVec& shift);

    std::string name_;
    std::size_t ambient_dim_ = 0;
    std::vector<RatVec> vertices_;
    long dim_ = 0;
    HRep hrep_;
    bool is_lattice_ = true;
};

/// Extreme points (sorted lexicographically), affine dimension and facets of
/// conv(points). Throws InvalidArgument on empty input or ragged coordinates.
RationalPolytope normalize(const std::vector<RatVec>& points, std::string name = {});
RationalPolytope normalize(const std::vector<IntVec>& points, std::string name = {});

/// Affine-hull equalities and facet inequalities of conv(points), by an
/// exhaustive scan of point subsets spanning candidate hyperplanes.
HRep facets(const std::vector<RatVec>& points);
inline const HRep& facets(const RationalPolytope& p) { return p.hrep(); }

/// Vertices of {x : hrep} in R^ambient_dim (desk-scale subset scan), sorted.
std::vector<RatVec> vertices_of(const HRep& hrep, std::size_t ambient_dim);

bool satisfies(const Constraint& c, const RatVec& x, bool strict);
bool contains(const RationalPolytope& p, const RatVec& x, Region region = Region::closed);
bool contains(const RationalPolytope& p, const IntVec& x, Region region = Region::closed);

/// t·P for rational t > 0.
RationalPolytope dilate(const RationalPolytope& p, const Rat& t);

/// P + shift.
RationalPolytope translate(const RationalPolytope& p, const RatVec& shift);

/// Whether inner ⊆ outer (every vertex of inner satisfies outer's facets).
bool contains_polytope(const RationalPolytope& inner, const RationalPolytope& outer);

struct ReflexiveResult {
    bool is_reflexive = false;
    std::optional<IntVec> witness_translate;  // -z, where z is the unique interior lattice point
    std::size_t interior_points = 0;
    std::string reason;
};

/// Whether P is a translate of a reflexive polytope: a unique interior
/// lattice point z, and every primitive facet inequality of P - z has
/// right-hand side 1. Requires a full-dimensional lattice polytope.
ReflexiveResult reflexive_check(const RationalPolytope& p);

}  // namespace ehrhart
