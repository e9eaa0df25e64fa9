#pragma once

// Placing triangulations of lattice polytopes, their face lattices and
// h-polynomials, links, box polynomials and the h*-vector assembled from them.

#include <cstddef>
#include <vector>

#include "ehrhart/enumerate.hpp"
#include "ehrhart/placing.hpp"
#include "ehrhart/poly.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/report.hpp"

namespace ehrhart {

enum class Flavor { vertices, all_lattice_points };

struct Triangulation {
    std::vector<IntVec> points;  // sorted lexicographically
    std::vector<Cell> cells;     // maximal simplices, dim+1 indices each
    long dim = 0;

    /// Every face of the complex, the empty face first, ordered by size then lexicographically.
    std::vector<Cell> faces() const;
    /// f_{-1}, f_0, ..., f_dim.
    IntVec f_vector() const;
    /// Points of `face` lifted to height 1.
    std::vector<IntVec> lifted(const Cell& face) const;
    /// (dim-1)-faces contained in exactly one cell.
    std::vector<Cell> boundary_faces() const;
};

/// Places the points of P (vertices, or all lattice points) in lexicographic
/// order. Throws InvalidArgument for non-lattice P.
Triangulation placing_triangulation(const RationalPolytope& p, Flavor flavor);

/// h_T(z) = sum_{k=-1}^{e} f_k z^{k+1} (1-z)^{e-k} for f = (f_{-1}, ..., f_e).
Poly h_polynomial(const IntVec& f, long e);

struct LinkData {
    IntVec f;  // f_{-1}, ...
    long dim = 0;
};

/// Faces disjoint from `delta` whose union with it lies in a cell; dim = d - |delta|.
/// Throws InvalidArgument unless delta is a face of t.
LinkData link(const Triangulation& t, const Cell& delta);

/// Height generating function of the open parallelepiped spanned by the lifted
/// simplex; 1 for the empty simplex.
Poly box_polynomial(const std::vector<IntVec>& lifted_vertices);
Poly box_polynomial(const Triangulation& t, const Cell& delta);

/// Normalized volume of a face relative to its affine lattice.
Int normalized_volume(const Triangulation& t, const Cell& face);
Int normalized_volume(const Triangulation& t);
bool is_unimodular(const Triangulation& t);
bool is_boundary_unimodular(const Triangulation& t);

/// sum over all faces (the empty face included) of h_link(x) B(x).
HStarData betke_mcmullen(const Triangulation& t);

/// Compares betke_mcmullen against the counted h*, checks h* >= h_T
/// componentwise and h* == h_T when T is unimodular.
Report betke_mcmullen_check(const RationalPolytope& p, const Triangulation& t, const EhrhartResult& e);

Json to_json(const Triangulation& t);

}  // namespace ehrhart
