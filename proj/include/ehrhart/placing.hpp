#pragma once

#include <cstddef>
#include <vector>

#include "ehrhart/rational.hpp"

namespace ehrhart {

using Cell = std::vector<std::size_t>;  // sorted indices into a vector list

/// Placing triangulation of the cone spanned by `vectors`, inserting them in
/// the given order. A vector outside the span of its predecessors is joined
/// to every cell; one inside the span is joined to every boundary facet that
/// it sees strictly from outside; one inside the current cone is skipped.
/// Returns the maximal cells, each a set of linearly independent vectors.
/// The zero vector is not allowed.
std::vector<Cell> place_vectors(const std::vector<IntVec>& vectors);

/// Inward normal (within span(cell)) of the facet of `cell` opposite to
/// cell[drop]: <a, cell[drop]> > 0 and <a, v> = 0 on the other vectors.
/// `complement` holds normals of span(cell)'s orthogonal complement.
IntVec facet_normal(const std::vector<IntVec>& vectors, const Cell& cell, std::size_t drop,
                    const std::vector<IntVec>& complement);

/// Basis of the orthogonal complement of span(vectors) in Z^ambient (primitive rows).
std::vector<IntVec> span_complement(const std::vector<IntVec>& vectors, std::size_t ambient);

}  // namespace ehrhart
