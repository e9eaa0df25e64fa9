#pragma once

// Dense exact linear algebra over Q for the small systems used throughout
// (facet hyperplanes, parallelepiped coordinates, a/b solves).

#include <cstddef>
#include <optional>
#include <vector>

#include "ehrhart/rational.hpp"

namespace ehrhart {

using RatMatrix = std::vector<RatVec>;  // row-major
using IntMatrix = std::vector<IntVec>;

struct Echelon {
    RatMatrix rows;                   // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon row_reduce(RatMatrix m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Basis of {x : m x = 0}; `cols` gives the width when m has no rows.
std::vector<RatVec> nullspace(const RatMatrix& m, std::size_t cols);

/// Some solution of m x = rhs, or nullopt when inconsistent.
std::optional<RatVec> solve(const RatMatrix& m, const RatVec& rhs);

Rat determinant(RatMatrix m);
Int determinant(const IntMatrix& m);

/// Index of the lattice spanned by the given linearly independent integer
/// vectors inside its saturation span(vectors) ∩ Z^n: the gcd of the
/// maximal minors. Equals 1 exactly for unimodular sets.
Int lattice_index(const std::vector<IntVec>& vectors);

Rat dot(const RatVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);
Rat dot(const IntVec& a, const RatVec& b);

IntMatrix transpose(const IntMatrix& m);

}  // namespace ehrhart
