#pragma once

// The shipped corpus of test polytopes and cones, and seeded random lattice polytopes.

#include <cstdint>
#include <filesystem>
#include <vector>

#include "ehrhart/io.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

struct Corpus {
    std::vector<RationalPolytope> polytopes;  // sorted by file name
    std::vector<NamedCone> cones;
};

/// $EHRHART_CORPUS if set, otherwise the corpus directory of the source tree.
std::filesystem::path default_corpus_dir();

/// Reads <dir>/polytopes/*.json and <dir>/cones/*.json.
Corpus load_corpus(const std::filesystem::path& dir);

/// Lattice polytopes of dimensions 1..max_dim (cycling), each the hull of a
/// few random points with coordinates in [-1, 2], full-dimensional in R^dim.
std::vector<RationalPolytope> random_lattice_polytopes(std::size_t count, std::uint64_t seed, long max_dim = 3);

}  // namespace ehrhart
