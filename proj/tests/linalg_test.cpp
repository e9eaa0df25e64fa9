#include <doctest.h>

#include "ehrhart/linalg.hpp"

using namespace ehrhart;

namespace {

RatMatrix rat(std::initializer_list<std::initializer_list<long>> rows) {
    RatMatrix m;
    for (auto r : rows) {
        RatVec v;
        for (long x : r) v.emplace_back(x);
        m.push_back(v);
    }
    return m;
}

}  // namespace

TEST_CASE("rank and row reduction") {
    CHECK(rank(rat({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(rat({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}})) == 2);
    CHECK(rank(RatMatrix{}) == 0);
    CHECK(rank(IntMatrix{{3, 0}, {0, 5}}) == 2);
    const Echelon e = row_reduce(rat({{2, 4}, {1, 3}}));
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
    CHECK(e.rows[0] == RatVec{Rat(1), Rat(0)});
}

TEST_CASE("nullspace vectors are annihilated") {
    const RatMatrix m = rat({{1, 1, 1}, {0, 1, 2}});
    const auto ns = nullspace(m, 3);
    REQUIRE(ns.size() == 1);
    for (const auto& row : m) CHECK(dot(row, ns[0]) == 0);
    CHECK(nullspace(RatMatrix{}, 2).size() == 2);
}

TEST_CASE("solve finds a solution or reports inconsistency") {
    const auto x = solve(rat({{2, 1}, {1, 3}}), RatVec{Rat(3), Rat(4)});
    REQUIRE(x);
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);
    CHECK_FALSE(solve(rat({{1, 1}, {2, 2}}), RatVec{Rat(1), Rat(3)}));
}

TEST_CASE("determinants over Q and Z agree") {
    const IntMatrix m{{2, -1, 0}, {1, 3, 4}, {0, 5, -2}};
    // cofactor expansion by hand: 2(-6-20) + 1(-2-0) = -54
    CHECK(determinant(m) == -54);
    CHECK(determinant(rat({{2, -1, 0}, {1, 3, 4}, {0, 5, -2}})) == -54);
    CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("lattice index is the gcd of maximal minors") {
    CHECK(lattice_index({{1, 0}, {0, 1}}) == 1);
    CHECK(lattice_index({{1, 0}, {1, 2}}) == 2);
    // lifted segment [0,2]: (0,1), (2,1) spans a sublattice of index 2
    CHECK(lattice_index({{0, 1}, {2, 1}}) == 2);
    // lower-dimensional: an edge of length 3 inside R^3
    CHECK(lattice_index({{0, 0, 0, 1}, {3, 0, 0, 1}}) == 3);
    CHECK(lattice_index({{1, 1, 1}}) == 1);
    CHECK(lattice_index({{2, 4}}) == 2);
}
