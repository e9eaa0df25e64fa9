#include <doctest.h>

#include <cstdlib>

#include "ehrhart/corpus.hpp"
#include "ehrhart/enumerate.hpp"
#include "ehrhart/errors.hpp"
#include "oracles.hpp"

using namespace ehrhart;

namespace {

RationalPolytope reeve(long r) {
    return normalize(std::vector<IntVec>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, r}}, "reeve");
}

// Hand-written facet inequalities of n·R_r; strict for the interior.
long reeve_oracle(long r, long n, bool strict) {
    return oracle::count_box(3, 0, r * n, [&](const oracle::Point& x) {
        const long a = x[2], b = r * x[1] - x[2], c = r * x[0] - x[2], d = r * n - (r * x[0] + r * x[1] - x[2]);
        return strict ? (a > 0 && b > 0 && c > 0 && d > 0) : (a >= 0 && b >= 0 && c >= 0 && d >= 0);
    });
}

long cross_oracle(int dim, long n, bool strict) {
    return oracle::count_box(dim, -n, n, [&](const oracle::Point& x) {
        long s = 0;
        for (long v : x) s += std::labs(v);
        return strict ? s < n : s <= n;
    });
}

RationalPolytope cross(int dim) {
    std::vector<IntVec> v;
    for (int i = 0; i < dim; ++i)
        for (int s : {1, -1}) {
            IntVec e(static_cast<std::size_t>(dim));
            e[static_cast<std::size_t>(i)] = s;
            v.push_back(e);
        }
    return normalize(v, "cross");
}

}  // namespace

TEST_CASE("dilate counts match hand-written membership oracles") {
    for (long r : {2, 3})
        for (long n = 1; n <= 4; ++n) {
            CHECK(count_dilate(reeve(r), n) == reeve_oracle(r, n, false));
            CHECK(count_dilate(reeve(r), n, Region::relative_interior) == reeve_oracle(r, n, true));
        }
    for (int dim : {2, 3, 4})
        for (long n = 1; n <= 3; ++n) {
            CHECK(count_dilate(cross(dim), n) == cross_oracle(dim, n, false));
            CHECK(count_dilate(cross(dim), n, Region::relative_interior) == cross_oracle(dim, n, true));
        }
}

TEST_CASE("zero dilate is a single point") {
    CHECK(count_dilate(reeve(2), 0) == 1);
    CHECK_THROWS_AS(count_dilate(reeve(2), -1), InvalidArgument);
}

TEST_CASE("rational segment counts") {
    const auto half = normalize(std::vector<RatVec>{{Rat(0)}, {make_rat(1, 2)}}, "half");
    for (long n = 1; n <= 9; ++n) {
        const long closed = oracle::count_box(1, 0, n, [&](const oracle::Point& x) { return 2 * x[0] <= n; });
        const long open = oracle::count_box(1, 0, n, [&](const oracle::Point& x) { return x[0] > 0 && 2 * x[0] < n; });
        CHECK(count_dilate(half, n) == closed);
        CHECK(count_dilate(half, n, Region::relative_interior) == open);
    }
}

TEST_CASE("affine-hull pruning agrees with the plain box scan") {
    const Corpus corpus = load_corpus(EHRHART_TEST_CORPUS);
    for (const auto& p : corpus.polytopes) {
        if (p.ambient_dim() > 4) continue;
        for (long n = 1; n <= 3; ++n)
            for (Region region : {Region::closed, Region::relative_interior}) {
                INFO(p.name() << " n=" << n);
                CHECK(count_dilate(p, n, region, ScanStrategy::bounding_box) ==
                      count_dilate(p, n, region, ScanStrategy::affine_hull));
            }
    }
    const auto plane_triangle = normalize(std::vector<IntVec>{{0, 0, 0}, {2, 0, 2}, {0, 2, 2}}, "slanted");
    CHECK(enumerate_points(plane_triangle, Region::closed, ScanStrategy::bounding_box) ==
          enumerate_points(plane_triangle, Region::closed, ScanStrategy::affine_hull));
}

TEST_CASE("enumerate_points lists the lattice points in order") {
    const auto tri = normalize(std::vector<IntVec>{{0, 0}, {2, 0}, {0, 2}});
    const std::vector<IntVec> expected{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}};
    CHECK(enumerate_points(tri) == expected);
    CHECK(enumerate_points(tri, Region::relative_interior).empty());
}

TEST_CASE("Ehrhart polynomial of the unit square") {
    const auto sq = normalize(std::vector<IntVec>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}, "square");
    const auto e = ehrhart::ehrhart(sq);
    CHECK(e.period == 1);
    CHECK(e.quasi.constituent(0) == Poly{1, 2, 1});
    CHECK(e.quasi_interior.constituent(0) == Poly{1, -2, 1});
    CHECK(e.hstar.coeffs == RatVec{Rat(1), Rat(1)});
}

TEST_CASE("Reeve simplices: counts against the closed form") {
    for (long r : {2, 3}) {
        const auto e = ehrhart::ehrhart(reeve(r));
        // ehr(n) = (r/6) n^3 + n^2 + (2 - r/6) n + 1
        const Poly expected(RatVec{Rat(1), 2 - make_rat(r, 6), Rat(1), make_rat(r, 6)});
        CHECK(e.quasi.constituent(0) == expected);
        CHECK(e.hstar.coeffs == RatVec{Rat(1), Rat(0), Rat(r - 1)});
        for (long n = 0; n <= 4; ++n) CHECK(evaluate(e.quasi, n) == Rat(n == 0 ? 1 : reeve_oracle(r, n, false)));
    }
}

TEST_CASE("rational segment has a period-two quasipolynomial") {
    const auto half = normalize(std::vector<RatVec>{{Rat(0)}, {make_rat(1, 2)}}, "half");
    const auto e = ehrhart::ehrhart(half);
    CHECK(e.period == 2);
    CHECK(e.minimal_period() == 2);
    CHECK(e.quasi.constituent(0) == Poly(RatVec{Rat(1), make_rat(1, 2)}));
    CHECK(e.quasi.constituent(1) == Poly(RatVec{make_rat(1, 2), make_rat(1, 2)}));
    CHECK(e.hstar.period == 2);
    CHECK(e.hstar.coeffs == RatVec{Rat(1), Rat(1)});
    // Rescaling to period 4 keeps the series.
    const HStarData h4 = hstar_with_period(e, 4);
    CHECK(series_from_hstar(h4, 10) == series_from_hstar(e.hstar, 10));
    CHECK_THROWS_AS(hstar_with_period(e, 3), InvalidArgument);
}

TEST_CASE("rational triangle whose quasipolynomial collapses") {
    const auto t = normalize(std::vector<RatVec>{{Rat(0), Rat(0)}, {make_rat(1, 2), Rat(0)}, {Rat(0), make_rat(1, 2)}});
    const auto e = ehrhart::ehrhart(t);
    CHECK(e.period == 2);
    for (long n = 0; n <= 8; ++n) {
        const long direct = n == 0 ? 1 : oracle::count_box(2, 0, n, [&](const oracle::Point& x) {
            return x[0] >= 0 && x[1] >= 0 && 2 * (x[0] + x[1]) <= n;
        });
        CHECK(evaluate(e.quasi, n) == direct);
    }
}

TEST_CASE("reciprocity on the corpus and on random lattice polytopes") {
    const Corpus corpus = load_corpus(EHRHART_TEST_CORPUS);
    CHECK(corpus.polytopes.size() >= 12);
    for (const auto& p : corpus.polytopes) {
        INFO(p.name());
        CHECK(reciprocity_check(p, 5).verdict == Verdict::pass);
    }
    for (const auto& p : random_lattice_polytopes(20, 11)) {
        INFO(p.name());
        CHECK(reciprocity_check(p, 5).verdict == Verdict::pass);
    }
}

TEST_CASE("first interior dilate is the codegree") {
    CHECK(first_interior_dilate(reeve(2), 5) == 2);
    const auto tri = normalize(std::vector<IntVec>{{0, 0}, {1, 0}, {0, 1}});
    CHECK(first_interior_dilate(tri, 5) == 3);
    CHECK(ehrhart::ehrhart(tri).hstar.codegree == 3);
}
