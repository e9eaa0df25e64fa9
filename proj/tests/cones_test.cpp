#include <doctest.h>

#include "ehrhart/cones.hpp"
#include "ehrhart/corpus.hpp"
#include "ehrhart/errors.hpp"
#include "oracles.hpp"

using namespace ehrhart;

namespace {

RatVec z(std::initializer_list<Rat> xs) { return RatVec(xs); }

RationalCone unit_square_cone() { return RationalCone(3, {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}); }

}  // namespace

TEST_CASE("cone construction normalizes generators") {
    const RationalCone k(2, {{2, 2}, {1, 0}, {3, 3}});
    CHECK(k.generators() == std::vector<IntVec>{{1, 1}, {1, 0}});
    CHECK(k.dim() == 2);
    CHECK_THROWS_AS(RationalCone(2, {{0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(RationalCone(2, {{1, 0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(RationalCone(2, {{1, 0}, {-1, 0}}), Unsupported);
    CHECK_THROWS_AS(RationalCone(2, {{1, 0}, {0, 1}, {-1, -1}}), Unsupported);
    CHECK_FALSE(is_pointed(2, {{1, 1}, {-1, -1}, {1, 0}}));
    CHECK(is_pointed(3, {{1, 0, 1}, {1, 2, 1}}));
}

TEST_CASE("homogenization lifts vertices to height one") {
    const auto seg = normalize(std::vector<IntVec>{{0}, {1}});
    CHECK(homogenize(seg).generators() == std::vector<IntVec>{{0, 1}, {1, 1}});
    const auto half = normalize(std::vector<RatVec>{{Rat(0)}, {make_rat(1, 2)}});
    CHECK(homogenize(half).generators() == std::vector<IntVec>{{0, 1}, {1, 2}});
    const auto sq = normalize(std::vector<IntVec>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(homogenize(sq).generators().size() == 4);
    CHECK(homogenize(sq).ambient_dim() == 3);
}

TEST_CASE("inequality description round trip") {
    const RationalCone k = unit_square_cone();
    const ConeHRep h = cone_inequalities(k);
    CHECK(h.inequalities.size() == 4);
    CHECK(h.equalities.empty());
    CHECK(cone_contains(h, {1, 1, 1}, ConeRegion::closed));
    CHECK_FALSE(cone_contains(h, {1, 1, 1}, ConeRegion::interior));
    CHECK(cone_contains(h, {1, 1, 3}, ConeRegion::interior));
    CHECK_FALSE(cone_contains(h, {2, 0, 1}, ConeRegion::closed));
    const RationalCone back = cone_from_inequalities(h, 3);
    CHECK(back.generators() == std::vector<IntVec>{{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}});

    const RationalCone flat(3, {{1, 0, 1}, {1, 2, 1}});
    const ConeHRep fh = cone_inequalities(flat);
    CHECK(fh.equalities.size() == 1);
    CHECK(cone_from_inequalities(fh, 3).generators() == std::vector<IntVec>{{1, 0, 1}, {1, 2, 1}});
}

TEST_CASE("parallelepiped points") {
    HalfOpenSimplicialCone unimodular{{{0, 1}, {1, 1}}, {false, false}};
    CHECK(parallelepiped_points(unimodular, BoxMode::open).empty());
    const auto closed = parallelepiped_points(unimodular, BoxMode::half_open);
    REQUIRE(closed.size() == 1);
    CHECK(closed[0].point == IntVec{0, 0});

    HalfOpenSimplicialCone wide{{{0, 0, 1}, {2, 0, 1}}, {false, false}};
    const auto box = parallelepiped_points(wide, BoxMode::open);
    REQUIRE(box.size() == 1);
    CHECK(box[0].point == IntVec{1, 0, 1});
    CHECK(box[0].height == 1);

    // Both facets open: lambda in (0,1] picks the far corner instead of the origin.
    HalfOpenSimplicialCone open_both{{{1, 0}, {0, 1}}, {true, true}};
    const auto corner = parallelepiped_points(open_both, BoxMode::half_open);
    REQUIRE(corner.size() == 1);
    CHECK(corner[0].point == IntVec{1, 1});
    const auto dual = parallelepiped_points(open_both, BoxMode::closed_open_dual);
    REQUIRE(dual.size() == 1);
    CHECK(dual[0].point == IntVec{0, 0});

    // |det| points in every half-open mode
    HalfOpenSimplicialCone tall{{{1, 0}, {1, 3}}, {false, true}};
    CHECK(parallelepiped_points(tall, BoxMode::half_open).size() == 3);
    CHECK(parallelepiped_points(tall, BoxMode::closed_open_dual).size() == 3);

    HalfOpenSimplicialCone dependent{{{1, 1}, {2, 2}}, {false, false}};
    CHECK_THROWS_AS(parallelepiped_points(dependent, BoxMode::open), InvalidArgument);
}

TEST_CASE("decomposition of simplicial and non-simplicial cones") {
    const Decomposition simple = decompose(RationalCone(2, {{0, 1}, {1, 1}}));
    REQUIRE(simple.pieces.size() == 1);
    CHECK(simple.pieces[0].open == std::vector<bool>{false, false});

    const Decomposition sq = decompose(unit_square_cone());
    REQUIRE(sq.pieces.size() == 2);
    // The shared facet is open in exactly one of the two pieces.
    int open_flags = 0;
    for (const auto& piece : sq.pieces)
        for (bool f : piece.open) open_flags += f ? 1 : 0;
    CHECK(open_flags == 1);
}

TEST_CASE("half-open pieces partition the lattice points of each corpus cone") {
    const Corpus corpus = load_corpus(EHRHART_TEST_CORPUS);
    CHECK(corpus.cones.size() >= 6);
    for (const auto& k : corpus.cones) {
        INFO(k.name);
        CHECK(partition_check(k.cone, 4).verdict == Verdict::pass);
    }
}

TEST_CASE("square cone points by hand-written membership") {
    // (x, y, t) with 0 <= x, y <= t
    const RationalCone k = unit_square_cone();
    const IntVec g = grading_vector(k);
    for (long h = 0; h <= 6; ++h) {
        const long expected = oracle::count_box(3, 0, h, [&](const oracle::Point& x) {
            const long height = x[0] * g[0].get_si() + x[1] * g[1].get_si() + x[2] * g[2].get_si();
            return x[0] <= x[2] && x[1] <= x[2] && height <= h;
        });
        CHECK(static_cast<long>(cone_points_up_to(k, h).size()) == expected);
    }
}

TEST_CASE("sigma evaluation on the quadrant") {
    const RationalCone quadrant(2, {{1, 0}, {0, 1}});
    CHECK(sigma_eval(quadrant, z({make_rat(1, 2), make_rat(1, 3)})) == 3);
    CHECK(sigma_eval(quadrant, z({make_rat(1, 2), make_rat(1, 3)}), ConeRegion::interior) == make_rat(1, 2));
    CHECK_THROWS_AS(sigma_eval(quadrant, z({Rat(1), make_rat(1, 3)})), PoleError);
}

TEST_CASE("sigma of cone([0,1]) against a truncated sum with exact tail") {
    // Points (a, b), 0 <= a <= b; z = (2, 1/5). Row b contributes (2^{b+1} - 1) / 5^b.
    const RationalCone k(2, {{0, 1}, {1, 1}});
    const long H = 12;
    mpq_class partial = 0;
    for (long b = 0; b <= H; ++b)
        for (long a = 0; a <= b; ++a) {
            mpq_class term = 1;
            for (long i = 0; i < a; ++i) term *= 2;
            for (long i = 0; i < b; ++i) term /= 5;
            partial += term;
        }
    // tail = 2 sum_{b>H} (2/5)^b - sum_{b>H} (1/5)^b
    mpq_class q1 = 1, q2 = 1;
    for (long i = 0; i <= H; ++i) {
        q1 *= mpq_class(2, 5);
        q2 *= mpq_class(1, 5);
    }
    const mpq_class tail = 2 * q1 / (1 - mpq_class(2, 5)) - q2 / (1 - mpq_class(1, 5));
    const Rat value = sigma_eval(k, z({Rat(2), make_rat(1, 5)}));
    CHECK(value == partial + tail);
    CHECK(value == make_rat(25, 12));
}

TEST_CASE("Stanley reciprocity on small examples") {
    const RationalCone quadrant(2, {{1, 0}, {0, 1}});
    CHECK(sigma_eval(quadrant, z({make_rat(1, 2), make_rat(1, 3)})) ==
          sigma_eval(quadrant, z({Rat(2), Rat(3)}), ConeRegion::interior));
    const RationalCone ray(1, {{1}});
    CHECK(sigma_eval(ray, z({make_rat(1, 2)})) == 2);
    CHECK(-sigma_eval(ray, z({Rat(2)}), ConeRegion::interior) == 2);

    const Report r = stanley_reciprocity_check(unit_square_cone(), 10, 99);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.instances.size() == 10);
    CHECK(to_json(r) == to_json(stanley_reciprocity_check(unit_square_cone(), 10, 99)));
}

TEST_CASE("specialization matches the Ehrhart series") {
    const auto seg = normalize(std::vector<IntVec>{{0}, {1}});
    const Report r1 = specialization_check(seg, {make_rat(1, 2)});
    CHECK(r1.verdict == Verdict::pass);
    CHECK(r1.instances[0].lhs == 4);

    const auto sq = normalize(std::vector<IntVec>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    const Report r2 = specialization_check(sq, {make_rat(1, 3)});
    CHECK(r2.verdict == Verdict::pass);
    CHECK(r2.instances[0].lhs == make_rat(9, 2));

    const auto tri = normalize(std::vector<IntVec>{{0, 0}, {1, 0}, {0, 1}});
    const Report r3 = specialization_check(tri, {make_rat(1, 2)});
    CHECK(r3.instances[0].lhs == 8);

    CHECK_THROWS_AS(specialization_check(seg, {Rat(1)}), PoleError);
}
