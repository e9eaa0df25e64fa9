#include <doctest.h>

#include "ehrhart/corpus.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/structure.hpp"

using namespace ehrhart;

namespace {

HStarProfile make_profile(std::initializer_list<long> coeffs, long d) {
    RatVec v;
    for (long c : coeffs) v.emplace_back(c);
    return profile(make_hstar(v, d, 1));
}

RationalPolytope lattice(std::vector<IntVec> v, std::string name = "") { return normalize(v, std::move(name)); }

RationalPolytope reeve(long r) { return lattice({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, r}}, "reeve"); }

}  // namespace

TEST_CASE("profile reads degree and codegree") {
    const HStarProfile sq = make_profile({1, 1}, 2);
    CHECK(sq.s == 1);
    CHECK(sq.l == 2);
    CHECK(sq.h(-1) == 0);
    CHECK(sq.h(4) == 0);
    CHECK(make_profile({1, 0, 1}, 3).l == 2);
    CHECK_THROWS_AS(make_profile({2, 1}, 2), InvalidArgument);
    CHECK_THROWS_AS(profile(make_hstar({Rat(1), Rat(1)}, 1, 2)), Unsupported);
}

TEST_CASE("Stanley inequalities") {
    CHECK(stanley_inequalities(make_profile({1, 1}, 2)).verdict == Verdict::pass);
    CHECK(stanley_inequalities(make_profile({1, 0, 2}, 3)).verdict == Verdict::pass);
    CHECK(stanley_inequalities(make_profile({1, 3, 1}, 2)).verdict == Verdict::pass);
    // h0 + h1 = 6 exceeds h3 + h2 = 2
    CHECK(stanley_inequalities(make_profile({1, 5, 1, 1}, 3)).verdict == Verdict::fail);
}

TEST_CASE("Stapledon inequalities") {
    CHECK(stapledon_inequalities(make_profile({1, 4, 1}, 3)).verdict == Verdict::pass);
    CHECK(stapledon_inequalities(make_profile({1, 0, 1}, 3)).verdict == Verdict::pass);
    // h*_d > h*_1 breaks the trivial inequality
    CHECK(stapledon_inequalities(make_profile({1, 0, 3}, 2)).verdict == Verdict::fail);
}

TEST_CASE("a/b decomposition") {
    // square: l = 2, (1 + x)(1 + x) is already palindromic of degree 2
    const ABDecomposition sq = ab_decomposition(make_profile({1, 1}, 2));
    CHECK(sq.a == Poly{1, 2, 1});
    CHECK(sq.b.is_zero());
    // reflexive 2P square: h* = 1 + 6x + x^2, l = 1
    const ABDecomposition refl = ab_decomposition(make_profile({1, 6, 1}, 2));
    CHECK(refl.a == Poly{1, 6, 1});
    CHECK(refl.b.is_zero());
    // Reeve r = 2: h* = 1 + x^2, l = 2; (1+x)(1+x^2) = 1 + x + x^2 + x^3
    const ABDecomposition r2 = ab_decomposition(make_profile({1, 0, 1}, 3));
    CHECK(r2.a == Poly{1, 1, 1, 1});
    CHECK(r2.b.is_zero());
    // triangle conv{(0,0),(3,0),(0,1)}: h* = 1 + 2x, l = 2; (1+x)(1+2x) = 1 + 3x + 2x^2
    const ABDecomposition t = ab_decomposition(make_profile({1, 2}, 2));
    CHECK(t.a == Poly{1, 3, 1});
    CHECK(t.b == Poly{1});
    CHECK(t.a + Poly{0, 0, 1} * t.b == Poly{1, 3, 2});
}

TEST_CASE("a/b check on the corpus") {
    const Corpus corpus = load_corpus(EHRHART_TEST_CORPUS);
    for (const auto& p : corpus.polytopes) {
        if (!p.is_lattice()) continue;
        INFO(p.name());
        CHECK(ab_check(p, ehrhart::ehrhart(p)).verdict == Verdict::pass);
    }
}

TEST_CASE("palindromic h* exactly for reflexive dilates") {
    const Corpus corpus = load_corpus(EHRHART_TEST_CORPUS);
    int positive = 0, negative = 0;
    for (const auto& p : corpus.polytopes) {
        if (!p.is_lattice() || !p.is_full_dimensional()) continue;
        INFO(p.name());
        const Report r = hibi_check(p);
        CHECK(r.verdict == Verdict::pass);
        if (r.details.value("palindromic", false))
            ++positive;
        else
            ++negative;
    }
    CHECK(positive >= 3);
    CHECK(negative >= 3);

    const Report hex = hibi_check(lattice({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}));
    CHECK(hex.details["palindromic"] == true);
    const Report tri = hibi_check(lattice({{0, 0}, {3, 0}, {0, 1}}));
    CHECK(tri.details["palindromic"] == false);
    CHECK_THROWS_AS(hibi_check(lattice({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}})), Unsupported);
}

TEST_CASE("unimodular triangulation bounds") {
    const Report sq = athanasiadis_check(lattice({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    CHECK(sq.verdict == Verdict::pass);
    const Report r3 = athanasiadis_check(reeve(3));
    CHECK(r3.verdict == Verdict::hypothesis_not_met);
    const Report cube = athanasiadis_check(
        lattice({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
    CHECK(cube.verdict == Verdict::pass);
}

TEST_CASE("monotonicity under inclusion") {
    const auto sq1 = lattice({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    const auto sq2 = lattice({{0, 0}, {2, 0}, {0, 2}, {2, 2}});
    CHECK(monotonicity_check(sq1, sq2).verdict == Verdict::pass);
    CHECK(monotonicity_check(sq1, sq1).verdict == Verdict::pass);
    const auto half = normalize(std::vector<RatVec>{{Rat(0)}, {make_rat(1, 2)}});
    const auto unit = lattice({{0}, {1}});
    CHECK(monotonicity_check(half, unit).verdict == Verdict::pass);
    // a lower-dimensional edge inside the square
    CHECK(monotonicity_check(lattice({{0, 0}, {1, 0}}), sq1).verdict == Verdict::pass);
    CHECK_THROWS_AS(monotonicity_check(sq2, sq1), InvalidArgument);
}
