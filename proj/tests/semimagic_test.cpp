#include <doctest.h>

#include "ehrhart/enumerate.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/semimagic.hpp"
#include "oracles.hpp"

using namespace ehrhart;

TEST_CASE("semimagic counts against brute force") {
    CHECK(count_semimagic(3, 1) == 6);
    CHECK(count_semimagic(3, 2) == 21);
    for (long r = 0; r <= 5; ++r) CHECK(count_semimagic(1, r) == 1);
    for (long r = 0; r <= 5; ++r) CHECK(count_semimagic(2, r) == r + 1);
    for (int n = 2; n <= 3; ++n)
        for (long r = 0; r <= 5; ++r) CHECK(count_semimagic(n, r) == oracle::semimagic_brute(n, r));
    for (long r = 0; r <= 3; ++r) CHECK(count_semimagic(4, r) == oracle::semimagic_brute(4, r));
    for (long r = 0; r <= 12; ++r) CHECK(count_semimagic(3, r) == oracle::macmahon(r));
    CHECK(count_semimagic(4, 0) == 1);
    CHECK(count_semimagic(4, 1) == 24);
    CHECK_THROWS_AS(count_semimagic(5, 1), Unsupported);
    CHECK_THROWS_AS(count_semimagic(0, 1), Unsupported);
    CHECK_THROWS_AS(count_semimagic(3, -1), InvalidArgument);
}

TEST_CASE("H_n is a polynomial with the expected roots, symmetry and h-vector") {
    for (int n : {1, 2, 3, 4}) {
        INFO("n=" << n);
        const AdgResult r = adg_report(n);
        CHECK(r.report.verdict == Verdict::pass);
        CHECK(r.table.h_poly.degree() == (n - 1) * (n - 1));
        for (long k = 1; k < n; ++k) CHECK(r.table.h_poly(Rat(-k)) == 0);
    }
    const AdgResult three = adg_report(3);
    CHECK(three.table.h.coeffs == RatVec{Rat(1), Rat(1), Rat(1)});
    // MacMahon: H_3 = C(r+5,5) - C(r+2,5) agrees past the interpolation range
    for (std::size_t r = 0; r < three.table.values.size(); ++r)
        CHECK(three.table.values[r] == oracle::macmahon(static_cast<long>(r)));
    CHECK(adg_report(2).table.h.coeffs == RatVec{Rat(1)});
    const AdgResult four = adg_report(4, 12);
    CHECK(four.table.values.size() == 13);
    CHECK(four.table.h.coeffs == RatVec{Rat(1), Rat(14), Rat(87), Rat(148), Rat(87), Rat(14), Rat(1)});
}

TEST_CASE("Birkhoff polytopes") {
    const RationalPolytope b3 = birkhoff_polytope(3);
    CHECK(b3.vertices().size() == 6);
    CHECK(b3.dim() == 4);
    CHECK(b3.ambient_dim() == 9);
    CHECK(birkhoff_polytope(2).dim() == 1);
    CHECK(birkhoff_polytope(1).dim() == 0);
    CHECK_THROWS_AS(birkhoff_polytope(4), Unsupported);
    for (long r = 0; r <= 3; ++r) CHECK(count_dilate(b3, r) == oracle::macmahon(r));
    for (int n : {1, 2, 3}) {
        INFO("n=" << n);
        CHECK(birkhoff_bridge(n).verdict == Verdict::pass);
    }
}
