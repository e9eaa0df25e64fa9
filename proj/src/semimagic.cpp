#include "ehrhart/semimagic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "ehrhart/enumerate.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/triangulate.hpp"

namespace ehrhart {

namespace {

using State = std::vector<long>;

void check_n(int n) {
    if (n < 1 || n > 4) throw Unsupported("semimagic counts are unsupported at desk scale for n = " + std::to_string(n));
}

// Every row (x_0..x_{n-1}) with sum r and x_j <= residual[j].
void for_each_row(const State& residual, long r, const std::function<void(const State&)>& fn) {
    State row(residual.size());
    std::function<void(std::size_t, long)> rec = [&](std::size_t j, long left) {
        if (j + 1 == residual.size()) {
            if (left <= residual[j]) {
                row[j] = left;
                fn(row);
            }
            return;
        }
        for (long x = 0; x <= std::min(left, residual[j]); ++x) {
            row[j] = x;
            rec(j + 1, left - x);
        }
    };
    rec(0, r);
}

}  // namespace

Int count_semimagic(int n, long r) {
    check_n(n);
    if (r < 0) throw InvalidArgument("semimagic: r must be nonnegative");
    std::map<State, Int> states{{State(static_cast<std::size_t>(n), r), Int(1)}};
    for (int row = 0; row + 1 < n; ++row) {
        std::map<State, Int> next;
        for (const auto& [residual, ways] : states) {
            for_each_row(residual, r, [&](const State& x) {
                State rest(residual.size());
                for (std::size_t j = 0; j < rest.size(); ++j) rest[j] = residual[j] - x[j];
                std::sort(rest.begin(), rest.end());
                next[rest] += ways;
            });
        }
        states = std::move(next);
    }
    Int total = 0;
    for (const auto& [residual, ways] : states) total += ways;
    return total;
}

std::vector<Int> semimagic_counts(int n, long rmax) {
    std::vector<Int> out;
    for (long r = 0; r <= rmax; ++r) out.push_back(count_semimagic(n, r));
    return out;
}

AdgResult adg_report(int n, long rmax, long symmetry_max) {
    check_n(n);
    const long d = static_cast<long>(n - 1) * (n - 1);
    rmax = std::max(rmax, d + 3);
    AdgResult out;
    Report& r = out.report;
    r.theorem = "anand-dumir-gupta";
    SemimagicTable& t = out.table;
    t.n = n;
    t.values = semimagic_counts(n, rmax);

    std::vector<std::pair<long, Rat>> samples;
    for (long k = 0; k <= d; ++k) samples.emplace_back(k, Rat(t.values[static_cast<std::size_t>(k)]));
    t.h_poly = interpolate(samples);
    for (long k = d + 1; k <= rmax; ++k) {
        const Rat v(t.values[static_cast<std::size_t>(k)]);
        r.add(Json{{"check", "polynomial"}, {"r", k}}, t.h_poly(k), v, t.h_poly(k) == v);
    }
    r.add(Json{{"check", "degree"}}, t.h_poly.degree(), d, t.h_poly.degree() == d);
    for (long k = 1; k <= n - 1; ++k) r.add(Json{{"check", "root"}, {"r", -k}}, t.h_poly(-k), 0, t.h_poly(-k) == 0);
    const Rat sign = n % 2 == 1 ? 1 : -1;
    for (long k = 1; k <= symmetry_max; ++k) {
        const Rat lhs = t.h_poly(-k);
        const Rat rhs = sign * t.h_poly(k - n);
        r.add(Json{{"check", "symmetry"}, {"r", k}}, lhs, rhs, lhs == rhs);
    }

    RatVec counts(t.values.begin(), t.values.end());
    const long top = static_cast<long>(n) * n - 3 * n + 2;
    try {
        t.h = hstar_from_counts(counts, d, 1);
        const Poly h = t.h.as_poly();
        r.add(Json{{"check", "h-degree"}}, h.degree(), top, h.degree() == top);
        r.add(Json{{"check", "h-palindromic"}}, 1, is_palindromic(h, std::max(top, h.degree())) ? 1 : 0,
              is_palindromic(h, std::max(top, h.degree())));
        for (long j = 0; j <= h.degree(); ++j) {
            const Rat c = h.coeff(j);
            r.add(Json{{"check", "h-nonnegative-integer"}, {"j", j}}, 0, c, c >= 0 && is_integer(c));
        }
    } catch (const InconsistentCounts& err) {
        r.add(Json{{"check", "guard-terms"}}, 0, 1, false);
        r.details["error"] = err.what();
    }
    r.details["n"] = n;
    r.details["values"] = int_array(IntVec(t.values.begin(), t.values.end()));
    r.details["H"] = t.h_poly.to_string("r");
    r.details["h"] = rat_array(t.h.coeffs);
    r.details["denominator_exponent"] = d + 1;
    r.conclude();
    return out;
}

RationalPolytope birkhoff_polytope(int n) {
    if (n < 1 || n > 3) throw Unsupported("Birkhoff polytope geometry is unsupported at desk scale for n = " + std::to_string(n));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<IntVec> vertices;
    do {
        IntVec v(static_cast<std::size_t>(n * n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i * n + perm[static_cast<std::size_t>(i)])] = 1;
        vertices.push_back(std::move(v));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return normalize(vertices, "B" + std::to_string(n));
}

Report birkhoff_bridge(int n) {
    Report r;
    r.theorem = "birkhoff-semimagic-bridge";
    const RationalPolytope b = birkhoff_polytope(n);
    for (long k = 0; k <= 2; ++k) {
        const Rat geo(count_dilate(b, k));
        const Rat dp(count_semimagic(n, k));
        r.add(Json{{"check", "closed-count"}, {"r", k}}, geo, dp, geo == dp);
    }
    for (long k = n; k <= n + 3; ++k) {
        const Rat geo(count_dilate(b, k, Region::relative_interior));
        const Rat dp(count_semimagic(n, k - n));
        r.add(Json{{"check", "interior-count"}, {"r", k}}, geo, dp, geo == dp);
    }
    const AdgResult adg = adg_report(n, 0, 0);
    const Rat h1 = adg.table.h.as_poly()(1);
    const Rat vol(normalized_volume(placing_triangulation(b, Flavor::vertices)));
    r.add(Json{{"check", "normalized-volume"}}, h1, vol, h1 == vol);
    r.details["dim"] = b.dim();
    r.details["vertices"] = b.vertices().size();
    return r.conclude();
}

}  // namespace ehrhart
