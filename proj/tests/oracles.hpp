#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library: membership is written out by hand, counts are plain loops over
// machine integers, and series transforms are direct convolutions.

#include <gmpxx.h>

#include <functional>
#include <vector>

namespace oracle {

using Point = std::vector<long>;
using Member = std::function<bool(const Point&)>;

/// Integer points x in [lo, hi]^dim with member(x).
inline long count_box(int dim, long lo, long hi, const Member& member) {
    long count = 0;
    Point x(static_cast<std::size_t>(dim), lo);
    if (dim == 0) return member(x) ? 1 : 0;
    while (true) {
        if (member(x)) ++count;
        int i = 0;
        while (i < dim && x[static_cast<std::size_t>(i)] == hi) x[static_cast<std::size_t>(i++)] = lo;
        if (i == dim) break;
        ++x[static_cast<std::size_t>(i)];
    }
    return count;
}

inline long binom(long n, long k) {
    if (k < 0 || n < k) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Polynomial binomial coefficient n(n-1)...(n-k+1)/k!, valid for negative n.
inline mpz_class binom_poly(long n, long k) {
    if (k < 0) return 0;
    mpz_class num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

/// Number of semimagic squares by listing every matrix with the right row sums.
inline long semimagic_brute(int n, long r) {
    std::vector<std::vector<long>> rows;
    Point row(static_cast<std::size_t>(n));
    std::function<void(int, long)> compose = [&](int j, long left) {
        if (j == n - 1) {
            row[static_cast<std::size_t>(j)] = left;
            rows.push_back(row);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            row[static_cast<std::size_t>(j)] = v;
            compose(j + 1, left - v);
        }
    };
    compose(0, r);
    long count = 0;
    Point cols(static_cast<std::size_t>(n), 0);
    std::function<void(int)> place = [&](int i) {
        if (i == n) {
            for (long c : cols)
                if (c != r) return;
            ++count;
            return;
        }
        for (const auto& rw : rows) {
            bool ok = true;
            for (int j = 0; j < n; ++j)
                if (cols[static_cast<std::size_t>(j)] + rw[static_cast<std::size_t>(j)] > r) ok = false;
            if (!ok) continue;
            for (int j = 0; j < n; ++j) cols[static_cast<std::size_t>(j)] += rw[static_cast<std::size_t>(j)];
            place(i + 1);
            for (int j = 0; j < n; ++j) cols[static_cast<std::size_t>(j)] -= rw[static_cast<std::size_t>(j)];
        }
    };
    place(0);
    return count;
}

/// MacMahon's closed form for 3x3 semimagic squares.
inline long macmahon(long r) { return binom(r + 5, 5) - binom(r + 2, 5); }

/// Coefficients of (sum_n counts[n] x^n) (1 - x^p)^e below degree `keep`.
inline std::vector<mpz_class> times_one_minus(const std::vector<long>& counts, long p, long e, std::size_t keep) {
    std::vector<mpz_class> f(counts.begin(), counts.end());
    for (long t = 0; t < e; ++t) {
        std::vector<mpz_class> g(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            g[i] += f[i];
            if (i + static_cast<std::size_t>(p) < g.size()) g[i + static_cast<std::size_t>(p)] -= f[i];
        }
        f = g;
    }
    f.resize(keep);
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

}  // namespace oracle
