#pragma once

// Univariate polynomials, quasipolynomials and the transforms between
// lattice-point counts and Ehrhart h*-vectors.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/rational.hpp"

namespace ehrhart {

/// Dense univariate polynomial with rational coefficients; index = exponent.
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(RatVec coefficients);
    Poly(std::initializer_list<long> coefficients);

    static Poly monomial(const Rat& coefficient, std::size_t exponent);
    static Poly from_ints(const IntVec& coefficients);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const RatVec& coefficients() const { return coeffs_; }

    /// Coefficient of x^k; zero outside 0..degree (including negative k).
    Rat coeff(long k) const;

    Rat operator()(const Rat& x) const;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Rat& scalar);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// x^k-truncation: keeps coefficients of degree < n.
    Poly truncated(std::size_t n) const;

    /// Human-readable form in descending powers, e.g. "n^2+2n+1".
    std::string to_string(const std::string& var = "n") const;

private:
    void trim();
    RatVec coeffs_;
};

Poly pow(const Poly& base, unsigned exponent);

/// Unique polynomial of degree < samples.size() through the samples.
/// Throws InvalidArgument on duplicate arguments.
Poly interpolate(const std::vector<std::pair<long, Rat>>& samples);

/// Whether coeff(k) == coeff(top - k) for 0 <= k <= top. Requires top >= degree.
bool is_palindromic(const Poly& f, long top);

/// Quasipolynomial of period p: constituent i applies to arguments n ≡ i (mod p).
class QuasiPoly {
public:
    QuasiPoly() : constituents_{Poly{}} {}
    explicit QuasiPoly(Poly single);
    explicit QuasiPoly(std::vector<Poly> constituents);

    long period() const { return static_cast<long>(constituents_.size()); }
    const std::vector<Poly>& constituents() const { return constituents_; }
    const Poly& constituent(long n) const;

    /// Smallest period q dividing period() for which the constituent list is q-periodic.
    long minimal_period() const;
    QuasiPoly reduced() const;

    friend bool operator==(const QuasiPoly&, const QuasiPoly&) = default;

private:
    std::vector<Poly> constituents_;
};

/// Value of the constituent selected by the residue of n (negative n allowed).
Rat evaluate(const QuasiPoly& f, long n);

/// Numerator of an Ehrhart-type series written over (1 - x^period)^(dim+1).
struct HStarData {
    RatVec coeffs;  // h*_0 .. h*_s, trailing zeros stripped
    long dim = 0;
    long period = 1;
    long degree = 0;    // s
    long codegree = 0;  // l = dim + 1 - s

    Poly as_poly() const { return Poly(coeffs); }
    /// h*_j with the zero-extension convention outside 0..s.
    Rat at(long j) const;
};

/// Builds HStarData from coefficients; fills degree and codegree.
HStarData make_hstar(RatVec coeffs, long dim, long period);

/// Multiplies sum_n counts[n] x^n by (1 - x^p)^(d+1). The numerator is the
/// part below degree p(d+1); every coefficient from p(d+1) up to the last
/// supplied count is a guard term and must vanish.
/// Throws InconsistentCounts when a guard term is nonzero or counts[0] != 1,
/// InvalidArgument when fewer than p(d+1)+1 counts are supplied.
HStarData hstar_from_counts(const RatVec& counts, long dim, long period);

/// ehr(n) = sum_k h*_k C(n + d - k, d). Lattice case only (period 1).
Rat counts_from_hstar(const HStarData& h, long n);

/// Series coefficients of h(x) / (1 - x^p)^(d+1) for n = 0 .. count-1.
RatVec series_from_hstar(const HStarData& h, std::size_t count);

}  // namespace ehrhart
