#include "ehrhart/poly.hpp"

#include <set>
#include <sstream>

#include "ehrhart/errors.hpp"

namespace ehrhart {

Poly::Poly(RatVec coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<long> coefficients) {
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

Poly Poly::monomial(const Rat& coefficient, std::size_t exponent) {
    RatVec c(exponent + 1, Rat(0));
    c[exponent] = coefficient;
    return Poly(std::move(c));
}

Poly Poly::from_ints(const IntVec& coefficients) { return Poly(to_rat(coefficients)); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rat Poly::operator()(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    RatVec out(coeffs_.size() + other.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

Poly Poly::truncated(std::size_t n) const {
    if (n >= coeffs_.size()) return *this;
    return Poly(RatVec(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n)));
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Rat& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rat mag = c;
        if (c < 0) {
            os << '-';
            mag = -c;
        } else if (!first) {
            os << '+';
        }
        first = false;
        const bool unit = (mag == 1);
        if (k == 0 || !unit) {
            if (is_integer(mag) || k == 0)
                os << mag.get_str();
            else
                os << '(' << mag.get_str() << ')';
        }
        if (k >= 1) os << var;
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

Poly pow(const Poly& base, unsigned exponent) {
    Poly result{1};
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

// Newton divided differences, then expansion of the Newton form.
Poly interpolate(const std::vector<std::pair<long, Rat>>& samples) {
    std::set<long> seen;
    for (const auto& [x, _] : samples)
        if (!seen.insert(x).second) throw InvalidArgument("interpolate: duplicate argument " + std::to_string(x));
    const std::size_t n = samples.size();
    RatVec table;
    table.reserve(n);
    for (const auto& s : samples) table.push_back(s.second);
    RatVec newton(n);
    for (std::size_t level = 0; level < n; ++level) {
        newton[level] = table[level];
        for (std::size_t i = n - 1; i > level; --i)
            table[i] = (table[i] - table[i - 1]) / Rat(samples[i].first - samples[i - level - 1].first);
    }
    Poly result;
    Poly basis{1};
    for (std::size_t k = 0; k < n; ++k) {
        result += basis * newton[k];
        basis *= Poly(RatVec{Rat(-samples[k].first), Rat(1)});
    }
    return result;
}

bool is_palindromic(const Poly& f, long top) {
    if (top < f.degree()) throw InvalidArgument("is_palindromic: top below degree");
    for (long k = 0; k <= top; ++k)
        if (f.coeff(k) != f.coeff(top - k)) return false;
    return true;
}

QuasiPoly::QuasiPoly(Poly single) : constituents_{std::move(single)} {}

QuasiPoly::QuasiPoly(std::vector<Poly> constituents) : constituents_(std::move(constituents)) {
    if (constituents_.empty()) throw InvalidArgument("quasipolynomial needs period >= 1");
}

const Poly& QuasiPoly::constituent(long n) const {
    return constituents_[static_cast<std::size_t>(mod_floor(n, period()))];
}

long QuasiPoly::minimal_period() const {
    const long p = period();
    for (long q = 1; q < p; ++q) {
        if (p % q != 0) continue;
        bool periodic = true;
        for (long i = q; i < p && periodic; ++i)
            periodic = constituents_[static_cast<std::size_t>(i)] == constituents_[static_cast<std::size_t>(i - q)];
        if (periodic) return q;
    }
    return p;
}

QuasiPoly QuasiPoly::reduced() const {
    const long q = minimal_period();
    return QuasiPoly(std::vector<Poly>(constituents_.begin(), constituents_.begin() + q));
}

Rat evaluate(const QuasiPoly& f, long n) { return f.constituent(n)(Rat(n)); }

Rat HStarData::at(long j) const {
    if (j < 0 || j >= static_cast<long>(coeffs.size())) return 0;
    return coeffs[static_cast<std::size_t>(j)];
}

HStarData make_hstar(RatVec coeffs, long dim, long period) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    HStarData h;
    h.coeffs = std::move(coeffs);
    h.dim = dim;
    h.period = period;
    h.degree = static_cast<long>(h.coeffs.size()) - 1;
    h.codegree = dim + 1 - h.degree;
    return h;
}

HStarData hstar_from_counts(const RatVec& counts, long dim, long period) {
    if (dim < 0 || period < 1) throw InvalidArgument("hstar_from_counts: bad dimension or period");
    const std::size_t numerator_len = static_cast<std::size_t>(period * (dim + 1));
    if (counts.size() < numerator_len + 1)
        throw InvalidArgument("hstar_from_counts: need at least " + std::to_string(numerator_len + 1) + " counts");
    if (counts[0] != 1) throw InconsistentCounts("counts inconsistent with claimed dimension/period: counts[0] != 1");
    // (1 - x^p)^(d+1) = sum_j (-1)^j C(d+1, j) x^(p j)
    RatVec product(counts.size(), Rat(0));
    for (long j = 0; j <= dim + 1; ++j) {
        const Rat c = (j % 2 == 0 ? 1 : -1) * Rat(binomial(Int(dim + 1), j));
        const std::size_t shift = static_cast<std::size_t>(period * j);
        for (std::size_t k = shift; k < counts.size(); ++k) product[k] += c * counts[k - shift];
    }
    for (std::size_t k = numerator_len; k < product.size(); ++k)
        if (product[k] != 0)
            throw InconsistentCounts("counts inconsistent with claimed dimension/period: guard term x^" +
                                     std::to_string(k) + " = " + product[k].get_str());
    product.resize(numerator_len);
    return make_hstar(std::move(product), dim, period);
}

Rat counts_from_hstar(const HStarData& h, long n) {
    if (h.period != 1) throw Unsupported("counts_from_hstar: period > 1; use the quasipolynomial constituents");
    Rat total = 0;
    for (std::size_t k = 0; k < h.coeffs.size(); ++k)
        total += h.coeffs[k] * Rat(binomial(Int(n + h.dim - static_cast<long>(k)), h.dim));
    return total;
}

RatVec series_from_hstar(const HStarData& h, std::size_t count) {
    // 1/(1 - y)^(d+1) = sum_m C(m + d, d) y^m with y = x^p
    RatVec out(count, Rat(0));
    for (std::size_t k = 0; k < h.coeffs.size(); ++k) {
        for (std::size_t m = 0;; ++m) {
            const std::size_t idx = k + static_cast<std::size_t>(h.period) * m;
            if (idx >= count) break;
            out[idx] += h.coeffs[k] * Rat(binomial(Int(static_cast<long>(m) + h.dim), h.dim));
        }
    }
    return out;
}

}  // namespace ehrhart
