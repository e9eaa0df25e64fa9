#include "ehrhart/rational.hpp"

#include <cctype>

#include "ehrhart/errors.hpp"

namespace ehrhart {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Int parse_int(std::string_view s) {
    if (s[0] == '+') s.remove_prefix(1);
    return Int(std::string(s), 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(text)) throw ParseError("not a rational: '" + std::string(text) + "'");
        return Rat(parse_int(text));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-')
        throw ParseError("not a rational: '" + std::string(text) + "'");
    const Int d = parse_int(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return make_rat(parse_int(num), d);
}

std::string to_string(const Rat& value) { return value.get_str(); }
std::string to_string(const Int& value) { return value.get_str(); }

Int floor(const Rat& value) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Int ceil(const Rat& value) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Rat pow(const Rat& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw PoleError("zero raised to a negative power");
        Rat inv = 1 / base;
        return pow(inv, -exponent);
    }
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return make_rat(num, den);
}

Int binomial(const Int& n, long k) {
    if (k < 0) return 0;
    if (n >= 0) {
        if (n < k) return 0;
        Int r;
        mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
        return r;
    }
    // C(n, k) = (-1)^k C(k - n - 1, k) for negative n.
    Int r = binomial(Int(k) - n - 1, k);
    return (k % 2 == 0) ? r : Int(-r);
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int content(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

IntVec primitive(const RatVec& v) {
    Int den = 1;
    for (const auto& x : v) den = lcm(den, x.get_den());
    IntVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(Int(x.get_num() * (den / x.get_den())));
    const Int g = content(out);
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

RatVec to_rat(const IntVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

long mod_floor(long n, long m) {
    const long r = n % m;
    return r < 0 ? r + m : r;
}

}  // namespace ehrhart
