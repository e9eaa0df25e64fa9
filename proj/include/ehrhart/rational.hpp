#pragma once

// Exact scalars. Int and Rat are GMP types; every mpq_class produced by
// arithmetic is already canonical (reduced, positive denominator). Values
// built from separate numerator/denominator must go through make_rat.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ehrhart {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// num/den in canonical form; throws InvalidArgument when den == 0.
Rat make_rat(const Int& num, const Int& den);

/// Parses "p", "-p" or "p/q" (optional surrounding whitespace).
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& value);
std::string to_string(const Int& value);

Int floor(const Rat& value);
Int ceil(const Rat& value);

inline bool is_integer(const Rat& value) { return value.get_den() == 1; }

/// Integer power; negative exponents invert (throws PoleError on 0^-k).
Rat pow(const Rat& base, long exponent);

/// Binomial coefficient C(n, k) as a polynomial in n: n(n-1)...(n-k+1)/k!,
/// zero for k < 0. Valid for negative n.
Int binomial(const Int& n, long k);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// gcd of all entries (0 for an all-zero or empty vector).
Int content(const IntVec& v);

/// Smallest positive integer multiple of v (all entries integral, content 1).
/// Zero vector maps to zero vector.
IntVec primitive(const RatVec& v);

RatVec to_rat(const IntVec& v);

/// Mathematical residue of n modulo m, in {0, ..., m-1}; m > 0.
long mod_floor(long n, long m);

}  // namespace ehrhart
