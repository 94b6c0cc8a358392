#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace listagree {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// "num/den" with den > 0; integers still carry "/1".
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

// Exact binomial coefficient; 0 when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

inline Rational ratio(std::int64_t num, std::int64_t den) { return Rational(num, den); }

}  // namespace listagree
