#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace ballcover {

// Exact rational in canonical form (positive denominator, reduced).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

inline Rational make_rational(std::int64_t numerator, std::int64_t denominator) {
  return Rational(BigInt(numerator), BigInt(denominator));
}

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

// Accepts "p", "-p" and "p/q"; throws InputError otherwise.
Rational parse_rational(std::string_view text);

BigInt floor(const Rational& value);
BigInt ceil(const Rational& value);

}  // namespace ballcover
