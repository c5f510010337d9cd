#pragma once

#include <cstdint>

#include "ballcover/rational.hpp"

namespace ballcover {

// Directed rational bounds for irrational constants. Every inequality the
// library claims goes through one of these so it holds exactly.
Rational e_upper();  // 2719/1000 >= e
Rational e_lower();  // 2718/1000 <= e

// Natural logarithm of a positive rational, bracketed to within 1e-40.
Rational log_upper(const Rational& x);
Rational log_lower(const Rational& x);

Rational pow(const Rational& base, std::uint64_t exponent);

}  // namespace ballcover
