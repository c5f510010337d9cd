#include "ballcover/bounds.hpp"

#include <string>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "ballcover/errors.hpp"

namespace ballcover {
namespace {

using Decimal = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<80>,
                                              boost::multiprecision::et_off>;

constexpr int kLogDigits = 40;

// floor(log(x) * 10^40) as an integer, accurate to within one unit.
BigInt scaled_log_floor(const Rational& x) {
  if (x <= 0) throw InputError("log of a nonpositive rational");
  const Decimal num(boost::multiprecision::numerator(x).str());
  const Decimal den(boost::multiprecision::denominator(x).str());
  const Decimal scaled = boost::multiprecision::log(num / den) *
                         boost::multiprecision::pow(Decimal(10), kLogDigits);
  const Decimal floored = boost::multiprecision::floor(scaled);
  std::string digits = floored.str(0, std::ios_base::fixed);
  if (const auto dot = digits.find('.'); dot != std::string::npos) digits.erase(dot);
  return BigInt(digits);
}

BigInt ten_power() {
  BigInt out = 1;
  for (int i = 0; i < kLogDigits; ++i) out *= 10;
  return out;
}

}  // namespace

Rational e_upper() { return make_rational(2719, 1000); }
Rational e_lower() { return make_rational(2718, 1000); }

// 80 working digits leave a margin far above the one-unit slack at 1e-40.
Rational log_upper(const Rational& x) {
  return Rational(scaled_log_floor(x) + 2, ten_power());
}

Rational log_lower(const Rational& x) {
  return Rational(scaled_log_floor(x) - 1, ten_power());
}

Rational pow(const Rational& base, std::uint64_t exponent) {
  Rational result = 1;
  Rational factor = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= factor;
    factor *= factor;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace ballcover
