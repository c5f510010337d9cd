#include <charconv>
#include <string>

#include "ballcover/errors.hpp"
#include "ballcover/random.hpp"
#include "ballcover/rational.hpp"

namespace ballcover {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInput: return "INPUT";
    case ErrorKind::kPrecondition: return "PRECONDITION";
    case ErrorKind::kNoPath: return "NO_PATH";
    case ErrorKind::kBudget: return "BUDGET";
    case ErrorKind::kEmpty: return "EMPTY";
    case ErrorKind::kDensityWitness: return "DENSITY_WITNESS";
    case ErrorKind::kInternal: return "INTERNAL";
  }
  return "UNKNOWN";
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && text.front() == '-') text.remove_prefix(1);
  if (text.empty()) return false;
  for (char ch : text) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  BigInt num{std::string(num_text)};
  if (slash == std::string_view::npos) return Rational(num);
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text) || den_text.front() == '-') {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  BigInt den{std::string(den_text)};
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

BigInt floor(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  BigInt quotient = num / den;  // truncates toward zero
  if (num < 0 && quotient * den != num) quotient -= 1;
  return quotient;
}

BigInt ceil(const Rational& value) { return -floor(-value); }

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) {
  std::uint64_t state = seed;
  engine_.seed(splitmix64(state));
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
  // Reject the low end so that every residue class is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

bool Rng::bernoulli(std::uint64_t numerator, std::uint64_t denominator) {
  return uniform(denominator) < numerator;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

}  // namespace ballcover
