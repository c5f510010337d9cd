#pragma once

#include <cstdint>
#include <random>

namespace ballcover {

// All randomness in the library flows through this generator. The 64-bit
// seed is expanded with splitmix64 and fed to std::mt19937_64, whose output
// sequence is fixed by the standard. Bounded draws use rejection sampling so
// streams are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);

  // True with probability numerator/denominator.
  bool bernoulli(std::uint64_t numerator, std::uint64_t denominator);

  // Uniform in [0, 1) with 53 random bits.
  double unit();

  template <typename It>
  void shuffle(It first, It last) {
    const auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) {
      const auto j = uniform(i);
      using std::swap;
      swap(first[i - 1], first[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace ballcover
