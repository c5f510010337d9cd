#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "ballcover/ball.hpp"
#include "ballcover/lp.hpp"
#include "ballcover/rational.hpp"

namespace ballcover {

// d bounds the average degree of every minor of the host; t is the
// excluded clique-minor order (VC-dimension at most t - 1).
struct DensityProfile {
  Rational d{6};
  int t = 5;

  static DensityProfile planar() { return {Rational(6), 5}; }

  int delta() const { return t - 1; }
  // Throws InputError unless d >= 1 and t >= 2.
  void validate() const;
};

// Minimum-degree greedy: pick the lowest-identifier vertex of minimum
// degree, delete its closed neighborhood, repeat.
std::vector<Vertex> caro_wei_independent_set(const Graph& g);

struct RoundedMatching {
  std::vector<std::size_t> balls;  // ascending indices into the input system
  std::int64_t p = 0;              // size of the scaled multiset
  std::int64_t q = 0;              // common denominator of the scaled weights
  BigInt guaranteed;               // ceil(p / (e_upper d q + 1))
};

// Rounds a feasible fractional matching of a minimalized system to a
// matching of size at least ceil(p / (e d q + 1)). Throws InputError on an
// infeasible w and DensityWitnessError when the multiset intersection graph
// is denser than e d q.
RoundedMatching round_fractional_matching(const BallSystem& h, const FractionalSolution& w,
                                          const DensityProfile& profile);

struct SampledTransversal {
  std::vector<Vertex> vertices;  // ascending
  bool fallback = false;
  std::size_t trials = 0;
  std::int64_t sample_size = 0;  // ceil(2 delta tau* log(11 tau*))
};

// ceil(2 delta tau* log(11 tau*)) computed with an upper bound on the log.
std::int64_t sampling_size(const Rational& tau_star, int delta);

// Draws sample_size vertices i.i.d. from w_v / tau* per trial and returns the
// first trial hitting every ball; falls back to greedy_set_cover once
// `trial_budget` trials fail.
SampledTransversal transversal_by_sampling(const BallSystem& h, const FractionalSolution& w,
                                           const DensityProfile& profile, std::uint64_t seed,
                                           std::size_t trial_budget = 100);

// Repeatedly takes the vertex hitting the most unhit balls (lowest id).
std::vector<Vertex> greedy_set_cover(const BallSystem& h);

// tau* followed by transversal_by_sampling.
SampledTransversal near_linear_transversal(const BallSystem& h, const DensityProfile& profile,
                                           std::uint64_t seed, std::size_t trial_budget = 100);

struct CoverConstants {
  // Upper bound on 2 e (t-1) d nu log(11 e d nu).
  std::function<Rational(const Rational&)> f;
  // Upper bound on 2 (1 + 3/2 d^2 e)^(3d/2) f(3d/2); the exponent is rounded
  // up to an integer.
  Rational c;
};

CoverConstants constants(const DensityProfile& profile);

}  // namespace ballcover
