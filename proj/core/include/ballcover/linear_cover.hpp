#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ballcover/approx.hpp"
#include "ballcover/ball.hpp"
#include "ballcover/exact.hpp"
#include "ballcover/rational.hpp"

namespace ballcover {

struct CoverLevelStats {
  std::size_t depth = 0;
  std::size_t balls = 0;          // after minimalize
  std::size_t matching = 0;       // final |B| at this level
  std::size_t small_edges = 0;    // packing edges with |e| <= 3d/2
  std::size_t augmentations = 0;
  std::size_t e1_transversal = 0;
  std::size_t e2_balls = 0;
  std::size_t sampling_fallbacks = 0;
  std::size_t rounding_fallbacks = 0;  // exact search used after rounding
};

struct CoverCertificate {
  std::vector<Vertex> transversal;  // ascending
  std::vector<std::size_t> matching;  // ascending indices into the input system
  Rational ratio_bound;
  std::vector<CoverLevelStats> levels;

  bool any_sampling_fallback() const;
};

struct LinearCoverOptions {
  std::size_t trial_budget = 100;
  SearchBudget exact_budget{};
};

// Recursive cover: greedy matching, augmentation on small packing edges,
// near-linear covers of the small pieces, recursion on the balls meeting
// more than 3d/2 matching balls. Throws DensityWitnessError when the input
// contradicts the declared density, BudgetExceeded from exact fallbacks or
// the augmentation cap.
CoverCertificate linear_cover(const BallSystem& h, const DensityProfile& profile,
                              std::uint64_t seed, const LinearCoverOptions& options = {});

}  // namespace ballcover
