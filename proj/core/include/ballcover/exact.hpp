#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ballcover/ball.hpp"

namespace ballcover {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct SearchBudget {
  std::uint64_t max_nodes = kDefaultNodeBudget;
};

struct ExactMatching {
  std::size_t size = 0;
  std::vector<std::size_t> balls;  // ascending indices into the input system
  std::uint64_t nodes = 0;
};

struct ExactTransversal {
  std::size_t size = 0;
  std::vector<Vertex> vertices;  // ascending
  std::uint64_t nodes = 0;
};

// Maximum matching by branch and bound over the intersection graph, bounded
// by the LP optimum and by greedy clique covers. Throws BudgetExceeded with
// the best size found.
ExactMatching exact_nu(const BallSystem& h, SearchBudget budget = {});

// Stops as soon as a matching of at least `target` balls is found (or
// proves none). The result is a maximum matching when it has fewer than
// `target` balls.
ExactMatching find_matching_of_size(const BallSystem& h, std::size_t target,
                                    SearchBudget budget = {});

// Minimum transversal by branch and bound, bounded below by ceil(tau*) and
// by greedy disjoint packings. Throws BudgetExceeded with the best size
// found.
ExactTransversal exact_tau(const BallSystem& h, SearchBudget budget = {});

// Largest shattered vertex set, grown level by level. An edgeless system has
// VC-dimension 0 by convention. Throws BudgetExceeded (best = largest
// shattered size seen).
std::size_t vc_dimension(const BallSystem& h, SearchBudget budget = {});

}  // namespace ballcover
