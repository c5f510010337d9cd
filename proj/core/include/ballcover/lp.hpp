#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ballcover/ball.hpp"
#include "ballcover/rational.hpp"

namespace ballcover {

enum class LpSide { kMatching, kTransversal };

// Matching side: one weight per ball. Transversal side: one weight per host
// vertex.
struct FractionalSolution {
  LpSide side = LpSide::kMatching;
  std::vector<Rational> weights;
  Rational objective;
};

// The LP actually handed to the simplex: minimal balls with distinct member
// sets, and the vertices whose ball-membership sets are nonempty and
// maximal (one representative per distinct set).
struct LpReduction {
  std::vector<std::size_t> balls;
  std::vector<Vertex> vertices;
  // membership[i][j] is true when vertices[i] lies in balls[j].
  std::vector<std::vector<bool>> membership;
};

LpReduction reduce_for_lp(const BallSystem& h);

// Fractional matching number with an optimal weighting of the balls.
FractionalSolution solve_nu_star(const BallSystem& h);

// Fractional transversal number with an optimal weighting of the vertices.
// Computed by an independent (dual simplex) route; the objective is checked
// against the packing certificate read from the same tableau.
FractionalSolution solve_tau_star(const BallSystem& h);

// Nonnegativity, per-side constraints and objective == sum of weights.
bool is_feasible(const BallSystem& h, const FractionalSolution& w);

// Each weight becomes floor(n * w) / n.
FractionalSolution floor_scale_weights(const FractionalSolution& w, std::int64_t n);

}  // namespace ballcover
