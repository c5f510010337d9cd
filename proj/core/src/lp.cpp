#include "ballcover/lp.hpp"

#include <algorithm>

#include <boost/dynamic_bitset.hpp>

#include "ballcover/errors.hpp"
#include "ballcover/simplex.hpp"

namespace ballcover {
namespace {

int vertex_universe(const BallSystem& h) {
  if (h.graph) return h.graph->vertex_count();
  int n = 0;
  for (const auto& ball : h.balls) {
    if (!ball.members.empty()) n = std::max(n, ball.members.back() + 1);
  }
  return n;
}

Rational sum(const std::vector<Rational>& values) {
  Rational total = 0;
  for (const auto& value : values) total += value;
  return total;
}

}  // namespace

LpReduction reduce_for_lp(const BallSystem& h) {
  LpReduction reduction;
  reduction.balls = minimal_ball_indices(h);
  const int n = vertex_universe(h);
  const std::size_t m = reduction.balls.size();

  std::vector<boost::dynamic_bitset<>> signature(n, boost::dynamic_bitset<>(m));
  for (std::size_t j = 0; j < m; ++j) {
    for (Vertex v : h.balls[reduction.balls[j]].members) signature[v].set(j);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (signature[v].none()) continue;
    bool dominated = false;
    for (Vertex u = 0; u < n && !dominated; ++u) {
      if (u == v || !signature[v].is_subset_of(signature[u])) continue;
      dominated = signature[v] != signature[u] || u < v;
    }
    if (!dominated) reduction.vertices.push_back(v);
  }
  reduction.membership.assign(reduction.vertices.size(), std::vector<bool>(m));
  for (std::size_t i = 0; i < reduction.vertices.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      reduction.membership[i][j] = signature[reduction.vertices[i]].test(j);
    }
  }
  return reduction;
}

FractionalSolution solve_nu_star(const BallSystem& h) {
  FractionalSolution solution{LpSide::kMatching, std::vector<Rational>(h.size()), Rational(0)};
  const auto reduction = reduce_for_lp(h);
  if (reduction.balls.empty()) return solution;

  DenseLp lp;
  lp.a.assign(reduction.vertices.size(), std::vector<Rational>(reduction.balls.size()));
  for (std::size_t i = 0; i < reduction.vertices.size(); ++i) {
    for (std::size_t j = 0; j < reduction.balls.size(); ++j) {
      if (reduction.membership[i][j]) lp.a[i][j] = 1;
    }
  }
  lp.b.assign(reduction.vertices.size(), Rational(1));
  lp.c.assign(reduction.balls.size(), Rational(1));
  const auto result = maximize_packing(lp);

  // The row multipliers must form a covering of equal value.
  for (std::size_t j = 0; j < reduction.balls.size(); ++j) {
    Rational coverage = 0;
    for (std::size_t i = 0; i < reduction.vertices.size(); ++i) {
      if (reduction.membership[i][j]) coverage += result.dual[i];
    }
    if (coverage < 1) throw InternalError("nu* dual certificate leaves a ball uncovered");
  }
  if (sum(result.dual) != result.objective) {
    throw InternalError("nu* primal and dual objectives differ");
  }

  for (std::size_t j = 0; j < reduction.balls.size(); ++j) {
    solution.weights[reduction.balls[j]] = result.primal[j];
  }
  solution.objective = result.objective;
  return solution;
}

FractionalSolution solve_tau_star(const BallSystem& h) {
  FractionalSolution solution{LpSide::kTransversal,
                              std::vector<Rational>(vertex_universe(h)), Rational(0)};
  const auto reduction = reduce_for_lp(h);
  if (reduction.balls.empty()) return solution;

  DenseLp lp;
  lp.a.assign(reduction.balls.size(), std::vector<Rational>(reduction.vertices.size()));
  for (std::size_t i = 0; i < reduction.vertices.size(); ++i) {
    for (std::size_t j = 0; j < reduction.balls.size(); ++j) {
      if (reduction.membership[i][j]) lp.a[j][i] = 1;
    }
  }
  lp.b.assign(reduction.balls.size(), Rational(1));
  lp.c.assign(reduction.vertices.size(), Rational(1));
  const auto result = minimize_covering(lp);

  // The row multipliers must form a fractional matching of equal value.
  for (std::size_t i = 0; i < reduction.vertices.size(); ++i) {
    Rational load = 0;
    for (std::size_t j = 0; j < reduction.balls.size(); ++j) {
      if (reduction.membership[i][j]) load += result.dual[j];
    }
    if (load > 1) throw InternalError("tau* dual certificate overloads a vertex");
  }
  if (sum(result.dual) != result.objective) {
    throw InternalError("tau* primal and dual objectives differ");
  }

  for (std::size_t i = 0; i < reduction.vertices.size(); ++i) {
    solution.weights[reduction.vertices[i]] = result.primal[i];
  }
  solution.objective = result.objective;
  return solution;
}

bool is_feasible(const BallSystem& h, const FractionalSolution& w) {
  for (const auto& value : w.weights) {
    if (value < 0) return false;
  }
  if (sum(w.weights) != w.objective) return false;
  if (w.side == LpSide::kMatching) {
    if (w.weights.size() != h.size()) return false;
    std::vector<Rational> load(vertex_universe(h));
    for (std::size_t e = 0; e < h.size(); ++e) {
      if (w.weights[e].is_zero()) continue;
      for (Vertex v : h.balls[e].members) load[v] += w.weights[e];
    }
    return std::all_of(load.begin(), load.end(), [](const Rational& x) { return x <= 1; });
  }
  if (static_cast<int>(w.weights.size()) != vertex_universe(h)) return false;
  for (const auto& ball : h.balls) {
    Rational coverage = 0;
    for (Vertex v : ball.members) coverage += w.weights[v];
    if (coverage < 1) return false;
  }
  return true;
}

FractionalSolution floor_scale_weights(const FractionalSolution& w, std::int64_t n) {
  if (n < 1) throw InputError("floor_scale_weights needs n >= 1");
  FractionalSolution scaled{w.side, {}, Rational(0)};
  scaled.weights.reserve(w.weights.size());
  const Rational denominator(n);
  for (const auto& value : w.weights) {
    scaled.weights.push_back(Rational(floor(value * denominator)) / denominator);
    scaled.objective += scaled.weights.back();
  }
  return scaled;
}

}  // namespace ballcover
