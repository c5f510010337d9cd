#include "ballcover/exact.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include <boost/dynamic_bitset.hpp>

#include "ballcover/errors.hpp"
#include "ballcover/lp.hpp"

namespace ballcover {
namespace {

using Bits = boost::dynamic_bitset<>;

// Maximum independent set of the intersection graph of a minimal system.
class MatchingSearch {
 public:
  MatchingSearch(const BallSystem& minimal, std::size_t stop_at, SearchBudget budget)
      : m_(minimal.size()), stop_at_(stop_at), budget_(budget) {
    int n = 0;
    for (const auto& ball : minimal.balls) {
      if (!ball.members.empty()) n = std::max(n, ball.members.back() + 1);
    }
    std::vector<Bits> members(m_, Bits(n));
    vertex_balls_.assign(n, Bits(m_));
    for (std::size_t j = 0; j < m_; ++j) {
      for (Vertex v : minimal.balls[j].members) {
        members[j].set(v);
        vertex_balls_[v].set(j);
      }
    }
    ball_members_.resize(m_);
    for (std::size_t j = 0; j < m_; ++j) {
      ball_members_[j] = minimal.balls[j].members;
    }
    closed_neighborhood_.assign(m_, Bits(m_));
    for (std::size_t i = 0; i < m_; ++i) {
      closed_neighborhood_[i].set(i);
      for (std::size_t j = i + 1; j < m_; ++j) {
        if (members[i].intersects(members[j])) {
          closed_neighborhood_[i].set(j);
          closed_neighborhood_[j].set(i);
        }
      }
    }
  }

  std::vector<std::size_t> run() {
    seed_with_greedy();
    if (best_.size() < stop_at_) {
      Bits candidates(m_);
      candidates.set();
      std::vector<std::size_t> current;
      search(candidates, current);
    }
    return best_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void seed_with_greedy() {
    Bits candidates(m_);
    candidates.set();
    std::vector<std::size_t> chosen;
    while (candidates.any()) {
      std::size_t pick = candidates.find_first();
      std::size_t pick_degree = (closed_neighborhood_[pick] & candidates).count();
      for (auto j = candidates.find_next(pick); j != Bits::npos; j = candidates.find_next(j)) {
        const auto degree = (closed_neighborhood_[j] & candidates).count();
        if (degree < pick_degree) {
          pick = j;
          pick_degree = degree;
        }
      }
      chosen.push_back(pick);
      candidates -= closed_neighborhood_[pick];
    }
    best_ = chosen;
  }

  // Balls sharing a vertex form a clique, so covering the candidates with
  // vertex stars bounds the independent sets among them.
  std::size_t clique_cover_bound(Bits remaining) const {
    std::size_t cliques = 0;
    while (remaining.any()) {
      const std::size_t anchor = remaining.find_first();
      std::size_t best_cover = 0;
      const Bits* best_star = nullptr;
      for (Vertex v : ball_members_[anchor]) {
        const auto cover = (vertex_balls_[v] & remaining).count();
        if (cover > best_cover) {
          best_cover = cover;
          best_star = &vertex_balls_[v];
        }
      }
      remaining -= *best_star;
      ++cliques;
    }
    return cliques;
  }

  bool done() const { return best_.size() >= stop_at_; }

  void search(const Bits& candidates, std::vector<std::size_t>& current) {
    if (++nodes_ > budget_.max_nodes) {
      throw BudgetExceeded("exact matching search exceeded its node budget",
                           static_cast<std::int64_t>(best_.size()));
    }
    if (candidates.none()) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    if (current.size() + clique_cover_bound(candidates) <= best_.size()) return;

    // Some optimum contains the minimum-degree candidate or a neighbor of it.
    std::size_t pivot = candidates.find_first();
    std::size_t pivot_degree = (closed_neighborhood_[pivot] & candidates).count();
    for (auto j = candidates.find_next(pivot); j != Bits::npos; j = candidates.find_next(j)) {
      const auto degree = (closed_neighborhood_[j] & candidates).count();
      if (degree < pivot_degree) {
        pivot = j;
        pivot_degree = degree;
      }
    }
    Bits branch = closed_neighborhood_[pivot] & candidates;
    Bits remaining = candidates;
    for (auto j = branch.find_first(); j != Bits::npos; j = branch.find_next(j)) {
      current.push_back(j);
      search(remaining - closed_neighborhood_[j], current);
      current.pop_back();
      if (done()) return;
      remaining.reset(j);
    }
  }

  std::size_t m_;
  std::size_t stop_at_;
  SearchBudget budget_;
  std::vector<Bits> vertex_balls_;
  std::vector<std::vector<Vertex>> ball_members_;
  std::vector<Bits> closed_neighborhood_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
};

ExactMatching run_matching_search(const BallSystem& h, std::size_t stop_at,
                                  SearchBudget budget) {
  const auto kept = minimal_ball_indices(h);
  const auto minimal = h.subsystem(kept);
  MatchingSearch search(minimal, stop_at, budget);
  const auto found = search.run();
  ExactMatching result;
  for (std::size_t j : found) result.balls.push_back(kept[j]);
  std::sort(result.balls.begin(), result.balls.end());
  result.size = result.balls.size();
  result.nodes = search.nodes();
  if (!is_matching(h, result.balls)) throw InternalError("exact_nu certificate is not a matching");
  return result;
}

// Minimum hitting set over the LP-reduced system.
class TransversalSearch {
 public:
  TransversalSearch(const LpReduction& reduction, SearchBudget budget)
      : balls_(reduction.balls.size()), budget_(budget) {
    const std::size_t n = reduction.vertices.size();
    vertex_balls_.assign(n, Bits(balls_));
    ball_vertices_.resize(balls_);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < balls_; ++j) {
        if (reduction.membership[i][j]) {
          vertex_balls_[i].set(j);
          ball_vertices_[j].push_back(i);
        }
      }
    }
    ball_neighbors_.assign(balls_, Bits(balls_));
    for (std::size_t j = 0; j < balls_; ++j) {
      for (std::size_t i : ball_vertices_[j]) ball_neighbors_[j] |= vertex_balls_[i];
    }
  }

  std::vector<std::size_t> run(std::size_t lower_bound) {
    best_ = greedy();
    if (best_.size() <= lower_bound) return best_;
    lower_bound_ = lower_bound;
    Bits unhit(balls_);
    unhit.set();
    Bits forbidden(vertex_balls_.size());
    std::vector<std::size_t> chosen;
    search(unhit, forbidden, chosen);
    return best_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::vector<std::size_t> greedy() const {
    Bits unhit(balls_);
    unhit.set();
    std::vector<std::size_t> chosen;
    while (unhit.any()) {
      std::size_t pick = 0;
      std::size_t pick_cover = 0;
      for (std::size_t i = 0; i < vertex_balls_.size(); ++i) {
        const auto cover = (vertex_balls_[i] & unhit).count();
        if (cover > pick_cover) {
          pick = i;
          pick_cover = cover;
        }
      }
      chosen.push_back(pick);
      unhit -= vertex_balls_[pick];
    }
    return chosen;
  }

  // Pairwise disjoint unhit balls each need their own vertex.
  std::size_t packing_bound(Bits remaining) const {
    std::size_t packed = 0;
    while (remaining.any()) {
      const auto j = remaining.find_first();
      remaining -= ball_neighbors_[j];
      ++packed;
    }
    return packed;
  }

  void search(const Bits& unhit, Bits forbidden, std::vector<std::size_t>& chosen) {
    if (++nodes_ > budget_.max_nodes) {
      throw BudgetExceeded("exact transversal search exceeded its node budget",
                           static_cast<std::int64_t>(best_.size()));
    }
    if (unhit.none()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + packing_bound(unhit) >= best_.size()) return;

    // Branch on the unhit ball with the fewest allowed vertices.
    std::size_t target = Bits::npos;
    std::size_t target_options = 0;
    for (auto j = unhit.find_first(); j != Bits::npos; j = unhit.find_next(j)) {
      std::size_t options = 0;
      for (std::size_t i : ball_vertices_[j]) options += forbidden.test(i) ? 0 : 1;
      if (target == Bits::npos || options < target_options) {
        target = j;
        target_options = options;
      }
    }
    if (target_options == 0) return;

    std::vector<std::pair<std::size_t, std::size_t>> options;  // (-cover, vertex)
    for (std::size_t i : ball_vertices_[target]) {
      if (!forbidden.test(i)) options.emplace_back((vertex_balls_[i] & unhit).count(), i);
    }
    std::sort(options.begin(), options.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (const auto& [cover, i] : options) {
      chosen.push_back(i);
      search(unhit - vertex_balls_[i], forbidden, chosen);
      chosen.pop_back();
      if (best_.size() <= lower_bound_) return;
      forbidden.set(i);
    }
  }

  std::size_t balls_;
  SearchBudget budget_;
  std::vector<Bits> vertex_balls_;
  std::vector<std::vector<std::size_t>> ball_vertices_;
  std::vector<Bits> ball_neighbors_;
  std::vector<std::size_t> best_;
  std::size_t lower_bound_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ExactMatching exact_nu(const BallSystem& h, SearchBudget budget) {
  if (h.empty()) return {};
  const auto nu_star = solve_nu_star(h);
  const auto ceiling = static_cast<std::size_t>(floor(nu_star.objective));
  return run_matching_search(h, ceiling, budget);
}

ExactMatching find_matching_of_size(const BallSystem& h, std::size_t target,
                                    SearchBudget budget) {
  if (h.empty() || target == 0) return {};
  return run_matching_search(h, target, budget);
}

ExactTransversal exact_tau(const BallSystem& h, SearchBudget budget) {
  if (h.empty()) return {};
  const auto reduction = reduce_for_lp(h);
  const auto tau_star = solve_tau_star(h);
  const auto lower = static_cast<std::size_t>(ceil(tau_star.objective));
  TransversalSearch search(reduction, budget);
  const auto found = search.run(lower);
  ExactTransversal result;
  for (std::size_t i : found) result.vertices.push_back(reduction.vertices[i]);
  std::sort(result.vertices.begin(), result.vertices.end());
  result.size = result.vertices.size();
  result.nodes = search.nodes();
  if (!is_transversal(h, result.vertices)) {
    throw InternalError("exact_tau certificate misses a ball");
  }
  return result;
}

}  // namespace ballcover
