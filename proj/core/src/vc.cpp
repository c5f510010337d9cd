#include <algorithm>
#include <set>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ballcover/errors.hpp"
#include "ballcover/exact.hpp"

namespace ballcover {
namespace {

using Bits = boost::dynamic_bitset<>;

bool shattered(const std::vector<Bits>& edges, const std::vector<Vertex>& set) {
  const std::size_t patterns = std::size_t{1} << set.size();
  if (edges.size() < patterns) return false;
  std::vector<bool> seen(patterns, false);
  std::size_t distinct = 0;
  for (const auto& edge : edges) {
    std::size_t mask = 0;
    for (std::size_t b = 0; b < set.size(); ++b) {
      if (edge.test(set[b])) mask |= std::size_t{1} << b;
    }
    if (!seen[mask]) {
      seen[mask] = true;
      if (++distinct == patterns) return true;
    }
  }
  return false;
}

}  // namespace

std::size_t vc_dimension(const BallSystem& h, SearchBudget budget) {
  if (h.empty()) return 0;
  int n = 0;
  for (const auto& ball : h.balls) {
    if (!ball.members.empty()) n = std::max(n, ball.members.back() + 1);
  }
  // Distinct member sets only; repeats never help shatter.
  std::set<std::vector<Vertex>> distinct;
  for (const auto& ball : h.balls) distinct.insert(ball.members);
  std::vector<Bits> edges;
  for (const auto& members : distinct) {
    Bits bits(n);
    for (Vertex v : members) bits.set(v);
    edges.push_back(std::move(bits));
  }

  std::uint64_t checks = 0;
  std::vector<Vertex> candidates;
  std::vector<std::vector<Vertex>> level;
  for (Vertex v = 0; v < n; ++v) {
    const std::vector<Vertex> single{v};
    ++checks;
    if (shattered(edges, single)) {
      candidates.push_back(v);
      level.push_back(single);
    }
  }
  std::size_t dimension = level.empty() ? 0 : 1;

  while (!level.empty()) {
    const std::size_t next_size = level.front().size() + 1;
    if (next_size >= 63 || (std::size_t{1} << next_size) > edges.size()) break;
    const std::set<std::vector<Vertex>> known(level.begin(), level.end());
    std::vector<std::vector<Vertex>> next;
    for (const auto& set : level) {
      auto start = std::upper_bound(candidates.begin(), candidates.end(), set.back());
      for (auto it = start; it != candidates.end(); ++it) {
        std::vector<Vertex> grown(set);
        grown.push_back(*it);
        // Subsets of a shattered set are shattered.
        bool hereditary = true;
        for (std::size_t drop = 0; drop + 1 < grown.size() && hereditary; ++drop) {
          std::vector<Vertex> subset;
          for (std::size_t b = 0; b < grown.size(); ++b) {
            if (b != drop) subset.push_back(grown[b]);
          }
          hereditary = known.count(subset) > 0;
        }
        if (!hereditary) continue;
        if (++checks > budget.max_nodes) {
          throw BudgetExceeded("VC-dimension search exceeded its budget",
                               static_cast<std::int64_t>(dimension));
        }
        if (shattered(edges, grown)) next.push_back(std::move(grown));
      }
    }
    if (next.empty()) break;
    dimension = next_size;
    level = std::move(next);
  }
  return dimension;
}

}  // namespace ballcover
