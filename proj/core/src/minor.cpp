#include "ballcover/minor.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace ballcover {
namespace {

std::string pair_name(const BallPair& pair) {
  return "{" + std::to_string(pair.first) + ", " + std::to_string(pair.second) + "}";
}

MinorVerification fail(std::string clause, std::string detail, std::vector<Vertex> witnesses) {
  return {false, std::move(clause), std::move(detail), std::move(witnesses)};
}

std::vector<BallPair> normalize_pattern(std::span<const BallPair> pattern_edges,
                                        std::size_t ball_count) {
  std::set<BallPair> seen;
  std::vector<BallPair> out;
  for (auto [i, j] : pattern_edges) {
    if (i == j || i >= ball_count || j >= ball_count) {
      throw InputError("pattern edge " + pair_name({i, j}) + " is not a pair of system balls");
    }
    if (i > j) std::swap(i, j);
    if (!seen.emplace(i, j).second) {
      throw InputError("pattern edge " + pair_name({i, j}) + " listed twice");
    }
    out.emplace_back(i, j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Trees of lexicographically least shortest paths from each center to the
// anchors of its pattern edges, contracted to branch sets. anchors[e] is the
// shared endpoint x_ij of pattern edge e.
MinorModel contract_path_trees(const Graph& host, const BallSystem& balls,
                               const std::vector<BallPair>& edges,
                               const std::vector<Vertex>& anchors) {
  const std::size_t n = balls.size();
  std::vector<std::vector<int>> from_center(n);
  for (std::size_t i = 0; i < n; ++i) from_center[i] = bfs_distances(host, balls[i].center);

  // tree_parent[i] maps each vertex of T_i to its parent (root -> itself).
  std::vector<std::map<Vertex, Vertex>> tree_parent(n);
  std::vector<std::map<Vertex, int>> tree_degree(n);
  for (std::size_t i = 0; i < n; ++i) {
    tree_parent[i][balls[i].center] = balls[i].center;
    tree_degree[i][balls[i].center] = 0;
  }
  auto add_path = [&](std::size_t i, Vertex anchor) {
    const auto to_anchor = bfs_distances(host, anchor);
    const auto path = lex_min_shortest_path(host, balls[i].center, anchor, from_center[i], to_anchor);
    for (std::size_t s = 1; s < path.vertices.size(); ++s) {
      const Vertex parent = path.vertices[s - 1];
      const Vertex child = path.vertices[s];
      auto [it, inserted] = tree_parent[i].emplace(child, parent);
      if (!inserted) {
        if (it->second != parent) {
          throw InternalError("paths of tree " + std::to_string(i) + " reach vertex " +
                              std::to_string(child) + " through different parents");
        }
        continue;
      }
      ++tree_degree[i][parent];
      tree_degree[i][child] = 1;
    }
  };
  for (std::size_t e = 0; e < edges.size(); ++e) {
    add_path(edges[e].first, anchors[e]);
    add_path(edges[e].second, anchors[e]);
  }

  // Trees may only meet at the anchor of a pattern edge joining them.
  std::map<Vertex, std::vector<std::size_t>> owners;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& entry : tree_parent[i]) owners[entry.first].push_back(i);
  }
  std::map<BallPair, Vertex> anchor_of;
  for (std::size_t e = 0; e < edges.size(); ++e) anchor_of[edges[e]] = anchors[e];
  for (const auto& [v, trees] : owners) {
    if (trees.size() == 1) continue;
    const auto it = trees.size() == 2 ? anchor_of.find({trees[0], trees[1]}) : anchor_of.end();
    if (it == anchor_of.end() || it->second != v) {
      throw InternalError("trees of balls " + std::to_string(trees[0]) + " and " +
                          std::to_string(trees[1]) + " share vertex " + std::to_string(v));
    }
  }

  auto is_leaf = [&](std::size_t i, Vertex v) {
    return v != balls[i].center && tree_degree[i].at(v) == 1;
  };

  MinorModel model;
  std::vector<Edge> pattern_edges;
  for (const auto& [i, j] : edges) {
    pattern_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  model.pattern = Graph::from_edges(static_cast<int>(n), pattern_edges);
  model.branch_sets.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& entry : tree_parent[i]) {
      if (!is_leaf(i, entry.first)) model.branch_sets[i].push_back(entry.first);
    }
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [i, j] = edges[e];
    const Vertex x = anchors[e];
    const bool leaf_i = is_leaf(i, x);
    const bool leaf_j = is_leaf(j, x);
    if (!leaf_i && !leaf_j) {
      throw InternalError("anchor " + std::to_string(x) + " of pattern edge " +
                          pair_name(edges[e]) + " is interior to both trees");
    }
    PathInGraph path;
    if (!leaf_i) {
      path.vertices = {x, tree_parent[j].at(x)};
    } else if (!leaf_j) {
      path.vertices = {tree_parent[i].at(x), x};
    } else {
      // Leaf of both trees: joins the lower-index branch set.
      model.branch_sets[i].push_back(x);
      path.vertices = {x, tree_parent[j].at(x)};
    }
    model.edge_paths.push_back(std::move(path));
  }
  for (auto& set : model.branch_sets) std::sort(set.begin(), set.end());

  const auto report = verify_minor_model(host, model, 1);
  if (!report) {
    throw InternalError("constructed minor model fails verification: " + report.clause + " (" +
                        report.detail + ")");
  }
  return model;
}

void require_distinct_centers(const BallSystem& balls) {
  std::set<Vertex> centers;
  for (const auto& ball : balls.balls) {
    if (!centers.insert(ball.center).second) {
      throw InputError("two balls share center " + std::to_string(ball.center));
    }
  }
}

}  // namespace

DensityWitnessError::DensityWitnessError(DensityWitness witness)
    : Error(ErrorKind::kDensityWitness, witness.reason), witness_(std::move(witness)) {}

Rational average_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw InputError("average degree of the empty graph");
  return Rational(2 * static_cast<std::int64_t>(g.edge_count()),
                  static_cast<std::int64_t>(g.vertex_count()));
}

MinorVerification verify_minor_model(const Graph& host, const MinorModel& model,
                                     std::optional<std::size_t> max_interior) {
  const int pattern_size = model.pattern.vertex_count();
  if (static_cast<int>(model.branch_sets.size()) != pattern_size) {
    return fail("pattern-size",
                std::to_string(model.branch_sets.size()) + " branch sets for " +
                    std::to_string(pattern_size) + " pattern vertices",
                {});
  }
  std::vector<int> owner(host.vertex_count(), -1);
  for (int p = 0; p < pattern_size; ++p) {
    const auto& set = model.branch_sets[p];
    if (set.empty()) return fail("branch-set", "branch set " + std::to_string(p) + " is empty", {});
    for (Vertex v : set) {
      if (!host.contains(v)) {
        return fail("branch-set", "vertex outside the host in branch set " + std::to_string(p), {v});
      }
      if (owner[v] == p) {
        return fail("branch-set", "vertex repeated in branch set " + std::to_string(p), {v});
      }
      if (owner[v] >= 0) {
        return fail("disjointness",
                    "branch sets " + std::to_string(owner[v]) + " and " + std::to_string(p) +
                        " overlap",
                    {v});
      }
      owner[v] = p;
    }
  }
  for (int p = 0; p < pattern_size; ++p) {
    const auto& set = model.branch_sets[p];
    std::set<Vertex> reached{set.front()};
    std::deque<Vertex> queue{set.front()};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : host.neighbors(u)) {
        if (owner[w] == p && reached.insert(w).second) queue.push_back(w);
      }
    }
    if (reached.size() != set.size()) {
      return fail("connectivity", "branch set " + std::to_string(p) + " is not connected",
                  {set.front()});
    }
  }

  const auto pattern_edges = model.pattern.edges();
  if (model.edge_paths.size() != pattern_edges.size()) {
    return fail("edge-realization",
                std::to_string(model.edge_paths.size()) + " edge paths for " +
                    std::to_string(pattern_edges.size()) + " pattern edges",
                {});
  }
  std::vector<int> interior_owner(host.vertex_count(), -1);
  for (std::size_t e = 0; e < pattern_edges.size(); ++e) {
    const auto [u, v] = pattern_edges[e];
    const auto& path = model.edge_paths[e].vertices;
    const std::string name = "pattern edge (" + std::to_string(u) + ", " + std::to_string(v) + ")";
    if (path.empty()) return fail("edge-realization", name + " has an empty path", {});
    for (Vertex w : path) {
      if (!host.contains(w)) return fail("edge-realization", name + " leaves the host", {w});
    }
    for (std::size_t s = 1; s < path.size(); ++s) {
      if (!host.adjacent(path[s - 1], path[s])) {
        return fail("edge-realization", name + " uses a non-edge", {path[s - 1], path[s]});
      }
    }
    std::set<Vertex> distinct(path.begin(), path.end());
    if (distinct.size() != path.size()) {
      return fail("edge-realization", name + " repeats a vertex", {});
    }
    const bool forward = owner[path.front()] == u && owner[path.back()] == v;
    const bool backward = owner[path.front()] == v && owner[path.back()] == u;
    if (path.size() < 2 || (!forward && !backward)) {
      return fail("edge-realization", name + " does not join its branch sets",
                  {path.front(), path.back()});
    }
    if (max_interior && path.size() - 2 > *max_interior) {
      return fail("subdivision", name + " has " + std::to_string(path.size() - 2) +
                                     " interior vertices",
                  {});
    }
    for (std::size_t s = 1; s + 1 < path.size(); ++s) {
      const Vertex w = path[s];
      if (owner[w] >= 0) {
        return fail("interior-disjointness", name + " passes through branch set " +
                                                 std::to_string(owner[w]),
                    {w});
      }
      if (interior_owner[w] >= 0) {
        return fail("interior-disjointness", name + " shares an interior vertex", {w});
      }
      interior_owner[w] = static_cast<int>(e);
    }
  }
  return {};
}

MinorModel minor_from_medians(const Graph& host, const BallSystem& balls,
                              std::span<const BallPair> pattern_edges,
                              const std::map<BallPair, Vertex>& medians) {
  const auto edges = normalize_pattern(pattern_edges, balls.size());
  require_distinct_centers(balls);
  for (std::size_t a = 0; a < balls.size(); ++a) {
    for (std::size_t b = a + 1; b < balls.size(); ++b) {
      if (comparable(balls[a], balls[b])) {
        throw InputError("balls " + std::to_string(a) + " and " + std::to_string(b) +
                         " are comparable");
      }
    }
  }
  std::vector<Vertex> anchors;
  for (const auto& pair : edges) {
    const auto it = medians.find(pair);
    if (it == medians.end()) throw InputError("no median for pattern edge " + pair_name(pair));
    const Vertex x = it->second;
    if (!host.contains(x)) throw InputError("median of " + pair_name(pair) + " out of range");
    const Ball& bi = balls[pair.first];
    const Ball& bj = balls[pair.second];
    if (!intersects(bi, bj)) throw InputError("pattern edge " + pair_name(pair) + " joins disjoint balls");
    const auto from_i = bfs_distances(host, bi.center);
    const auto from_j = bfs_distances(host, bj.center);
    const int d = from_i[bj.center];
    const int a = from_i[x];
    const int b = from_j[x];
    const int twice_low = bi.radius - bj.radius + d;  // 2 * distance from s_i, before rounding
    const int low = twice_low >= 0 ? twice_low / 2 : -((-twice_low + 1) / 2);
    const int high = low + (twice_low % 2 != 0 ? 1 : 0);
    if (a == kUnreachable || a + b != d || (a != low && a != high)) {
      throw InputError("vertex " + std::to_string(x) + " is not a median of " + pair_name(pair));
    }
    for (std::size_t k = 0; k < balls.size(); ++k) {
      if (k != pair.first && k != pair.second && balls[k].contains(x)) {
        throw InputError("median of " + pair_name(pair) + " also lies in ball " + std::to_string(k));
      }
    }
    anchors.push_back(x);
  }
  return contract_path_trees(host, balls, edges, anchors);
}

std::optional<Ball> minimal_connector(const Graph& host, const BallSystem& balls,
                                      std::size_t i, std::size_t j) {
  std::vector<std::vector<int>> to_ball(balls.size());
  for (std::size_t k = 0; k < balls.size(); ++k) {
    to_ball[k] = multi_source_distances(host, balls[k].members);
  }
  std::optional<Ball> best;
  for (Vertex c = 0; c < host.vertex_count(); ++c) {
    const int di = to_ball[i][c];
    const int dj = to_ball[j][c];
    if (di == kUnreachable || dj == kUnreachable) continue;
    const int radius = std::max(di, dj);
    if (best && radius >= best->radius) continue;
    bool clean = true;
    for (std::size_t k = 0; k < balls.size() && clean; ++k) {
      if (k == i || k == j) continue;
      clean = to_ball[k][c] == kUnreachable || to_ball[k][c] > radius;
    }
    if (clean) best = Ball{c, radius, {}};
  }
  if (best) *best = make_ball(host, best->center, best->radius);
  return best;
}

MinorModel minor_from_connectors(const Graph& host, const BallSystem& balls,
                                 std::span<const BallPair> pattern_edges,
                                 const std::map<BallPair, Ball>& connectors) {
  const auto edges = normalize_pattern(pattern_edges, balls.size());
  if (!balls.empty()) {
    std::vector<std::size_t> all(balls.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    if (!is_matching(balls, all)) throw InputError("connector construction needs disjoint balls");
  }

  std::vector<Vertex> anchors;
  for (const auto& pair : edges) {
    const auto it = connectors.find(pair);
    if (it == connectors.end()) throw InputError("no connector for pattern edge " + pair_name(pair));
    for (std::size_t k = 0; k < balls.size(); ++k) {
      const bool meets = intersects(it->second, balls[k]);
      const bool expected = k == pair.first || k == pair.second;
      if (meets != expected) {
        throw InputError("connector of " + pair_name(pair) +
                         (meets ? " meets ball " : " misses ball ") + std::to_string(k));
      }
    }
    auto connector = minimal_connector(host, balls, pair.first, pair.second);
    if (!connector) throw InternalError("no minimal connector for " + pair_name(pair));

    // Keep r_i + r_ij - 1 <= d(s_i, x_ij) <= r_i + r_ij on both sides.
    const Ball& bi = balls[pair.first];
    const Ball& bj = balls[pair.second];
    Vertex x = connector->center;
    int radius = connector->radius;
    for (bool moved = true; moved;) {
      moved = false;
      const auto from_i = bfs_distances(host, bi.center);
      const auto from_j = bfs_distances(host, bj.center);
      if (from_i[x] < bi.radius + radius - 1) {
        x = lex_min_shortest_path(host, bj.center, x).vertices.rbegin()[1];
        --radius;
        moved = true;
      } else if (from_j[x] < bj.radius + radius - 1) {
        x = lex_min_shortest_path(host, bi.center, x).vertices.rbegin()[1];
        --radius;
        moved = true;
      } else if (from_i[x] > bi.radius + radius || from_j[x] > bj.radius + radius) {
        throw InternalError("connector of " + pair_name(pair) + " does not reach its balls");
      }
    }
    anchors.push_back(x);
  }
  return contract_path_trees(host, balls, edges, anchors);
}

}  // namespace ballcover
