#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "ballcover/errors.hpp"
#include "ballcover/graph.hpp"
#include "ballcover/random.hpp"

namespace ballcover {
namespace {

int grid_id(int r, int c, int cols) { return r * cols + c; }

std::vector<Edge> grid_edges(int rows, int cols, bool diagonals) {
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = grid_id(r, c, cols);
      if (c + 1 < cols) edges.emplace_back(v, grid_id(r, c + 1, cols));
      if (r + 1 < rows) edges.emplace_back(v, grid_id(r + 1, c, cols));
      if (diagonals && r + 1 < rows && c + 1 < cols) {
        edges.emplace_back(v, grid_id(r + 1, c + 1, cols));
        edges.emplace_back(grid_id(r, c + 1, cols), grid_id(r + 1, c, cols));
      }
    }
  }
  return edges;
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

// Random spanning tree of a connected base graph (shuffled Kruskal) plus
// each remaining edge with probability keep_probability.
Graph connected_random_subgraph(int n, std::vector<Edge> base, double keep_probability,
                                Rng& rng) {
  rng.shuffle(base.begin(), base.end());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<Edge> kept;
  std::vector<Edge> rest;
  for (const auto& e : base) {
    const int a = find_root(parent, e.first);
    const int b = find_root(parent, e.second);
    if (a != b) {
      parent[a] = b;
      kept.push_back(e);
    } else {
      rest.push_back(e);
    }
  }
  for (const auto& e : rest) {
    if (rng.unit() < keep_probability) kept.push_back(e);
  }
  return Graph::from_edges(n, kept);
}

void require_positive(int value, const char* name) {
  if (value <= 0) throw InputError(std::string(name) + " must be positive");
}

}  // namespace

Graph gen_family(const FamilySpec& spec) {
  Rng rng(spec.seed);
  switch (spec.family) {
    case Family::kPath: {
      require_positive(spec.rows, "path length");
      std::vector<Edge> edges;
      for (int v = 0; v + 1 < spec.rows; ++v) edges.emplace_back(v, v + 1);
      return Graph::from_edges(spec.rows, edges);
    }
    case Family::kCycle: {
      if (spec.rows < 3) throw InputError("cycle needs at least 3 vertices");
      std::vector<Edge> edges;
      for (int v = 0; v < spec.rows; ++v) edges.emplace_back(v, (v + 1) % spec.rows);
      return Graph::from_edges(spec.rows, edges);
    }
    case Family::kGrid:
    case Family::kKingGrid: {
      require_positive(spec.rows, "rows");
      require_positive(spec.cols, "cols");
      return Graph::from_edges(spec.rows * spec.cols,
                               grid_edges(spec.rows, spec.cols, spec.family == Family::kKingGrid));
    }
    case Family::kRandomKingSubgraph: {
      require_positive(spec.rows, "rows");
      require_positive(spec.cols, "cols");
      return connected_random_subgraph(spec.rows * spec.cols, grid_edges(spec.rows, spec.cols, true),
                                       spec.keep_probability, rng);
    }
    case Family::kRandomPlanar: {
      require_positive(spec.rows, "rows");
      require_positive(spec.cols, "cols");
      // Grid plus one diagonal per cell, chosen at random: a planar
      // triangulation of the rectangle.
      auto edges = grid_edges(spec.rows, spec.cols, false);
      for (int r = 0; r + 1 < spec.rows; ++r) {
        for (int c = 0; c + 1 < spec.cols; ++c) {
          if (rng.uniform(2) == 0) {
            edges.emplace_back(grid_id(r, c, spec.cols), grid_id(r + 1, c + 1, spec.cols));
          } else {
            edges.emplace_back(grid_id(r, c + 1, spec.cols), grid_id(r + 1, c, spec.cols));
          }
        }
      }
      return connected_random_subgraph(spec.rows * spec.cols, std::move(edges),
                                       spec.keep_probability, rng);
    }
    case Family::kRandomTree: {
      require_positive(spec.rows, "tree size");
      std::vector<Edge> edges;
      for (int v = 1; v < spec.rows; ++v) {
        edges.emplace_back(static_cast<int>(rng.uniform(static_cast<std::uint64_t>(v))), v);
      }
      return Graph::from_edges(spec.rows, edges);
    }
    case Family::kSubdividedGrid: {
      require_positive(spec.rows, "rows");
      require_positive(spec.cols, "cols");
      if (spec.subdivisions < 0) throw InputError("subdivisions must be nonnegative");
      const auto base = grid_edges(spec.rows, spec.cols, false);
      int n = spec.rows * spec.cols;
      std::vector<Edge> edges;
      for (const auto& [u, v] : base) {
        int previous = u;
        for (int s = 0; s < spec.subdivisions; ++s) {
          edges.emplace_back(previous, n);
          previous = n++;
        }
        edges.emplace_back(previous, v);
      }
      return Graph::from_edges(n, edges);
    }
  }
  throw InputError("unknown graph family");
}

BroomInstance gen_broom_counterexample(int k, int ell, int spacing) {
  if (k < 3) throw InputError("broom family needs k >= 3");
  if (spacing < 1) throw InputError("spacing must be at least 1");
  const int pairs = k * (k - 1) / 2;
  const int step = 2 * (pairs - 1);
  if (ell <= 0 || ell % step != 0) {
    throw InputError("ell = " + std::to_string(ell) + " is not a positive multiple of " +
                     std::to_string(step));
  }
  const int handle = ell / 2;
  if (handle < (k - 2) * (spacing + 1)) {
    throw InputError("ell too small for " + std::to_string(k - 2) + " splits at spacing " +
                     std::to_string(spacing));
  }

  BroomInstance broom;
  broom.k = k;
  broom.ell = ell;
  broom.spacing = spacing;
  std::vector<Edge> edges;
  int next = 0;
  for (int i = 0; i < k; ++i) broom.roots.push_back(next++);

  // Junction path of total length ell/2.
  const int subdivisions = handle / (pairs - 1) - 1;
  int previous = -1;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (previous >= 0) {
        for (int s = 0; s < subdivisions; ++s) {
          edges.emplace_back(previous, next);
          previous = next++;
        }
      }
      const int y = next++;
      if (previous >= 0) edges.emplace_back(previous, y);
      broom.junctions[{i, j}] = y;
      previous = y;
    }
  }

  // Caterpillar brooms: spine from the root to the last leaf, with a branch
  // to each other leaf leaving the spine at depth ell/2 + m * spacing.
  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> leaves;
    for (int j = 0; j < k; ++j) {
      if (j != i) leaves.push_back(broom.junctions.at({std::min(i, j), std::max(i, j)}));
    }
    std::vector<Vertex> spine{broom.roots[i]};
    for (int depth = 1; depth < ell; ++depth) {
      edges.emplace_back(spine.back(), next);
      spine.push_back(next++);
    }
    edges.emplace_back(spine.back(), leaves.back());
    for (int m = 0; m + 1 < static_cast<int>(leaves.size()); ++m) {
      const int split = handle + m * spacing;
      Vertex tail = spine[split];
      for (int depth = split + 1; depth < ell; ++depth) {
        edges.emplace_back(tail, next);
        tail = next++;
      }
      edges.emplace_back(tail, leaves[m]);
    }
  }
  broom.graph = Graph::from_edges(next, edges);
  return broom;
}

}  // namespace ballcover
