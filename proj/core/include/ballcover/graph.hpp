#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace ballcover {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kUnreachable = -1;

// Undirected simple graph on vertices 0..n-1. Neighbor lists are strictly
// increasing and symmetric. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Edgeless graph on n vertices.
  explicit Graph(int vertex_count);

  // Builds from an edge list. Throws InputError on loops, repeated edges
  // (in either orientation) or out-of-range endpoints.
  static Graph from_edges(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < vertex_count(); }

  // All edges (u, v) with u < v, ascending by u then v.
  std::vector<Edge> edges() const;

  // Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct PathInGraph {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
};

// Hop distances from `source`; kUnreachable for other components.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// Distance from the nearest of `sources` (all at distance zero).
std::vector<int> multi_source_distances(const Graph& g, std::span<const Vertex> sources);

// Shortest s-x path whose vertex sequence read from s is lexicographically
// least under vertex-identifier order. Throws NoPathError when x is not
// reachable from s.
PathInGraph lex_min_shortest_path(const Graph& g, Vertex s, Vertex x);

// Same, reusing distance arrays from s and from x.
PathInGraph lex_min_shortest_path(const Graph& g, Vertex s, Vertex x,
                                  std::span<const int> dist_from_s,
                                  std::span<const int> dist_from_x);

bool is_connected(const Graph& g);

// Largest distance from `v` to a vertex of its component.
int eccentricity(const Graph& g, Vertex v);

// ---------------------------------------------------------------------------
// Generators

enum class Family {
  kPath,               // rows vertices
  kCycle,              // rows vertices, rows >= 3
  kGrid,               // rows x cols
  kKingGrid,           // rows x cols strong product of two paths
  kRandomKingSubgraph, // connected random subgraph of the king grid
  kRandomPlanar,       // connected random subgraph of a triangulated grid
  kRandomTree,         // rows vertices
  kSubdividedGrid,     // rows x cols grid, each edge subdivided `subdivisions` times
};

struct FamilySpec {
  Family family = Family::kPath;
  int rows = 1;
  int cols = 1;
  std::uint64_t seed = 0;
  // Probability of keeping each non-tree edge in the random families.
  double keep_probability = 0.5;
  int subdivisions = 1;
};

// Deterministic for a given spec (including seed). Throws InputError on
// non-positive dimensions.
Graph gen_family(const FamilySpec& spec);

// The k-root broom family. Vertices 0..k-1 are the roots, followed by the
// junction path (junctions in lexicographic pair order with subdivision
// vertices between them), followed by the broom interiors.
struct BroomInstance {
  Graph graph;
  std::vector<Vertex> roots;
  // Keyed by root-index pairs (i, j), i < j, 0-based.
  std::map<std::pair<int, int>, Vertex> junctions;
  int k = 0;
  int ell = 0;
  int spacing = 0;
};

// Throws InputError when k < 3, spacing < 1, ell is not divisible by
// 2(C(k,2)-1), or ell/2 < (k-2)*(spacing+1).
BroomInstance gen_broom_counterexample(int k, int ell, int spacing);

}  // namespace ballcover
