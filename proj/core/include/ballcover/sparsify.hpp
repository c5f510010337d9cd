#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ballcover/ball.hpp"
#include "ballcover/graph.hpp"
#include "ballcover/rational.hpp"

namespace ballcover {

// Hypergraph whose edge list may repeat edges.
struct MultiHypergraph {
  int vertex_count = 0;
  std::vector<std::vector<int>> edges;  // each sorted, no repeats

  std::size_t rank() const;
};

// A pair {u, v} and the index of an edge containing both. Different pairs
// may share a witness.
struct WitnessedPair {
  int u = 0;
  int v = 0;
  std::size_t witness = 0;
};

using WitnessedPairSet = std::vector<WitnessedPair>;

// Output of sparsification: the selected vertices and the pairs kept among
// them. graph is on positions into `vertices`.
struct SparsifiedGraph {
  std::vector<int> vertices;
  std::vector<WitnessedPair> kept;
  Graph graph;

  Rational average_degree() const;
};

// Keeps each vertex independently with probability 1/k (seeded) and keeps
// a pair when its witness has no other selected vertex.
SparsifiedGraph sparsify_random(const MultiHypergraph& mh, const WitnessedPairSet& pairs,
                                int k, std::uint64_t seed);

// Conditional-expectation walk over the vertices in identifier order. The
// result satisfies 2|E(H)| > (2|E|/(n e k)) |V(H)| with e replaced by
// e_upper(). Throws EmptyError when `pairs` is empty.
SparsifiedGraph sparsify_derandomized(const MultiHypergraph& mh,
                                      const WitnessedPairSet& pairs, int k);

// Threshold 2|E|/(n e k) with the rational upper bound for e.
Rational sparsify_target_degree(std::size_t pair_count, int vertex_count, int k);

struct DegeneracyResult {
  std::vector<Vertex> ordering;  // removal order
  int degeneracy = 0;
};

// Repeated removal of a minimum-degree vertex (lowest identifier on ties).
DegeneracyResult degeneracy_ordering(const Graph& g);

struct SmallPackingEdges {
  std::vector<PackingEdge> edges;  // cardinality <= k, sorted by members
  std::size_t cliques_enumerated = 0;
  int degeneracy = 0;
  std::int64_t degeneracy_limit = 0;  // floor(d e k)
  Graph auxiliary;  // on matching positions
};

// floor(d * e_upper() * k).
std::int64_t packing_degeneracy_limit(const Rational& d, int k);

// (1 + floor(d e k))^(k-1) * |B|.
BigInt packing_edge_bound(const Rational& d, int k, std::size_t matching_size);

// Lists cliques of size <= k of the auxiliary graph on the matching along a
// degeneracy ordering and keeps those occurring as packing edges. Throws
// DensityWitnessError (offending_graph = the subgraph left when every
// remaining vertex has degree above the limit) if the auxiliary graph is
// not floor(d e k)-degenerate.
SmallPackingEdges enumerate_small_packing_edges(const PackingHypergraph& ph, int k,
                                                const Rational& d);

}  // namespace ballcover
