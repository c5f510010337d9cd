#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "ballcover/graph.hpp"

namespace ballcover {

// Closed ball B_r(center) with its realized member set.
struct Ball {
  Vertex center = 0;
  int radius = 0;
  std::vector<Vertex> members;  // sorted

  bool contains(Vertex v) const;
  std::size_t size() const { return members.size(); }
};

Ball make_ball(const Graph& g, Vertex center, int radius);

bool intersects(const Ball& a, const Ball& b);

// Strict containment in either direction. Equal member sets are incomparable.
bool comparable(const Ball& a, const Ball& b);

// An ordered collection of balls of one graph; the order is the edge
// indexing of the hypergraph.
struct BallSystem {
  std::shared_ptr<const Graph> graph;
  std::vector<Ball> balls;

  std::size_t size() const { return balls.size(); }
  bool empty() const { return balls.empty(); }
  const Ball& operator[](std::size_t i) const { return balls[i]; }

  // Restriction to the given ball indices, in that order.
  BallSystem subsystem(std::span<const std::size_t> indices) const;
};

BallSystem make_ball_system(std::shared_ptr<const Graph> g,
                            std::span<const std::pair<Vertex, int>> centers_and_radii);

// Every ball of radius `radius`, one per vertex in identifier order.
BallSystem all_balls(std::shared_ptr<const Graph> g, int radius);

// For each vertex, the indices of the balls containing it (ascending).
std::vector<std::vector<std::size_t>> incidence(const BallSystem& h);

// Indices kept by minimalize: balls that strictly contain another ball are
// dropped, and among equal member sets only the lowest index survives.
std::vector<std::size_t> minimal_ball_indices(const BallSystem& h);

BallSystem minimalize(const BallSystem& h);

// Vertex at distance floor((r1 - r2 + d)/2) from the lower-identifier center
// (radii taken accordingly) on the lexicographically least shortest path
// between the centers. Throws PreconditionError on disjoint or comparable
// balls.
Vertex median_vertex(const Graph& g, const Ball& b1, const Ball& b2);

// One vertex per ball, adjacent iff the member sets meet.
Graph intersection_graph(const BallSystem& h);
Graph intersection_graph(std::span<const Ball> balls);

bool is_matching(const BallSystem& h, std::span<const std::size_t> indices);
bool is_transversal(const BallSystem& h, std::span<const Vertex> vertices);

// Index of the first ball not hit by `vertices`, or h.size() if none.
std::size_t first_unhit_ball(const BallSystem& h, std::span<const Vertex> vertices);

struct PackingEdge {
  // Positions into PackingHypergraph::matching, ascending.
  std::vector<std::size_t> members;
  // Indices of the balls of the system whose intersection pattern with the
  // matching is exactly `members`, ascending.
  std::vector<std::size_t> witnesses;
};

struct PackingHypergraph {
  std::vector<std::size_t> matching;  // ball indices of the base matching
  std::vector<PackingEdge> edges;     // sorted by members
};

// Exact intersection pattern of each ball against a matching.
std::vector<std::vector<std::size_t>> intersection_patterns(
    const BallSystem& h, std::span<const std::size_t> matching);

// Throws PreconditionError when the matching balls are not pairwise disjoint.
PackingHypergraph packing_hypergraph(const BallSystem& h,
                                     std::span<const std::size_t> matching);

}  // namespace ballcover
