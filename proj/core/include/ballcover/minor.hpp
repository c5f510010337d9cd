#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ballcover/ball.hpp"
#include "ballcover/errors.hpp"
#include "ballcover/graph.hpp"
#include "ballcover/rational.hpp"

namespace ballcover {

// Certificate that `pattern` is a minor of a host graph: one connected
// branch set per pattern vertex and one host path per pattern edge.
// edge_paths[i] realizes pattern.edges()[i] = (u, v): it starts in
// branch_sets[u], ends in branch_sets[v], and its interior avoids every
// branch set and every other path interior.
struct MinorModel {
  Graph pattern;
  std::vector<std::vector<Vertex>> branch_sets;
  std::vector<PathInGraph> edge_paths;
};

struct MinorVerification {
  bool pass = true;
  std::string clause;  // empty on PASS
  std::string detail;
  std::vector<Vertex> witnesses;

  explicit operator bool() const { return pass; }
};

// Checks every MinorModel invariant and reports the first violation.
// `max_interior` additionally bounds the interior length of each edge path.
MinorVerification verify_minor_model(const Graph& host, const MinorModel& model,
                                     std::optional<std::size_t> max_interior = {});

using BallPair = std::pair<std::size_t, std::size_t>;

// Builds the model for (balls, pattern_edges) from median vertices of the
// pattern pairs, using trees of lexicographically least shortest paths.
// Keys of `medians` are ordered pairs (i < j). Throws InputError on
// precondition violations and InternalError if the trees overlap in a way
// the construction rules out.
MinorModel minor_from_medians(const Graph& host, const BallSystem& balls,
                              std::span<const BallPair> pattern_edges,
                              const std::map<BallPair, Vertex>& medians);

// Same for pairwise disjoint balls linked by connector balls, each meeting
// exactly its two pattern balls. Connectors are first re-centered to
// minimum radius.
MinorModel minor_from_connectors(const Graph& host, const BallSystem& balls,
                                 std::span<const BallPair> pattern_edges,
                                 const std::map<BallPair, Ball>& connectors);

// Smallest-radius ball meeting balls i and j and no other ball of the
// system (ties broken by center identifier), or nullopt if none exists.
std::optional<Ball> minimal_connector(const Graph& host, const BallSystem& balls,
                                      std::size_t i, std::size_t j);

// 2|E|/|V|. Throws InputError on the empty graph.
Rational average_degree(const Graph& g);

// Evidence that a host graph has a minor denser than the declared bound.
struct DensityWitness {
  std::string reason;
  Rational declared_d;
  Rational observed_average_degree;
  // The graph whose density exceeds the bound, on `offending_balls`.
  Graph offending_graph;
  std::vector<std::size_t> offending_balls;
  // A verified model of `model->pattern` in the host, when one was built.
  std::optional<MinorModel> model;
};

class DensityWitnessError : public Error {
 public:
  explicit DensityWitnessError(DensityWitness witness);

  const DensityWitness& witness() const noexcept { return witness_; }

 private:
  DensityWitness witness_;
};

}  // namespace ballcover
