#include "ballcover/sparsify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "ballcover/bounds.hpp"
#include "ballcover/errors.hpp"
#include "ballcover/minor.hpp"
#include "ballcover/random.hpp"

namespace ballcover {
namespace {

void validate(const MultiHypergraph& mh, const WitnessedPairSet& pairs, int k) {
  if (k < 2) throw InputError("sparsification needs k >= 2");
  if (mh.rank() > static_cast<std::size_t>(k)) {
    throw PreconditionError("multi-hypergraph rank " + std::to_string(mh.rank()) +
                            " exceeds k = " + std::to_string(k));
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& pair : pairs) {
    if (pair.u == pair.v) throw InputError("witnessed pair with equal endpoints");
    if (pair.witness >= mh.edges.size()) throw InputError("witness index out of range");
    const auto& edge = mh.edges[pair.witness];
    if (!std::binary_search(edge.begin(), edge.end(), pair.u) ||
        !std::binary_search(edge.begin(), edge.end(), pair.v)) {
      throw InputError("witness edge does not contain pair {" + std::to_string(pair.u) + ", " +
                       std::to_string(pair.v) + "}");
    }
    if (!seen.emplace(std::min(pair.u, pair.v), std::max(pair.u, pair.v)).second) {
      throw InputError("pair {" + std::to_string(pair.u) + ", " + std::to_string(pair.v) +
                       "} listed twice");
    }
  }
}

// A pair survives when both endpoints are selected and nothing else in its
// witness is.
SparsifiedGraph assemble(const MultiHypergraph& mh, const WitnessedPairSet& pairs,
                         const std::vector<bool>& selected) {
  SparsifiedGraph out;
  std::vector<int> position(mh.vertex_count, -1);
  for (int v = 0; v < mh.vertex_count; ++v) {
    if (selected[v]) {
      position[v] = static_cast<int>(out.vertices.size());
      out.vertices.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const auto& pair : pairs) {
    if (!selected[pair.u] || !selected[pair.v]) continue;
    const auto& witness = mh.edges[pair.witness];
    const bool isolated = std::none_of(witness.begin(), witness.end(), [&](int w) {
      return w != pair.u && w != pair.v && selected[w];
    });
    if (!isolated) continue;
    out.kept.push_back(pair);
    edges.emplace_back(position[pair.u], position[pair.v]);
  }
  out.graph = Graph::from_edges(static_cast<int>(out.vertices.size()), edges);
  return out;
}

}  // namespace

std::size_t MultiHypergraph::rank() const {
  std::size_t r = 0;
  for (const auto& edge : edges) r = std::max(r, edge.size());
  return r;
}

Rational SparsifiedGraph::average_degree() const {
  if (vertices.empty()) return 0;
  return Rational(2 * static_cast<std::int64_t>(kept.size()),
                  static_cast<std::int64_t>(vertices.size()));
}

Rational sparsify_target_degree(std::size_t pair_count, int vertex_count, int k) {
  return Rational(2 * static_cast<std::int64_t>(pair_count)) /
         (Rational(vertex_count) * e_upper() * Rational(k));
}

SparsifiedGraph sparsify_random(const MultiHypergraph& mh, const WitnessedPairSet& pairs,
                                int k, std::uint64_t seed) {
  validate(mh, pairs, k);
  Rng rng(seed);
  std::vector<bool> selected(mh.vertex_count);
  for (int v = 0; v < mh.vertex_count; ++v) {
    selected[v] = rng.bernoulli(1, static_cast<std::uint64_t>(k));
  }
  return assemble(mh, pairs, selected);
}

SparsifiedGraph sparsify_derandomized(const MultiHypergraph& mh,
                                      const WitnessedPairSet& pairs, int k) {
  if (pairs.empty()) throw EmptyError("sparsify_derandomized needs at least one pair");
  validate(mh, pairs, k);
  const Rational alpha = sparsify_target_degree(pairs.size(), mh.vertex_count, k);

  // Pairs whose survival probability depends on v: v lies in the witness.
  std::vector<std::vector<std::size_t>> touching(mh.vertex_count);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (int w : mh.edges[pairs[p].witness]) touching[w].push_back(p);
  }

  std::vector<Rational> probability(mh.vertex_count, Rational(1, k));
  auto survival = [&](const WitnessedPair& pair) {
    Rational value = probability[pair.u] * probability[pair.v];
    for (int w : mh.edges[pair.witness]) {
      if (w != pair.u && w != pair.v) value *= 1 - probability[w];
      if (value.is_zero()) break;
    }
    return value;
  };

  // E[2|E(H)| - alpha |V(H)|] never decreases along the walk.
  for (int v = 0; v < mh.vertex_count; ++v) {
    Rational gain_if_in = -alpha;
    Rational gain_if_out = 0;
    for (std::size_t p : touching[v]) {
      probability[v] = 1;
      gain_if_in += 2 * survival(pairs[p]);
      probability[v] = 0;
      gain_if_out += 2 * survival(pairs[p]);
    }
    probability[v] = gain_if_in >= gain_if_out ? 1 : 0;
  }

  std::vector<bool> selected(mh.vertex_count);
  for (int v = 0; v < mh.vertex_count; ++v) selected[v] = probability[v] == 1;
  auto out = assemble(mh, pairs, selected);
  const Rational objective = Rational(2 * static_cast<std::int64_t>(out.kept.size())) -
                             alpha * Rational(static_cast<std::int64_t>(out.vertices.size()));
  if (objective <= 0) {
    throw InternalError("conditional-expectation walk ended at a nonpositive objective");
  }
  return out;
}

DegeneracyResult degeneracy_ordering(const Graph& g) {
  DegeneracyResult result;
  const int n = g.vertex_count();
  std::vector<int> degree(n);
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.emplace(degree[v], v);
  }
  std::vector<bool> removed(n, false);
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = true;
    result.ordering.push_back(v);
    result.degeneracy = std::max(result.degeneracy, d);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({degree[w], w});
      queue.emplace(--degree[w], w);
    }
  }
  return result;
}

std::int64_t packing_degeneracy_limit(const Rational& d, int k) {
  return static_cast<std::int64_t>(floor(d * e_upper() * Rational(k)));
}

BigInt packing_edge_bound(const Rational& d, int k, std::size_t matching_size) {
  const BigInt base = BigInt(1 + packing_degeneracy_limit(d, k));
  BigInt bound = 1;
  for (int i = 0; i + 1 < k; ++i) bound *= base;
  return bound * BigInt(static_cast<std::uint64_t>(matching_size));
}

SmallPackingEdges enumerate_small_packing_edges(const PackingHypergraph& ph, int k,
                                                const Rational& d) {
  if (k < 2) throw InputError("enumerate_small_packing_edges needs k >= 2");
  if (d < 1) throw InputError("declared density d must be at least 1");
  const int n = static_cast<int>(ph.matching.size());

  std::map<std::vector<std::size_t>, const PackingEdge*> small;
  std::set<Edge> pair_set;
  for (const auto& edge : ph.edges) {
    if (edge.members.size() > static_cast<std::size_t>(k)) continue;
    small.emplace(edge.members, &edge);
    for (std::size_t a = 0; a < edge.members.size(); ++a) {
      for (std::size_t b = a + 1; b < edge.members.size(); ++b) {
        pair_set.emplace(static_cast<int>(edge.members[a]), static_cast<int>(edge.members[b]));
      }
    }
  }

  SmallPackingEdges out;
  const std::vector<Edge> pair_list(pair_set.begin(), pair_set.end());
  out.auxiliary = Graph::from_edges(n, pair_list);
  out.degeneracy_limit = packing_degeneracy_limit(d, k);
  const auto ordering = degeneracy_ordering(out.auxiliary);
  out.degeneracy = ordering.degeneracy;

  if (out.degeneracy > out.degeneracy_limit) {
    // Peel vertices of degree <= limit; what is left has minimum degree
    // above the limit.
    std::vector<bool> alive(n, true);
    std::vector<int> degree(n);
    for (Vertex v = 0; v < n; ++v) degree[v] = out.auxiliary.degree(v);
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v = 0; v < n; ++v) {
        if (!alive[v] || degree[v] > out.degeneracy_limit) continue;
        alive[v] = false;
        changed = true;
        for (Vertex w : out.auxiliary.neighbors(v)) --degree[w];
      }
    }
    DensityWitness witness;
    std::vector<Vertex> core;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v]) {
        core.push_back(v);
        witness.offending_balls.push_back(ph.matching[v]);
      }
    }
    witness.offending_graph = out.auxiliary.induced(core);
    witness.declared_d = d;
    witness.observed_average_degree = average_degree(witness.offending_graph);
    witness.reason = "packing auxiliary graph has degeneracy " + std::to_string(out.degeneracy) +
                     " > floor(d e k) = " + std::to_string(out.degeneracy_limit);
    throw DensityWitnessError(std::move(witness));
  }

  // Each clique is listed once, from its earliest vertex in the ordering,
  // growing only through later neighbors.
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[ordering.ordering[i]] = i;
  std::vector<std::vector<Vertex>> later(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : out.auxiliary.neighbors(v)) {
      if (rank[w] > rank[v]) later[v].push_back(w);
    }
  }

  std::vector<Vertex> clique;
  std::vector<const PackingEdge*> found;
  auto extend = [&](auto&& self, const std::vector<Vertex>& candidates) -> void {
    ++out.cliques_enumerated;
    std::vector<std::size_t> key(clique.begin(), clique.end());
    std::sort(key.begin(), key.end());
    if (auto it = small.find(key); it != small.end()) found.push_back(it->second);
    if (clique.size() == static_cast<std::size_t>(k)) return;
    for (Vertex w : candidates) {
      std::vector<Vertex> narrowed;
      for (Vertex x : candidates) {
        if (rank[x] > rank[w] && out.auxiliary.adjacent(w, x)) narrowed.push_back(x);
      }
      clique.push_back(w);
      self(self, narrowed);
      clique.pop_back();
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    clique.assign(1, v);
    extend(extend, later[v]);
  }

  std::sort(found.begin(), found.end(),
            [](const PackingEdge* a, const PackingEdge* b) { return a->members < b->members; });
  for (const auto* edge : found) out.edges.push_back(*edge);
  return out;
}

}  // namespace ballcover
