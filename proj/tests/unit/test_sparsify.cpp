#include <doctest.h>

#include <cmath>
#include <memory>
#include <set>

#include "ballcover/errors.hpp"
#include "ballcover/minor.hpp"
#include "ballcover/random.hpp"
#include "ballcover/sparsify.hpp"
#include "oracles.hpp"

using namespace ballcover;

namespace {

std::shared_ptr<const Graph> shared(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

// 2|E(H)| - alpha |V(H)| for a selection, evaluated from scratch.
Rational objective(const MultiHypergraph& mh, const WitnessedPairSet& pairs,
                   const std::vector<bool>& selected, int k) {
  const Rational alpha = Rational(2 * static_cast<std::int64_t>(pairs.size())) /
                         (Rational(mh.vertex_count) * oracle::e_bound() * Rational(k));
  std::int64_t kept = 0;
  std::int64_t chosen = 0;
  for (bool s : selected) chosen += s ? 1 : 0;
  for (const auto& p : pairs) {
    if (!selected[p.u] || !selected[p.v]) continue;
    bool clean = true;
    for (int w : mh.edges[p.witness]) clean = clean && (w == p.u || w == p.v || !selected[w]);
    kept += clean ? 1 : 0;
  }
  return Rational(2 * kept) - alpha * Rational(chosen);
}

// Independent check of the sparsification postconditions.
void check_output(const MultiHypergraph& mh, const WitnessedPairSet& pairs,
                  const SparsifiedGraph& out) {
  std::vector<bool> selected(mh.vertex_count, false);
  for (int v : out.vertices) selected[v] = true;
  std::set<std::pair<int, int>> kept;
  for (const auto& p : out.kept) kept.emplace(p.u, p.v);
  for (const auto& p : pairs) {
    bool expected = selected[p.u] && selected[p.v];
    for (int w : mh.edges[p.witness]) expected = expected && (w == p.u || w == p.v || !selected[w]);
    REQUIRE(kept.count({p.u, p.v}) == (expected ? 1u : 0u));
  }
  REQUIRE(out.graph.vertex_count() == static_cast<int>(out.vertices.size()));
  REQUIRE(out.graph.edge_count() == out.kept.size());
}

struct Instance {
  MultiHypergraph mh;
  WitnessedPairSet pairs;
};

// Random multi-hypergraph with edges of size 2..rank and one witnessed pair
// for each distinct pair inside some edge.
Instance random_instance(int n, int rank, int edge_count, std::uint64_t seed) {
  Rng rng(seed);
  Instance inst;
  inst.mh.vertex_count = n;
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < edge_count; ++e) {
    const int size = 2 + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(rank - 1)));
    std::set<int> members;
    while (static_cast<int>(members.size()) < size) members.insert(static_cast<int>(rng.uniform(n)));
    std::vector<int> edge(members.begin(), members.end());
    for (std::size_t a = 0; a < edge.size(); ++a) {
      for (std::size_t b = a + 1; b < edge.size(); ++b) {
        if (seen.emplace(edge[a], edge[b]).second) {
          inst.pairs.push_back({edge[a], edge[b], inst.mh.edges.size()});
        }
      }
    }
    inst.mh.edges.push_back(std::move(edge));
  }
  return inst;
}

}  // namespace

TEST_CASE("random sparsification examples") {
  MultiHypergraph mh{4, {{0, 1}, {2, 3}}};
  CHECK(sparsify_random(mh, {}, 2, 1).kept.empty());
  const WitnessedPairSet one{{0, 1, 0}};
  // Find a seed selecting both endpoints; the pair must then survive.
  bool seen_both = false;
  for (std::uint64_t seed = 0; seed < 64 && !seen_both; ++seed) {
    const auto out = sparsify_random(mh, one, 2, seed);
    const std::set<int> chosen(out.vertices.begin(), out.vertices.end());
    if (chosen.count(0) && chosen.count(1)) {
      seen_both = true;
      CHECK(out.kept.size() == 1);
    }
  }
  CHECK(seen_both);
}

TEST_CASE("random sparsification follows the selection rule") {
  const auto inst = random_instance(12, 3, 14, 5);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto out = sparsify_random(inst.mh, inst.pairs, 3, seed);
    check_output(inst.mh, inst.pairs, out);
    REQUIRE(out.vertices.size() == sparsify_random(inst.mh, inst.pairs, 3, seed).vertices.size());
  }
}

TEST_CASE("random sparsification expectations") {
  const auto inst = random_instance(24, 4, 30, 11);
  const int k = 4;
  const int trials = 10000;
  double sum_v = 0, sum_v2 = 0, sum_e = 0, sum_e2 = 0;
  for (int s = 0; s < trials; ++s) {
    const auto out = sparsify_random(inst.mh, inst.pairs, k, static_cast<std::uint64_t>(s));
    const double v = static_cast<double>(out.vertices.size());
    const double e = static_cast<double>(out.kept.size());
    sum_v += v;
    sum_v2 += v * v;
    sum_e += e;
    sum_e2 += e * e;
  }
  const double mean_v = sum_v / trials;
  const double se_v = std::sqrt((sum_v2 / trials - mean_v * mean_v) / trials);
  const double mean_e = sum_e / trials;
  const double se_e = std::sqrt((sum_e2 / trials - mean_e * mean_e) / trials);
  const double expected_v = 24.0 / k;
  const double floor_e = static_cast<double>(inst.pairs.size()) / (std::exp(1.0) * k * k);
  CHECK(std::abs(mean_v - expected_v) <= 5 * se_v);
  CHECK(mean_e >= floor_e - 5 * se_e);
}

TEST_CASE("derandomized sparsification examples") {
  SUBCASE("single pair") {
    MultiHypergraph mh{2, {{0, 1}}};
    const auto out = sparsify_derandomized(mh, {{0, 1, 0}}, 2);
    CHECK(out.vertices == std::vector<int>{0, 1});
    CHECK(out.kept.size() == 1);
    CHECK(out.average_degree() == 1);
    CHECK(out.average_degree() >= sparsify_target_degree(1, 2, 2));
  }
  SUBCASE("K4 with two-element witnesses") {
    MultiHypergraph mh{4, {}};
    WitnessedPairSet pairs;
    for (int u = 0; u < 4; ++u) {
      for (int v = u + 1; v < 4; ++v) {
        pairs.push_back({u, v, mh.edges.size()});
        mh.edges.push_back({u, v});
      }
    }
    const auto out = sparsify_derandomized(mh, pairs, 2);
    CHECK(out.vertices.size() == 4);
    CHECK(out.average_degree() == 3);
  }
  SUBCASE("rank-3 conflicts on six vertices") {
    MultiHypergraph mh{6, {{0, 1, 2}, {2, 3, 4}, {3, 4, 5}, {0, 4, 5}}};
    const WitnessedPairSet pairs{{0, 1, 0}, {1, 2, 0}, {2, 3, 1}, {3, 4, 2}, {4, 5, 2}, {0, 5, 3}};
    const auto out = sparsify_derandomized(mh, pairs, 3);
    check_output(mh, pairs, out);
    std::vector<bool> selected(6, false);
    for (int v : out.vertices) selected[v] = true;
    CHECK(objective(mh, pairs, selected, 3) > 0);
    // Some selection has a positive objective.
    bool any_positive = false;
    for (int mask = 0; mask < 64; ++mask) {
      std::vector<bool> s(6);
      for (int v = 0; v < 6; ++v) s[v] = (mask >> v) & 1;
      any_positive = any_positive || objective(mh, pairs, s, 3) > 0;
    }
    CHECK(any_positive);
  }
  SUBCASE("errors") {
    MultiHypergraph mh{3, {{0, 1, 2}}};
    CHECK_THROWS_AS(sparsify_derandomized(mh, {}, 3), EmptyError);
    CHECK_THROWS_AS(sparsify_derandomized(mh, {{0, 1, 0}}, 2), PreconditionError);
    CHECK_THROWS_AS(sparsify_derandomized(mh, {{0, 1, 0}, {1, 0, 0}}, 3), InputError);
    CHECK_THROWS_AS(sparsify_derandomized(mh, {{0, 1, 1}}, 3), InputError);
    MultiHypergraph two{3, {{0, 1}}};
    CHECK_THROWS_AS(sparsify_derandomized(two, {{0, 2, 0}}, 3), InputError);
  }
}

TEST_CASE("derandomized sparsification meets its density target") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = 6 + static_cast<int>(seed % 25);
    const int rank = 2 + static_cast<int>(seed % 4);
    const auto inst = random_instance(n, rank, 3 + static_cast<int>(seed % 20), seed);
    const int k = rank;
    const auto out = sparsify_derandomized(inst.mh, inst.pairs, k);
    check_output(inst.mh, inst.pairs, out);
    const Rational target = Rational(2 * static_cast<std::int64_t>(inst.pairs.size())) /
                            (Rational(n) * oracle::e_bound() * Rational(k));
    REQUIRE(out.average_degree() >= target);
    std::vector<bool> selected(n, false);
    for (int v : out.vertices) selected[v] = true;
    REQUIRE(objective(inst.mh, inst.pairs, selected, k) > 0);
  }
}

namespace {

// Largest minimum degree over all induced subgraphs.
int brute_degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int min_degree = n;
    for (int v = 0; v < n; ++v) {
      if (!(mask & (1u << v))) continue;
      int d = 0;
      for (Vertex w : g.neighbors(v)) d += (mask >> w) & 1;
      min_degree = std::min(min_degree, d);
    }
    best = std::max(best, min_degree);
  }
  return best;
}

}  // namespace

TEST_CASE("degeneracy") {
  CHECK(degeneracy_ordering(gen_family({Family::kRandomTree, 10, 1, 3})).degeneracy == 1);
  CHECK(degeneracy_ordering(gen_family({Family::kKingGrid, 2, 2})).degeneracy == 3);
  CHECK(degeneracy_ordering(gen_family({Family::kCycle, 5})).degeneracy == 2);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = gen_family({Family::kRandomKingSubgraph, 3, 4, seed, 0.6});
    const auto result = degeneracy_ordering(g);
    REQUIRE(result.degeneracy == brute_degeneracy(g));
    REQUIRE(result.ordering.size() == static_cast<std::size_t>(g.vertex_count()));
  }
}

TEST_CASE("small packing edge enumeration examples") {
  const auto p5 = shared(gen_family({Family::kPath, 5}));
  SUBCASE("singletons only") {
    const std::vector<std::pair<Vertex, int>> specs{{0, 0}, {2, 0}, {4, 0}};
    const auto h = make_ball_system(p5, specs);
    const std::vector<std::size_t> matching{0, 1, 2};
    const auto small = enumerate_small_packing_edges(packing_hypergraph(h, matching), 2, Rational(6));
    CHECK(small.edges.size() == 3);
  }
  SUBCASE("two balls and a connector") {
    const std::vector<std::pair<Vertex, int>> specs{{0, 0}, {4, 0}, {2, 2}};
    const auto h = make_ball_system(p5, specs);
    const std::vector<std::size_t> matching{0, 1};
    const auto small = enumerate_small_packing_edges(packing_hypergraph(h, matching), 2, Rational(6));
    REQUIRE(small.edges.size() == 3);
    CHECK(small.edges[1].members == std::vector<std::size_t>{0, 1});
  }
  CHECK(packing_degeneracy_limit(Rational(6), 9) == 146);
  CHECK(packing_edge_bound(Rational(1), 2, 5) == BigInt(6 * 5));
}

TEST_CASE("small packing edges equal brute force") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = shared(gen_family({Family::kRandomPlanar, 5, 6, seed, 0.5}));
    const auto h = oracle::random_system(g, 25, 2, seed + 3);
    std::vector<std::size_t> matching;
    for (std::size_t i = 0; i < h.size(); ++i) {
      matching.push_back(i);
      if (!oracle::pairwise_disjoint(h, matching)) matching.pop_back();
    }
    const int k = 2 + static_cast<int>(seed % 8);
    const auto small = enumerate_small_packing_edges(packing_hypergraph(h, matching), k, Rational(6));
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> expected;
    for (const auto& [members, witnesses] : oracle::brute_packing_edges(h, matching)) {
      if (members.size() <= static_cast<std::size_t>(k)) expected[members] = witnesses;
    }
    REQUIRE(small.edges.size() == expected.size());
    for (const auto& e : small.edges) REQUIRE(expected.at(e.members) == e.witnesses);
    REQUIRE(BigInt(static_cast<std::uint64_t>(small.cliques_enumerated)) <=
            packing_edge_bound(Rational(6), k, matching.size()));
  }
}

TEST_CASE("dense packing structure raises a density witness") {
  // Five disjoint singleton balls on a star's leaves; the radius-one ball at
  // the hub meets all of them, so every pair is in a packing edge of size 5.
  std::vector<Edge> edges;
  for (int leaf = 1; leaf <= 5; ++leaf) edges.emplace_back(0, leaf);
  const auto star = shared(Graph::from_edges(6, edges));
  std::vector<std::pair<Vertex, int>> specs;
  for (int leaf = 1; leaf <= 5; ++leaf) specs.emplace_back(leaf, 0);
  specs.emplace_back(0, 1);
  const auto h = make_ball_system(star, specs);
  const std::vector<std::size_t> matching{0, 1, 2, 3, 4};
  // With d = 1/2 and k = 5 the limit is floor(6.7975) = 6 > 4: no witness.
  CHECK_NOTHROW(enumerate_small_packing_edges(packing_hypergraph(h, matching), 5, Rational(1)));
  // The auxiliary graph is K5 (degeneracy 4); k = 2 skips the 5-edge.
  const auto small = enumerate_small_packing_edges(packing_hypergraph(h, matching), 2, Rational(1));
  CHECK(small.auxiliary.edge_count() == 0);
}
