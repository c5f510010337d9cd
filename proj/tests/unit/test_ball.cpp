#include <doctest.h>

#include <memory>
#include <set>

#include "ballcover/ball.hpp"
#include "ballcover/errors.hpp"
#include "ballcover/exact.hpp"
#include "oracles.hpp"

using namespace ballcover;

namespace {

std::shared_ptr<const Graph> shared(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

BallSystem system_of(std::shared_ptr<const Graph> g, std::vector<std::pair<Vertex, int>> specs) {
  return make_ball_system(std::move(g), specs);
}

std::vector<Vertex> sorted(std::set<Vertex> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("ball membership") {
  const Graph c5 = gen_family({Family::kCycle, 5});
  CHECK(make_ball(c5, 0, 1).members == std::vector<Vertex>{0, 1, 4});
  CHECK(make_ball(c5, 3, 0).members == std::vector<Vertex>{3});
  CHECK(make_ball(c5, 2, eccentricity(c5, 2)).size() == 5);
  CHECK_THROWS_AS(make_ball(c5, 5, 1), InputError);
  CHECK_THROWS_AS(make_ball(c5, 0, -1), InputError);
}

TEST_CASE("make_ball agrees with the distance oracle") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gen_family({Family::kRandomPlanar, 4, 4, seed, 0.5});
    const auto dist = oracle::all_pairs_distances(g);
    for (Vertex c = 0; c < g.vertex_count(); ++c) {
      for (int r = 0; r <= 4; ++r) {
        REQUIRE(make_ball(g, c, r).members == sorted(oracle::ball_members(dist, c, r)));
      }
    }
  }
}

TEST_CASE("comparable") {
  const Graph p3 = gen_family({Family::kPath, 3});
  CHECK(comparable(make_ball(p3, 1, 0), make_ball(p3, 1, 1)));
  CHECK_FALSE(comparable(make_ball(p3, 1, 1), make_ball(p3, 1, 1)));
  CHECK_FALSE(comparable(make_ball(p3, 0, 0), make_ball(p3, 2, 0)));
  CHECK(intersects(make_ball(p3, 0, 1), make_ball(p3, 2, 1)));
  CHECK_FALSE(intersects(make_ball(p3, 0, 0), make_ball(p3, 2, 0)));
}

TEST_CASE("minimalize") {
  const auto p3 = shared(gen_family({Family::kPath, 3}));
  CHECK(minimal_ball_indices(system_of(p3, {{1, 0}, {1, 1}})) == std::vector<std::size_t>{0});
  CHECK(minimal_ball_indices(system_of(p3, {{1, 1}, {1, 0}})) == std::vector<std::size_t>{1});
  CHECK(minimal_ball_indices(system_of(p3, {{0, 1}, {0, 1}})) == std::vector<std::size_t>{0});
  // Equal member sets from different centers keep the lower index.
  CHECK(minimal_ball_indices(system_of(p3, {{0, 2}, {2, 2}})) == std::vector<std::size_t>{0});
  const auto c5 = shared(gen_family({Family::kCycle, 5}));
  CHECK(minimalize(all_balls(c5, 1)).size() == 5);
}

TEST_CASE("minimalize preserves nu and tau") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = shared(gen_family({Family::kRandomKingSubgraph, 3, 4, seed, 0.4}));
    const auto h = oracle::random_system(g, 10, 2, seed);
    const auto m = minimalize(h);
    const auto kept = minimal_ball_indices(h);
    // No kept ball strictly contains another ball of the input.
    for (std::size_t i : kept) {
      for (std::size_t j = 0; j < h.size(); ++j) {
        const auto& a = h[i].members;
        const auto& b = h[j].members;
        const bool strict_superset = a.size() > b.size() && std::includes(a.begin(), a.end(), b.begin(), b.end());
        REQUIRE_FALSE(strict_superset);
      }
    }
    REQUIRE(oracle::brute_nu(m) == oracle::brute_nu(h));
    REQUIRE(oracle::brute_tau(m) == oracle::brute_tau(h));
  }
}

TEST_CASE("median vertex examples") {
  const Graph p3 = gen_family({Family::kPath, 3});
  CHECK(median_vertex(p3, make_ball(p3, 0, 1), make_ball(p3, 2, 1)) == 1);
  const Graph c5 = gen_family({Family::kCycle, 5});
  CHECK(median_vertex(c5, make_ball(c5, 3, 1), make_ball(c5, 3, 1)) == 3);
  const Graph p4 = gen_family({Family::kPath, 4});
  CHECK(median_vertex(p4, make_ball(p4, 0, 2), make_ball(p4, 3, 1)) == 2);
  CHECK_THROWS_AS(median_vertex(p4, make_ball(p4, 0, 0), make_ball(p4, 3, 0)), PreconditionError);
  CHECK_THROWS_AS(median_vertex(p4, make_ball(p4, 1, 0), make_ball(p4, 1, 1)), PreconditionError);
}

TEST_CASE("median vertex splits the radius surplus evenly") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = gen_family({Family::kRandomPlanar, 4, 5, seed, 0.5});
    const auto dist = oracle::all_pairs_distances(g);
    for (Vertex v1 = 0; v1 < g.vertex_count(); v1 += 3) {
      for (Vertex v2 = 0; v2 < g.vertex_count(); v2 += 2) {
        for (int r1 = 0; r1 <= 3; ++r1) {
          for (int r2 = 0; r2 <= 3; ++r2) {
            const Ball b1 = make_ball(g, v1, r1);
            const Ball b2 = make_ball(g, v2, r2);
            if (!intersects(b1, b2) || comparable(b1, b2)) continue;
            const Vertex m = median_vertex(g, b1, b2);
            REQUIRE(dist[v1][m] + dist[m][v2] == dist[v1][v2]);
            REQUIRE(dist[v1][m] <= r1);
            REQUIRE(dist[v2][m] <= r2);
            REQUIRE(std::abs((r1 - dist[v1][m]) - (r2 - dist[v2][m])) <= 1);
          }
        }
      }
    }
  }
}

TEST_CASE("intersection graph examples") {
  const auto c5 = shared(gen_family({Family::kCycle, 5}));
  CHECK(intersection_graph(all_balls(c5, 1)).edge_count() == 10);
  const auto p4 = shared(gen_family({Family::kPath, 4}));
  CHECK(intersection_graph(system_of(p4, {{0, 0}, {3, 0}})).edge_count() == 0);
  CHECK(intersection_graph(system_of(p4, {{1, 1}, {1, 1}})).edge_count() == 1);
}

TEST_CASE("matching and transversal checks") {
  const auto p4 = shared(gen_family({Family::kPath, 4}));
  const auto h = system_of(p4, {{0, 1}, {3, 1}, {1, 1}});
  const std::vector<std::size_t> good{0, 1};
  const std::vector<std::size_t> bad{0, 2};
  CHECK(is_matching(h, good));
  CHECK_FALSE(is_matching(h, bad));
  const std::vector<Vertex> cover{1, 3};
  const std::vector<Vertex> partial{3};
  CHECK(is_transversal(h, cover));
  CHECK_FALSE(is_transversal(h, partial));
  CHECK(first_unhit_ball(h, partial) == 0);
}

TEST_CASE("packing hypergraph examples") {
  const auto p5 = shared(gen_family({Family::kPath, 5}));
  SUBCASE("two disjoint balls and a link") {
    const auto h = system_of(p5, {{0, 0}, {4, 0}, {2, 2}});
    const std::vector<std::size_t> matching{0, 1};
    const auto ph = packing_hypergraph(h, matching);
    REQUIRE(ph.edges.size() == 3);
    CHECK(ph.edges[0].members == std::vector<std::size_t>{0});
    CHECK(ph.edges[1].members == std::vector<std::size_t>{0, 1});
    CHECK(ph.edges[1].witnesses == std::vector<std::size_t>{2});
    CHECK(ph.edges[2].members == std::vector<std::size_t>{1});
  }
  SUBCASE("matching only") {
    const auto h = system_of(p5, {{0, 0}, {2, 0}, {4, 0}});
    const std::vector<std::size_t> matching{0, 1, 2};
    const auto ph = packing_hypergraph(h, matching);
    REQUIRE(ph.edges.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(ph.edges[i].members == std::vector<std::size_t>{i});
  }
  SUBCASE("P7 example") {
    const auto p7 = shared(gen_family({Family::kPath, 7}));
    const auto h = system_of(p7, {{1, 1}, {5, 1}, {3, 1}});
    const std::vector<std::size_t> matching{0, 1};
    const auto ph = packing_hypergraph(h, matching);
    bool found = false;
    for (const auto& e : ph.edges) {
      if (e.members == std::vector<std::size_t>{0, 1}) {
        found = true;
        CHECK(e.witnesses == std::vector<std::size_t>{2});
      }
    }
    CHECK(found);
  }
  SUBCASE("intersecting matching is rejected") {
    const auto h = system_of(p5, {{0, 1}, {1, 1}});
    const std::vector<std::size_t> matching{0, 1};
    CHECK_THROWS_AS(packing_hypergraph(h, matching), PreconditionError);
  }
}

TEST_CASE("packing hypergraph equals brute-force patterns") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = shared(gen_family({Family::kRandomPlanar, 4, 5, seed, 0.5}));
    const auto h = oracle::random_system(g, 14, 2, seed + 100);
    // Greedy disjoint selection as the matching.
    std::vector<std::size_t> matching;
    for (std::size_t i = 0; i < h.size(); ++i) {
      matching.push_back(i);
      if (!oracle::pairwise_disjoint(h, matching)) matching.pop_back();
    }
    const auto ph = packing_hypergraph(h, matching);
    const auto expected = oracle::brute_packing_edges(h, matching);
    REQUIRE(ph.edges.size() == expected.size());
    std::set<std::size_t> covered;
    for (const auto& e : ph.edges) {
      REQUIRE(expected.count(e.members) == 1);
      REQUIRE(expected.at(e.members) == e.witnesses);
      covered.insert(e.witnesses.begin(), e.witnesses.end());
    }
    // Union of witnesses = balls meeting at least one matching ball.
    std::size_t meeting = 0;
    for (std::size_t b = 0; b < h.size(); ++b) {
      bool meets = false;
      for (std::size_t m : matching) meets = meets || !oracle::disjoint(h[b], h[m]);
      meeting += meets ? 1 : 0;
    }
    REQUIRE(covered.size() == meeting);
  }
}

TEST_CASE("subsystem keeps the requested order") {
  const auto c5 = shared(gen_family({Family::kCycle, 5}));
  const auto h = all_balls(c5, 1);
  const std::vector<std::size_t> pick{3, 1};
  const auto sub = h.subsystem(pick);
  REQUIRE(sub.size() == 2);
  CHECK(sub[0].center == 3);
  CHECK(sub[1].center == 1);
  const auto inc = incidence(h);
  CHECK(inc[0] == std::vector<std::size_t>{0, 1, 4});
}
