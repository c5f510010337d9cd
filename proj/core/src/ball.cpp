#include "ballcover/ball.hpp"

#include <algorithm>
#include <map>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "ballcover/errors.hpp"

namespace ballcover {
namespace {

std::vector<boost::dynamic_bitset<>> member_bitsets(std::span<const Ball> balls, int n) {
  std::vector<boost::dynamic_bitset<>> sets;
  sets.reserve(balls.size());
  for (const auto& ball : balls) {
    boost::dynamic_bitset<> bits(n);
    for (Vertex v : ball.members) bits.set(v);
    sets.push_back(std::move(bits));
  }
  return sets;
}

int universe_size(std::span<const Ball> balls) {
  int n = 0;
  for (const auto& ball : balls) {
    if (!ball.members.empty()) n = std::max(n, ball.members.back() + 1);
  }
  return n;
}

}  // namespace

bool Ball::contains(Vertex v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

Ball make_ball(const Graph& g, Vertex center, int radius) {
  if (!g.contains(center)) throw InputError("ball center " + std::to_string(center) + " out of range");
  if (radius < 0) throw InputError("negative ball radius");
  Ball ball{center, radius, {}};
  const auto dist = bfs_distances(g, center);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] != kUnreachable && dist[v] <= radius) ball.members.push_back(v);
  }
  return ball;
}

bool intersects(const Ball& a, const Ball& b) {
  auto i = a.members.begin();
  auto j = b.members.begin();
  while (i != a.members.end() && j != b.members.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

bool comparable(const Ball& a, const Ball& b) {
  if (a.members.size() == b.members.size()) return false;
  const Ball& small = a.members.size() < b.members.size() ? a : b;
  const Ball& large = a.members.size() < b.members.size() ? b : a;
  return std::includes(large.members.begin(), large.members.end(), small.members.begin(),
                       small.members.end());
}

BallSystem BallSystem::subsystem(std::span<const std::size_t> indices) const {
  BallSystem out{graph, {}};
  out.balls.reserve(indices.size());
  for (std::size_t i : indices) out.balls.push_back(balls.at(i));
  return out;
}

BallSystem make_ball_system(std::shared_ptr<const Graph> g,
                            std::span<const std::pair<Vertex, int>> centers_and_radii) {
  BallSystem h{std::move(g), {}};
  h.balls.reserve(centers_and_radii.size());
  for (const auto& [center, radius] : centers_and_radii) {
    h.balls.push_back(make_ball(*h.graph, center, radius));
  }
  return h;
}

BallSystem all_balls(std::shared_ptr<const Graph> g, int radius) {
  std::vector<std::pair<Vertex, int>> spec;
  for (Vertex v = 0; v < g->vertex_count(); ++v) spec.emplace_back(v, radius);
  return make_ball_system(std::move(g), spec);
}

std::vector<std::vector<std::size_t>> incidence(const BallSystem& h) {
  std::vector<std::vector<std::size_t>> out(h.graph ? h.graph->vertex_count()
                                                    : universe_size(h.balls));
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (Vertex v : h.balls[i].members) out[v].push_back(i);
  }
  return out;
}

std::vector<std::size_t> minimal_ball_indices(const BallSystem& h) {
  const auto sets = member_bitsets(h.balls, universe_size(h.balls));
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < h.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < h.size() && !drop; ++j) {
      if (j == i || !sets[j].is_subset_of(sets[i])) continue;
      // j inside i: either strictly, or equal with a lower index.
      drop = sets[j] != sets[i] || j < i;
    }
    if (!drop) kept.push_back(i);
  }
  return kept;
}

BallSystem minimalize(const BallSystem& h) { return h.subsystem(minimal_ball_indices(h)); }

Vertex median_vertex(const Graph& g, const Ball& b1, const Ball& b2) {
  if (!intersects(b1, b2)) throw PreconditionError("median_vertex: balls are disjoint");
  if (comparable(b1, b2)) throw PreconditionError("median_vertex: balls are comparable");
  if (b1.center == b2.center) return b1.center;
  const Ball& first = b1.center < b2.center ? b1 : b2;
  const Ball& second = b1.center < b2.center ? b2 : b1;
  const auto path = lex_min_shortest_path(g, first.center, second.center);
  const int d = static_cast<int>(path.length());
  const int offset = (first.radius - second.radius + d) / 2;
  if (offset < 0 || offset > d) throw InternalError("median offset outside the center path");
  return path.vertices[offset];
}

Graph intersection_graph(std::span<const Ball> balls) {
  const auto sets = member_bitsets(balls, universe_size(balls));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < balls.size(); ++i) {
    for (std::size_t j = i + 1; j < balls.size(); ++j) {
      if (sets[i].intersects(sets[j])) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return Graph::from_edges(static_cast<int>(balls.size()), edges);
}

Graph intersection_graph(const BallSystem& h) { return intersection_graph(h.balls); }

bool is_matching(const BallSystem& h, std::span<const std::size_t> indices) {
  for (std::size_t a = 0; a < indices.size(); ++a) {
    if (indices[a] >= h.size()) return false;
    for (std::size_t b = a + 1; b < indices.size(); ++b) {
      if (indices[a] == indices[b] || intersects(h.balls[indices[a]], h.balls[indices[b]])) {
        return false;
      }
    }
  }
  return true;
}

std::size_t first_unhit_ball(const BallSystem& h, std::span<const Vertex> vertices) {
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& members = h.balls[i].members;
    bool hit = false;
    for (Vertex v : members) {
      if (std::binary_search(sorted.begin(), sorted.end(), v)) {
        hit = true;
        break;
      }
    }
    if (!hit) return i;
  }
  return h.size();
}

bool is_transversal(const BallSystem& h, std::span<const Vertex> vertices) {
  return first_unhit_ball(h, vertices) == h.size();
}

std::vector<std::vector<std::size_t>> intersection_patterns(
    const BallSystem& h, std::span<const std::size_t> matching) {
  const int n = universe_size(h.balls);
  const auto sets = member_bitsets(h.balls, n);
  std::vector<std::vector<std::size_t>> patterns(h.size());
  for (std::size_t w = 0; w < h.size(); ++w) {
    for (std::size_t pos = 0; pos < matching.size(); ++pos) {
      if (sets[w].intersects(sets[matching[pos]])) patterns[w].push_back(pos);
    }
  }
  return patterns;
}

PackingHypergraph packing_hypergraph(const BallSystem& h,
                                     std::span<const std::size_t> matching) {
  for (std::size_t i : matching) {
    if (i >= h.size()) throw PreconditionError("matching index out of range");
  }
  if (!is_matching(h, matching)) {
    throw PreconditionError("packing_hypergraph: base balls are not pairwise disjoint");
  }
  const auto patterns = intersection_patterns(h, matching);
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> grouped;
  for (std::size_t w = 0; w < h.size(); ++w) {
    if (!patterns[w].empty()) grouped[patterns[w]].push_back(w);
  }
  PackingHypergraph ph;
  ph.matching.assign(matching.begin(), matching.end());
  for (auto& [members, witnesses] : grouped) {
    ph.edges.push_back({members, std::move(witnesses)});
  }
  return ph;
}

}  // namespace ballcover
