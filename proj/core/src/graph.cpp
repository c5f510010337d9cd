#include "ballcover/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "ballcover/errors.hpp"

namespace ballcover {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  adjacency_.resize(vertex_count);
}

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (const auto& [u, v] : edges) {
    if (!g.contains(u) || !g.contains(v)) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint outside [0, " + std::to_string(vertex_count) + ")");
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < vertex_count; ++v) {
    auto& list = g.adjacency_[v];
    std::sort(list.begin(), list.end());
    const auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      throw InputError("repeated edge (" + std::to_string(std::min(v, *dup)) + ", " +
                       std::to_string(std::max(v, *dup)) + ")");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> position(vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    position[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : adjacency_[vertices[i]]) {
      const int j = position[w];
      if (j > static_cast<int>(i)) kept.emplace_back(static_cast<int>(i), j);
    }
  }
  return from_edges(static_cast<int>(vertices.size()), kept);
}

std::vector<int> multi_source_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (!g.contains(s)) throw InputError("source " + std::to_string(s) + " out of range");
    if (dist[s] == 0) continue;
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  const Vertex sources[] = {source};
  return multi_source_distances(g, sources);
}

PathInGraph lex_min_shortest_path(const Graph& g, Vertex s, Vertex x,
                                  std::span<const int> dist_from_s,
                                  std::span<const int> dist_from_x) {
  const int total = dist_from_s[x];
  if (total == kUnreachable) {
    throw NoPathError("no path between " + std::to_string(s) + " and " + std::to_string(x));
  }
  PathInGraph path;
  path.vertices.reserve(total + 1);
  Vertex current = s;
  path.vertices.push_back(current);
  while (current != x) {
    // Neighbors are sorted, so the first one on a shortest s-x path is the
    // smallest.
    Vertex next = -1;
    for (Vertex w : g.neighbors(current)) {
      if (dist_from_s[w] == dist_from_s[current] + 1 && dist_from_x[w] != kUnreachable &&
          dist_from_s[w] + dist_from_x[w] == total) {
        next = w;
        break;
      }
    }
    if (next < 0) throw InternalError("inconsistent distance arrays in lex_min_shortest_path");
    current = next;
    path.vertices.push_back(current);
  }
  return path;
}

PathInGraph lex_min_shortest_path(const Graph& g, Vertex s, Vertex x) {
  if (!g.contains(s) || !g.contains(x)) throw InputError("path endpoint out of range");
  const auto from_s = bfs_distances(g, s);
  if (from_s[x] == kUnreachable) {
    throw NoPathError("no path between " + std::to_string(s) + " and " + std::to_string(x));
  }
  const auto from_x = bfs_distances(g, x);
  return lex_min_shortest_path(g, s, x, from_s, from_x);
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

int eccentricity(const Graph& g, Vertex v) {
  const auto dist = bfs_distances(g, v);
  return *std::max_element(dist.begin(), dist.end());
}

}  // namespace ballcover
