#include "ballcover/io.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <istream>
#include <ostream>
#include <sstream>

#include "ballcover/errors.hpp"

namespace ballcover {
namespace {

using nlohmann::json;

long long read_integer(std::istream& in, const char* what) {
  long long value = 0;
  if (!(in >> value)) throw InputError(std::string("expected ") + what);
  return value;
}

void expect_end(std::istream& in, const char* what) {
  std::string rest;
  if (in >> rest) throw InputError(std::string("trailing data after ") + what + ": '" + rest + "'");
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

}  // namespace

Graph read_graph(std::istream& in) {
  const long long n = read_integer(in, "vertex count");
  const long long m = read_integer(in, "edge count");
  if (n < 0 || m < 0 || n > std::numeric_limits<int>::max()) {
    throw InputError("invalid graph header " + std::to_string(n) + " " + std::to_string(m));
  }
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    const long long u = read_integer(in, "edge endpoint");
    const long long v = read_integer(in, "edge endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  expect_end(in, "the edge list");
  return Graph::from_edges(static_cast<int>(n), edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

BallSystem read_balls(std::istream& in, std::shared_ptr<const Graph> g) {
  std::vector<std::pair<Vertex, int>> specs;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(line);
    long long center = 0;
    long long radius = 0;
    if (!(fields >> center)) {
      std::string rest;
      std::istringstream check(line);
      if (check >> rest) throw InputError("line " + std::to_string(line_number) + ": expected a center");
      continue;  // blank line
    }
    if (!(fields >> radius)) throw InputError("line " + std::to_string(line_number) + ": expected a radius");
    expect_end(fields, "a ball line");
    if (center < 0 || center >= g->vertex_count()) {
      throw InputError("line " + std::to_string(line_number) + ": center " +
                       std::to_string(center) + " out of range");
    }
    if (radius < 0 || radius > std::numeric_limits<int>::max()) {
      throw InputError("line " + std::to_string(line_number) + ": invalid radius " +
                       std::to_string(radius));
    }
    specs.emplace_back(static_cast<Vertex>(center), static_cast<int>(radius));
  }
  return make_ball_system(std::move(g), specs);
}

void write_balls(std::ostream& out, const BallSystem& h) {
  for (const auto& ball : h.balls) out << ball.center << ' ' << ball.radius << '\n';
}

Graph load_graph(const std::string& path) {
  auto in = open(path);
  return read_graph(in);
}

BallSystem load_balls(const std::string& path, std::shared_ptr<const Graph> g) {
  auto in = open(path);
  return read_balls(in, std::move(g));
}

json to_json(const FractionalSolution& w) {
  json weights = json::array();
  for (const auto& value : w.weights) weights.push_back(to_string(value));
  return {{"side", w.side == LpSide::kMatching ? "matching" : "transversal"},
          {"objective", to_string(w.objective)},
          {"weights", std::move(weights)}};
}

json to_json(const MinorModel& model) {
  json paths = json::array();
  for (const auto& path : model.edge_paths) paths.push_back(path.vertices);
  return {{"schema", 1},
          {"pattern", graph_json(model.pattern)},
          {"branch_sets", model.branch_sets},
          {"edge_paths", std::move(paths)}};
}

json to_json(const DensityWitness& witness) {
  return {{"reason", witness.reason},
          {"declared_d", to_string(witness.declared_d)},
          {"observed_average_degree", to_string(witness.observed_average_degree)},
          {"offending_balls", witness.offending_balls},
          {"offending_graph", graph_json(witness.offending_graph)},
          {"model", witness.model ? to_json(*witness.model) : json(nullptr)}};
}

json to_json(const BroomInstance& broom) {
  json junctions = json::array();
  for (const auto& [pair, vertex] : broom.junctions) {
    junctions.push_back({{"i", pair.first}, {"j", pair.second}, {"vertex", vertex}});
  }
  return {{"schema", 1},
          {"k", broom.k},
          {"ell", broom.ell},
          {"spacing", broom.spacing},
          {"vertices", broom.graph.vertex_count()},
          {"roots", broom.roots},
          {"junctions", std::move(junctions)}};
}

MinorModel minor_model_from_json(const json& doc) {
  try {
    const auto& pattern = doc.at("pattern");
    const int n = pattern.at("vertices").get<int>();
    const auto listed = pattern.at("edges").get<std::vector<std::pair<int, int>>>();
    const auto sets = doc.at("branch_sets").get<std::vector<std::vector<Vertex>>>();
    const auto paths = doc.at("edge_paths").get<std::vector<std::vector<Vertex>>>();
    if (n < 0) throw InputError("negative pattern size");
    if (paths.size() != listed.size()) {
      throw InputError("edge_paths has " + std::to_string(paths.size()) + " entries for " +
                       std::to_string(listed.size()) + " pattern edges");
    }
    MinorModel model;
    std::vector<Edge> edges(listed.begin(), listed.end());
    model.pattern = Graph::from_edges(n, edges);
    model.branch_sets = sets;
    // Paths follow the listed edge order; store them in canonical order.
    std::map<Edge, std::vector<Vertex>> by_edge;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [u, v] = edges[e];
      by_edge[{std::min(u, v), std::max(u, v)}] = paths[e];
    }
    for (const auto& edge : model.pattern.edges()) {
      model.edge_paths.push_back(PathInGraph{by_edge.at(edge)});
    }
    return model;
  } catch (const json::exception& error) {
    throw InputError(std::string("malformed minor model: ") + error.what());
  }
}

}  // namespace ballcover
