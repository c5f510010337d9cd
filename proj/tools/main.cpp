// ballcover: generators, exact solvers, covers and certificate checks.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 search budget exhausted, 4 density witness.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ballcover/approx.hpp"
#include "ballcover/ball.hpp"
#include "ballcover/errors.hpp"
#include "ballcover/exact.hpp"
#include "ballcover/graph.hpp"
#include "ballcover/io.hpp"
#include "ballcover/linear_cover.hpp"
#include "ballcover/lp.hpp"
#include "ballcover/minor.hpp"
#include "ballcover/random.hpp"

namespace {

using nlohmann::json;
using namespace ballcover;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDensity = 4;

// Ball systems up to this size also get an exact nu for the cover report.
constexpr std::size_t kDeskScaleBalls = 60;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kBudget:
      return kExitBudget;
    case ErrorKind::kDensityWitness:
      return kExitDensity;
    case ErrorKind::kInternal:
      return kExitVerifyFail;
    default:
      return kExitUsage;
  }
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit(const json& report, const std::string& out) {
  Output output(out);
  output.stream() << report.dump(2) << '\n';
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("BALLCOVER_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("BALLCOVER_BUDGET is not a number: '") + env + "'");
    }
  }
  return kDefaultNodeBudget;
}

std::vector<long long> read_integers(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::vector<long long> values;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw InputError("'" + path + "': not an integer: '" + token + "'");
    }
  }
  return values;
}

struct Instance {
  std::shared_ptr<const Graph> graph;
  BallSystem balls;
};

Instance load_instance(const std::string& graph_path, const std::string& balls_path) {
  auto graph = std::make_shared<const Graph>(load_graph(graph_path));
  return {graph, load_balls(balls_path, graph)};
}

json instance_json(const std::string& graph_path, const std::string& balls_path,
                   const Instance& instance, std::optional<std::uint64_t> seed) {
  json j{{"graph", graph_path},
         {"balls", balls_path},
         {"vertices", instance.graph->vertex_count()},
         {"edges", instance.graph->edge_count()},
         {"ball_count", instance.balls.size()}};
  if (seed) j["seed"] = *seed;
  return j;
}

// ---------------------------------------------------------------------------
// gen

struct GenOptions {
  std::string family;
  int rows = 1;
  int cols = 1;
  std::uint64_t seed = 0;
  double keep = 0.5;
  int subdivisions = 1;
  int k = 3;
  int ell = 4;
  int spacing = 1;
  std::string out;
  std::string labels;
};

int run_gen(const GenOptions& o) {
  if (o.family == "broom") {
    const auto broom = gen_broom_counterexample(o.k, o.ell, o.spacing);
    {
      Output output(o.out);
      write_graph(output.stream(), broom.graph);
    }
    std::string labels = o.labels;
    if (labels.empty() && !o.out.empty()) labels = o.out + ".labels.json";
    if (!labels.empty()) emit(to_json(broom), labels);
    return kExitOk;
  }
  static const std::map<std::string, Family> families{
      {"path", Family::kPath},
      {"cycle", Family::kCycle},
      {"grid", Family::kGrid},
      {"king", Family::kKingGrid},
      {"random-king", Family::kRandomKingSubgraph},
      {"random-planar", Family::kRandomPlanar},
      {"random-tree", Family::kRandomTree},
      {"subdivided-grid", Family::kSubdividedGrid},
  };
  const auto it = families.find(o.family);
  if (it == families.end()) throw InputError("unknown family '" + o.family + "'");
  FamilySpec spec{it->second, o.rows, o.cols, o.seed, o.keep, o.subdivisions};
  Output output(o.out);
  write_graph(output.stream(), gen_family(spec));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// balls

struct BallsOptions {
  std::string graph;
  std::string mode = "all-radius";
  int radius = 1;
  int count = 10;
  int max_radius = 2;
  std::uint64_t seed = 0;
  std::string input;
  std::string out;
};

int run_balls(const BallsOptions& o) {
  auto graph = std::make_shared<const Graph>(load_graph(o.graph));
  BallSystem system;
  if (o.mode == "all-radius") {
    if (o.radius < 0) throw InputError("radius must be nonnegative");
    system = all_balls(graph, o.radius);
  } else if (o.mode == "random") {
    if (o.count < 0 || o.max_radius < 0) throw InputError("count and max radius must be nonnegative");
    if (graph->vertex_count() == 0 && o.count > 0) throw InputError("graph has no vertices");
    Rng rng(o.seed);
    std::vector<std::pair<Vertex, int>> specs;
    for (int i = 0; i < o.count; ++i) {
      const auto center = static_cast<Vertex>(rng.uniform(graph->vertex_count()));
      const auto radius = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(o.max_radius) + 1));
      specs.emplace_back(center, radius);
    }
    system = make_ball_system(graph, specs);
  } else if (o.mode == "file") {
    if (o.input.empty()) throw InputError("--input is required in file mode");
    system = load_balls(o.input, graph);
  } else {
    throw InputError("unknown mode '" + o.mode + "'");
  }
  Output output(o.out);
  write_balls(output.stream(), system);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// solve

struct SolveOptions {
  std::string graph;
  std::string balls;
  std::string which = "all";
  std::optional<std::uint64_t> budget;
  bool no_timings = false;
  std::string out;
};

int run_solve(const SolveOptions& o) {
  const auto instance = load_instance(o.graph, o.balls);
  const auto& h = instance.balls;
  const SearchBudget budget{o.budget.value_or(default_budget())};
  const bool all = o.which == "all";
  static const std::vector<std::string> known{"all", "nu", "tau", "nu-star", "tau-star", "vc"};
  if (std::find(known.begin(), known.end(), o.which) == known.end()) {
    throw InputError("unknown quantity '" + o.which + "'");
  }

  json report{{"schema", 1}, {"command", "solve"},
              {"instance", instance_json(o.graph, o.balls, instance, std::nullopt)}};
  json results = json::object();
  json certificates = json::object();
  json timings = json::object();
  std::optional<Rational> nu, tau, nu_star, tau_star;
  int code = kExitOk;

  auto timed = [&](const std::string& name, auto&& body) {
    Stopwatch watch;
    body();
    timings[name] = watch.elapsed_ms();
  };

  try {
    if (all || o.which == "nu-star") {
      timed("nu_star", [&] {
        const auto w = solve_nu_star(h);
        nu_star = w.objective;
        results["nu_star"] = to_string(w.objective);
        certificates["nu_star"] = to_json(w);
      });
    }
    if (all || o.which == "tau-star") {
      timed("tau_star", [&] {
        const auto w = solve_tau_star(h);
        tau_star = w.objective;
        results["tau_star"] = to_string(w.objective);
        certificates["tau_star"] = to_json(w);
      });
    }
    if (all || o.which == "nu") {
      timed("nu", [&] {
        const auto m = exact_nu(h, budget);
        if (!is_matching(h, m.balls)) throw InternalError("matching certificate failed");
        nu = Rational(static_cast<std::int64_t>(m.size));
        results["nu"] = m.size;
        certificates["nu"] = {{"balls", m.balls}, {"nodes", m.nodes}};
      });
    }
    if (all || o.which == "tau") {
      timed("tau", [&] {
        const auto t = exact_tau(h, budget);
        if (!is_transversal(h, t.vertices)) throw InternalError("transversal certificate failed");
        tau = Rational(static_cast<std::int64_t>(t.size));
        results["tau"] = t.size;
        certificates["tau"] = {{"vertices", t.vertices}, {"nodes", t.nodes}};
      });
    }
    if (all || o.which == "vc") {
      timed("vc", [&] { results["vc"] = vc_dimension(h, budget); });
    }
  } catch (const BudgetExceeded& error) {
    report["budget_exceeded"] = {{"message", error.what()}, {"best_bound", error.best_bound()},
                                 {"max_nodes", budget.max_nodes}};
    code = kExitBudget;
  }

  if (nu && nu_star && tau_star && tau) {
    const bool chain = *nu <= *nu_star && *nu_star == *tau_star && *tau_star <= *tau;
    report["duality_chain"] = chain ? "PASS" : "FAIL";
    if (!chain && code == kExitOk) code = kExitVerifyFail;
  }
  report["results"] = std::move(results);
  report["certificates"] = std::move(certificates);
  if (!o.no_timings) report["timings_ms"] = std::move(timings);
  emit(report, o.out);
  return code;
}

// ---------------------------------------------------------------------------
// cover

struct CoverOptions {
  std::string graph;
  std::string balls;
  std::string profile = "planar";
  std::string d;
  int t = 5;
  std::uint64_t seed = 0;
  std::size_t trial_budget = 100;
  std::optional<std::uint64_t> budget;
  bool no_timings = false;
  std::string out;
};

json levels_json(const std::vector<CoverLevelStats>& levels) {
  json out = json::array();
  for (const auto& level : levels) {
    out.push_back({{"depth", level.depth},
                   {"balls", level.balls},
                   {"matching", level.matching},
                   {"small_edges", level.small_edges},
                   {"augmentations", level.augmentations},
                   {"e1_transversal", level.e1_transversal},
                   {"e2_balls", level.e2_balls},
                   {"sampling_fallbacks", level.sampling_fallbacks},
                   {"rounding_fallbacks", level.rounding_fallbacks}});
  }
  return out;
}

int run_cover(const CoverOptions& o) {
  DensityProfile profile = DensityProfile::planar();
  if (o.profile == "custom") {
    if (o.d.empty()) throw InputError("--d is required for a custom profile");
    profile = {parse_rational(o.d), o.t};
  } else if (o.profile != "planar") {
    throw InputError("unknown profile '" + o.profile + "'");
  }
  profile.validate();
  const auto instance = load_instance(o.graph, o.balls);
  const auto& h = instance.balls;
  const SearchBudget budget{o.budget.value_or(default_budget())};

  json report{{"schema", 1}, {"command", "cover"},
              {"instance", instance_json(o.graph, o.balls, instance, o.seed)},
              {"profile", {{"d", to_string(profile.d)}, {"t", profile.t}}}};
  json timings = json::object();
  int code = kExitOk;
  try {
    Stopwatch watch;
    const auto certificate = linear_cover(h, profile, o.seed, {o.trial_budget, budget});
    timings["cover"] = watch.elapsed_ms();
    const bool verified = is_transversal(h, certificate.transversal) &&
                          is_matching(h, certificate.matching);
    report["certificate"] = {{"transversal", certificate.transversal},
                             {"matching", certificate.matching},
                             {"ratio_bound", to_string(certificate.ratio_bound)},
                             {"levels", levels_json(certificate.levels)},
                             {"sampling_fallback", certificate.any_sampling_fallback()},
                             {"verified", verified}};
    const auto t_size = static_cast<std::int64_t>(certificate.transversal.size());
    json ratio{{"transversal", t_size}, {"matching", certificate.matching.size()}};
    if (!certificate.matching.empty()) {
      ratio["transversal_over_matching"] =
          to_string(Rational(t_size, static_cast<std::int64_t>(certificate.matching.size())));
    }
    if (h.size() <= kDeskScaleBalls) {
      try {
        Stopwatch exact_watch;
        const auto nu = exact_nu(h, budget);
        timings["exact_nu"] = exact_watch.elapsed_ms();
        ratio["exact_nu"] = nu.size;
        if (nu.size > 0) {
          ratio["transversal_over_nu"] = to_string(Rational(t_size, static_cast<std::int64_t>(nu.size)));
        }
      } catch (const BudgetExceeded& error) {
        ratio["exact_nu_budget_exceeded"] = error.best_bound();
      }
    }
    report["ratio"] = std::move(ratio);
    if (!verified) code = kExitVerifyFail;
  } catch (const DensityWitnessError& error) {
    report["density_witness"] = to_json(error.witness());
    code = kExitDensity;
  } catch (const BudgetExceeded& error) {
    report["budget_exceeded"] = {{"message", error.what()}, {"best_bound", error.best_bound()}};
    code = kExitBudget;
  }
  if (!o.no_timings) report["timings_ms"] = std::move(timings);
  emit(report, o.out);
  return code;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string graph;
  std::string balls;
  std::string certificate;
};

int report_verdict(bool pass, const std::string& detail) {
  if (pass) {
    std::cout << "PASS\n";
    return kExitOk;
  }
  std::cout << "FAIL: " << detail << '\n';
  return kExitVerifyFail;
}

int run_verify_transversal(const VerifyOptions& o) {
  const auto instance = load_instance(o.graph, o.balls);
  std::vector<Vertex> vertices;
  for (long long v : read_integers(o.certificate)) {
    if (v < 0 || v >= instance.graph->vertex_count()) {
      throw InputError("vertex " + std::to_string(v) + " out of range");
    }
    vertices.push_back(static_cast<Vertex>(v));
  }
  const auto unhit = first_unhit_ball(instance.balls, vertices);
  return report_verdict(unhit == instance.balls.size(),
                        "ball " + std::to_string(unhit) + " is not hit");
}

int run_verify_matching(const VerifyOptions& o) {
  const auto instance = load_instance(o.graph, o.balls);
  const auto& h = instance.balls;
  std::vector<std::size_t> indices;
  for (long long i : read_integers(o.certificate)) {
    if (i < 0 || static_cast<std::size_t>(i) >= h.size()) {
      throw InputError("ball index " + std::to_string(i) + " out of range");
    }
    indices.push_back(static_cast<std::size_t>(i));
  }
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = a + 1; b < indices.size(); ++b) {
      if (indices[a] == indices[b] || intersects(h[indices[a]], h[indices[b]])) {
        return report_verdict(false, "balls " + std::to_string(indices[a]) + " and " +
                                         std::to_string(indices[b]) + " intersect");
      }
    }
  }
  return report_verdict(true, "");
}

int run_verify_minor(const VerifyOptions& o) {
  const Graph host = load_graph(o.graph);
  std::ifstream in(o.certificate);
  if (!in) throw InputError("cannot open '" + o.certificate + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& error) {
    throw InputError(std::string("malformed JSON: ") + error.what());
  }
  const auto model = minor_model_from_json(doc);
  const auto result = verify_minor_model(host, model);
  std::string detail = result.clause + ": " + result.detail;
  for (Vertex w : result.witnesses) detail += " " + std::to_string(w);
  return report_verdict(result.pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ball transversals and packings in graphs"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a host graph");
  gen_cmd->add_option("--family", gen.family,
                      "path, cycle, grid, king, random-king, random-planar, random-tree, "
                      "subdivided-grid or broom")
      ->required();
  gen_cmd->add_option("--rows", gen.rows, "Rows (or vertex count for path, cycle, tree)");
  gen_cmd->add_option("--cols", gen.cols, "Columns");
  gen_cmd->add_option("--seed", gen.seed, "Seed for the random families");
  gen_cmd->add_option("--keep", gen.keep, "Keep probability of non-tree edges");
  gen_cmd->add_option("--subdivisions", gen.subdivisions, "Subdivisions per grid edge");
  gen_cmd->add_option("--k", gen.k, "Broom: number of roots");
  gen_cmd->add_option("--ell", gen.ell, "Broom: radius parameter");
  gen_cmd->add_option("--spacing", gen.spacing, "Broom: depth gap between branch points");
  gen_cmd->add_option("--out", gen.out, "Graph file (default stdout)");
  gen_cmd->add_option("--labels", gen.labels, "Broom labels JSON (default <out>.labels.json)");

  BallsOptions balls;
  auto* balls_cmd = app.add_subcommand("balls", "Generate a ball system");
  balls_cmd->add_option("--graph", balls.graph, "Graph file")->required();
  balls_cmd->add_option("--mode", balls.mode, "all-radius, random or file");
  balls_cmd->add_option("--radius", balls.radius, "Radius for all-radius mode");
  balls_cmd->add_option("--count", balls.count, "Number of random balls");
  balls_cmd->add_option("--max-radius", balls.max_radius, "Largest random radius");
  balls_cmd->add_option("--seed", balls.seed, "Seed for random mode");
  balls_cmd->add_option("--input", balls.input, "Balls file for file mode");
  balls_cmd->add_option("--out", balls.out, "Balls file (default stdout)");

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Exact nu, tau, nu*, tau* and VC-dimension");
  solve_cmd->add_option("--graph", solve.graph, "Graph file")->required();
  solve_cmd->add_option("--balls", solve.balls, "Balls file")->required();
  solve_cmd->add_option("--which", solve.which, "nu, tau, nu-star, tau-star, vc or all");
  solve_cmd->add_option("--budget", solve.budget,
                        "Search node budget (default $BALLCOVER_BUDGET or 10000000)");
  solve_cmd->add_flag("--no-timings", solve.no_timings, "Omit timings from the report");
  solve_cmd->add_option("--out", solve.out, "Report file (default stdout)");

  CoverOptions cover;
  auto* cover_cmd = app.add_subcommand("cover", "Linear-ratio transversal with certificate");
  cover_cmd->add_option("--graph", cover.graph, "Graph file")->required();
  cover_cmd->add_option("--balls", cover.balls, "Balls file")->required();
  cover_cmd->add_option("--profile", cover.profile, "planar or custom");
  cover_cmd->add_option("--d", cover.d, "Custom density bound, e.g. 8 or 15/2");
  cover_cmd->add_option("--t", cover.t, "Custom excluded clique-minor order");
  cover_cmd->add_option("--seed", cover.seed, "Sampling seed");
  cover_cmd->add_option("--trial-budget", cover.trial_budget, "Sampling trials before fallback");
  cover_cmd->add_option("--budget", cover.budget, "Search node budget for exact steps");
  cover_cmd->add_flag("--no-timings", cover.no_timings, "Omit timings from the report");
  cover_cmd->add_option("--out", cover.out, "Report file (default stdout)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate");
  verify_cmd->require_subcommand(1);
  auto* verify_t = verify_cmd->add_subcommand("transversal", "Vertex list hits every ball");
  auto* verify_m = verify_cmd->add_subcommand("matching", "Ball indices are pairwise disjoint");
  auto* verify_minor = verify_cmd->add_subcommand("minor-model", "Minor model JSON is valid");
  for (auto* cmd : {verify_t, verify_m}) {
    cmd->add_option("--graph", verify.graph, "Graph file")->required();
    cmd->add_option("--balls", verify.balls, "Balls file")->required();
    cmd->add_option("--certificate", verify.certificate, "Whitespace-separated integers")->required();
  }
  verify_minor->add_option("--graph", verify.graph, "Host graph file")->required();
  verify_minor->add_option("--certificate", verify.certificate, "Minor model JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& success) {
    return app.exit(success);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*balls_cmd) return run_balls(balls);
    if (*solve_cmd) return run_solve(solve);
    if (*cover_cmd) return run_cover(cover);
    if (*verify_t) return run_verify_transversal(verify);
    if (*verify_m) return run_verify_matching(verify);
    if (*verify_minor) return run_verify_minor(verify);
  } catch (const Error& error) {
    std::cerr << "error (" << to_string(error.kind()) << "): " << error.what() << '\n';
    return exit_code(error.kind());
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
