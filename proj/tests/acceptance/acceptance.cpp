// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Instance counts, bounds and tolerances are pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>

#include "ballcover/approx.hpp"
#include "ballcover/bounds.hpp"
#include "ballcover/errors.hpp"
#include "ballcover/exact.hpp"
#include "ballcover/linear_cover.hpp"
#include "ballcover/lp.hpp"
#include "ballcover/minor.hpp"
#include "ballcover/random.hpp"
#include "ballcover/sparsify.hpp"
#include "oracles.hpp"

using namespace ballcover;

namespace {

constexpr int kDualityInstances = 1000;
constexpr int kVcInstances = 200;
constexpr int kSparsifyInstances = 500;
constexpr int kEnumerationInstances = 200;
constexpr int kMinorInputs = 10000;
constexpr int kRoundingInstances = 200;
constexpr int kSamplingInstances = 100;
constexpr int kSamplingSeeds = 100;
constexpr double kMaxFallbackRate = 0.5;
constexpr int kPlanarT = 5;

constexpr double kBudgetSeconds[11] = {0, 300, 1, 120, 300, 300, 300, 300, 300, 300, 600};

std::shared_ptr<const Graph> shared(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

Rational count(std::size_t n) { return Rational(static_cast<std::int64_t>(n)); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first violation; later ones only bump the counter.
class Tally {
 public:
  void fail(const std::string& what) {
    if (violations_++ == 0) first_ = what;
  }
  void check(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  Outcome outcome(const std::string& summary) const {
    if (violations_ == 0) return {true, summary};
    return {false, std::to_string(violations_) + " violation(s); first: " + first_};
  }

 private:
  std::size_t violations_ = 0;
  std::string first_;
};

std::string tag(std::uint64_t seed) { return "seed " + std::to_string(seed); }

Outcome duality_chain() {
  Tally tally;
  for (std::uint64_t seed = 0; seed < kDualityInstances; ++seed) {
    Graph g;
    switch (seed % 3) {
      case 0: g = gen_family({Family::kGrid, 2 + static_cast<int>(seed % 4), 2 + static_cast<int>(seed / 3 % 7)}); break;
      case 1: g = gen_family({Family::kRandomKingSubgraph, 2 + static_cast<int>(seed % 4), 5 + static_cast<int>(seed / 3 % 4), seed, 0.4}); break;
      default: g = gen_family({Family::kRandomTree, 5 + static_cast<int>(seed % 36), 1, seed}); break;
    }
    const auto h = oracle::random_system(shared(std::move(g)), 1 + seed % 15, 3, seed * 31 + 7);
    const auto nu = exact_nu(h);
    const auto tau = exact_tau(h);
    const auto nu_star = solve_nu_star(h);
    const auto tau_star = solve_tau_star(h);
    tally.check(oracle::pairwise_disjoint(h, nu.balls) && nu.balls.size() == nu.size, "bad matching at " + tag(seed));
    tally.check(oracle::hits_all(h, tau.vertices) && tau.vertices.size() == tau.size, "bad transversal at " + tag(seed));
    tally.check(is_feasible(h, nu_star) && is_feasible(h, tau_star), "infeasible LP weights at " + tag(seed));
    tally.check(count(nu.size) <= nu_star.objective, "nu > nu* at " + tag(seed));
    tally.check(nu_star.objective == tau_star.objective, "nu* != tau* at " + tag(seed));
    tally.check(tau_star.objective <= count(tau.size), "tau* > tau at " + tag(seed));
  }
  return tally.outcome(std::to_string(kDualityInstances) + " instances, nu <= nu* = tau* <= tau exactly");
}

Outcome c5() {
  const auto h = all_balls(shared(gen_family({Family::kCycle, 5})), 1);
  const auto nu = exact_nu(h).size;
  const auto tau = exact_tau(h).size;
  const auto nu_star = solve_nu_star(h).objective;
  const auto tau_star = solve_tau_star(h).objective;
  const bool ok = nu == 1 && tau == 2 && nu_star == make_rational(5, 3) && tau_star == make_rational(5, 3);
  return {ok, "nu=" + std::to_string(nu) + " tau=" + std::to_string(tau) + " nu*=" + to_string(nu_star) +
                  " tau*=" + to_string(tau_star)};
}

Outcome brooms() {
  std::ostringstream detail;
  bool ok = true;
  for (const auto& [k, ell, expected_tau] : {std::tuple{4, 10, 2u}, std::tuple{6, 28, 3u}}) {
    auto broom = gen_broom_counterexample(k, ell, 1);
    const auto h = all_balls(shared(std::move(broom.graph)), ell);
    const auto nu = exact_nu(h);
    const auto tau = exact_tau(h);
    const bool verified = oracle::pairwise_disjoint(h, nu.balls) && oracle::hits_all(h, tau.vertices);
    ok = ok && verified && nu.size == 1 && tau.size == expected_tau && 2 * tau.size >= static_cast<std::size_t>(k);
    detail << "G_{" << k << "," << ell << "}: nu=" << nu.size << " tau=" << tau.size << "; ";
  }
  return {ok, detail.str()};
}

Outcome vc_bound() {
  Tally tally;
  int largest = 0;
  for (std::uint64_t seed = 0; seed < kVcInstances; ++seed) {
    const Graph g = seed % 2 ? gen_family({Family::kGrid, 3 + static_cast<int>(seed % 4), 3 + static_cast<int>(seed / 2 % 4)})
                             : gen_family({Family::kSubdividedGrid, 2 + static_cast<int>(seed % 3), 3, 0, 0.5,
                                           1 + static_cast<int>(seed / 2 % 2)});
    const auto h = oracle::random_system(shared(g), 10 + seed % 15, 4, seed + 1000);
    const int vc = vc_dimension(h);
    largest = std::max(largest, vc);
    tally.check(vc <= kPlanarT - 1, "vc=" + std::to_string(vc) + " at " + tag(seed));
  }
  return tally.outcome(std::to_string(kVcInstances) + " planar systems, max vc=" + std::to_string(largest));
}

Outcome derandomization() {
  Tally tally;
  for (std::uint64_t seed = 0; seed < kSparsifyInstances; ++seed) {
    Rng rng(seed + 5000);
    const int n = 2 + static_cast<int>(rng.uniform(29));
    const int rank = 2 + static_cast<int>(rng.uniform(std::min(4, n - 1)));
    MultiHypergraph mh{n, {}};
    WitnessedPairSet pairs;
    std::set<std::pair<int, int>> seen;
    const int edges = 1 + static_cast<int>(rng.uniform(3 * n));
    for (int e = 0; e < edges; ++e) {
      const int size = 2 + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(rank - 1)));
      std::set<int> members;
      while (static_cast<int>(members.size()) < size) members.insert(static_cast<int>(rng.uniform(n)));
      std::vector<int> edge(members.begin(), members.end());
      for (std::size_t a = 0; a < edge.size(); ++a)
        for (std::size_t b = a + 1; b < edge.size(); ++b)
          if (rng.uniform(2) == 0 && seen.emplace(edge[a], edge[b]).second)
            pairs.push_back({edge[a], edge[b], mh.edges.size()});
      mh.edges.push_back(std::move(edge));
    }
    if (pairs.empty()) pairs.push_back({mh.edges[0][0], mh.edges[0][1], 0});
    const int k = rank;
    const auto out = sparsify_derandomized(mh, pairs, k);
    const Rational target = Rational(2 * static_cast<std::int64_t>(pairs.size())) /
                            (Rational(n) * oracle::e_bound() * Rational(k));
    const Rational ad = out.vertices.empty() ? Rational(0)
                                             : Rational(2 * static_cast<std::int64_t>(out.kept.size())) /
                                                   count(out.vertices.size());
    tally.check(ad >= target, "ad below target at " + tag(seed));
    std::vector<bool> selected(n, false);
    for (int v : out.vertices) selected[v] = true;
    for (const auto& p : out.kept) {
      bool clean = selected[p.u] && selected[p.v];
      for (int w : mh.edges[p.witness]) clean = clean && (w == p.u || w == p.v || !selected[w]);
      tally.check(clean, "kept pair with a selected third vertex at " + tag(seed));
    }
  }
  return tally.outcome(std::to_string(kSparsifyInstances) + " instances, ad(H) >= 2|E|/(n e k)");
}

Outcome enumeration() {
  Tally tally;
  const Rational d(6);
  for (std::uint64_t seed = 0; seed < kEnumerationInstances; ++seed) {
    const auto g = shared(gen_family({Family::kRandomPlanar, 4 + static_cast<int>(seed % 3), 6, seed, 0.5}));
    const auto h = oracle::random_system(g, 20 + seed % 15, 2, seed + 300);
    std::vector<std::size_t> matching;
    for (std::size_t i = 0; i < h.size(); ++i) {
      matching.push_back(i);
      if (!oracle::pairwise_disjoint(h, matching)) matching.pop_back();
    }
    const int k = 2 + static_cast<int>(seed % 8);
    const auto small = enumerate_small_packing_edges(packing_hypergraph(h, matching), k, d);
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> expected;
    for (const auto& [members, witnesses] : oracle::brute_packing_edges(h, matching))
      if (members.size() <= static_cast<std::size_t>(k)) expected[members] = witnesses;
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> got;
    for (const auto& e : small.edges) got[e.members] = e.witnesses;
    tally.check(got == expected && got.size() == small.edges.size(), "edge sets differ at " + tag(seed));
    // (1 + floor(d e k))^(k-1) |B| with the lower e bound, the tighter side.
    const BigInt base = 1 + ballcover::floor(d * e_lower() * Rational(k));
    BigInt bound = count(matching.size()).convert_to<BigInt>();
    for (int i = 0; i < k - 1; ++i) bound *= base;
    tally.check(BigInt(static_cast<std::uint64_t>(small.cliques_enumerated)) <= bound,
                "clique count over bound at " + tag(seed));
  }
  return tally.outcome(std::to_string(kEnumerationInstances) + " instances equal brute force, clique counts bounded");
}

BallSystem antichain(const BallSystem& h) {
  std::vector<std::size_t> keep;
  std::set<Vertex> centers;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (centers.count(h[i].center)) continue;
    bool ok = true;
    for (std::size_t j : keep) ok = ok && !comparable(h[i], h[j]) && h[i].members != h[j].members;
    if (!ok) continue;
    keep.push_back(i);
    centers.insert(h[i].center);
  }
  return h.subsystem(keep);
}

Outcome minor_models() {
  Tally tally;
  std::size_t internal = 0;
  std::size_t nonempty = 0;
  for (std::uint64_t seed = 0; seed < kMinorInputs; ++seed) {
    const Family family = seed % 3 == 0 ? Family::kRandomPlanar : seed % 3 == 1 ? Family::kRandomKingSubgraph : Family::kGrid;
    const auto g = shared(gen_family({family, 3 + static_cast<int>(seed % 4), 4 + static_cast<int>(seed / 4 % 3), seed, 0.6}));
    try {
      if (seed % 2 == 0) {
        const auto h = antichain(oracle::random_system(g, 6 + seed % 10, 3, seed + 17));
        std::vector<BallPair> pattern;
        std::map<BallPair, Vertex> medians;
        for (std::size_t i = 0; i < h.size(); ++i) {
          for (std::size_t j = i + 1; j < h.size(); ++j) {
            if (!intersects(h[i], h[j])) continue;
            const Vertex x = median_vertex(*g, h[i], h[j]);
            bool clean = true;
            for (std::size_t k = 0; k < h.size(); ++k) clean = clean && (k == i || k == j || !h[k].contains(x));
            if (!clean) continue;
            pattern.emplace_back(i, j);
            medians[{i, j}] = x;
          }
        }
        const auto model = minor_from_medians(*g, h, pattern, medians);
        const auto verdict = verify_minor_model(*g, model, 1);
        tally.check(verdict.pass, "median model failed " + verdict.clause + " at " + tag(seed));
        nonempty += pattern.empty() ? 0 : 1;
      } else {
        const auto raw = oracle::random_system(g, 10 + seed % 10, 1, seed + 23);
        std::vector<std::size_t> disjoint;
        for (std::size_t i = 0; i < raw.size(); ++i) {
          disjoint.push_back(i);
          if (!oracle::pairwise_disjoint(raw, disjoint)) disjoint.pop_back();
        }
        const auto h = raw.subsystem(disjoint);
        std::vector<BallPair> pattern;
        std::map<BallPair, Ball> connectors;
        for (std::size_t i = 0; i < h.size(); ++i) {
          for (std::size_t j = i + 1; j < h.size(); ++j) {
            if (auto c = minimal_connector(*g, h, i, j)) {
              pattern.emplace_back(i, j);
              connectors.emplace(BallPair{i, j}, std::move(*c));
            }
          }
        }
        const auto model = minor_from_connectors(*g, h, pattern, connectors);
        const auto verdict = verify_minor_model(*g, model, 1);
        tally.check(verdict.pass, "connector model failed " + verdict.clause + " at " + tag(seed));
        nonempty += pattern.empty() ? 0 : 1;
      }
    } catch (const InternalError& error) {
      ++internal;
      tally.fail(std::string("internal error at ") + tag(seed) + ": " + error.what());
    }
  }
  return tally.outcome(std::to_string(kMinorInputs) + " inputs (" + std::to_string(nonempty) +
                       " with edges) verified, " + std::to_string(internal) + " internal errors");
}

Outcome rounding() {
  Tally tally;
  const auto profile = DensityProfile::planar();
  for (std::uint64_t seed = 0; seed < kRoundingInstances; ++seed) {
    const auto g = shared(gen_family({seed % 2 ? Family::kRandomPlanar : Family::kGrid, 3 + static_cast<int>(seed % 4),
                                      4 + static_cast<int>(seed / 2 % 3), seed, 0.5}));
    const auto h = minimalize(oracle::random_system(g, 5 + seed % 20, 3, seed + 400));
    const auto w = solve_nu_star(h);
    try {
      const auto r = round_fractional_matching(h, w, profile);
      // ceil(p / (6 e q + 1)) with the lower e bound gives the larger target.
      const Rational target_ratio = Rational(r.p) / (Rational(6) * e_lower() * Rational(r.q) + 1);
      const BigInt target = ballcover::ceil(target_ratio);
      tally.check(oracle::pairwise_disjoint(h, r.balls), "not a matching at " + tag(seed));
      tally.check(BigInt(static_cast<std::uint64_t>(r.balls.size())) >= target, "below guarantee at " + tag(seed));
    } catch (const Error& error) {
      tally.fail(std::string(to_string(error.kind())) + " at " + tag(seed) + ": " + error.what());
    }
  }
  return tally.outcome(std::to_string(kRoundingInstances) + " planar instances meet ceil(p/(6eq+1))");
}

Outcome sampling() {
  Tally tally;
  const auto profile = DensityProfile::planar();
  int accepted = 0;
  std::size_t worst_fallbacks = 0;
  for (std::uint64_t seed = 0; accepted < kSamplingInstances && seed < 100000; ++seed) {
    const auto g = shared(gen_family({seed % 2 ? Family::kRandomPlanar : Family::kGrid, 3 + static_cast<int>(seed % 4),
                                      4 + static_cast<int>(seed / 2 % 3), seed, 0.5}));
    const auto h = oracle::random_system(g, 3 + seed % 12, 2, seed + 600);
    const auto w = solve_tau_star(h);
    if (w.objective < 1 || w.objective > 5) continue;
    ++accepted;
    // ceil(2 * 4 * tau* * log(11 tau*)) with the lower log bound.
    const BigInt bound = ballcover::ceil(Rational(2 * (kPlanarT - 1)) * w.objective * log_lower(Rational(11) * w.objective));
    std::size_t fallbacks = 0;
    for (std::uint64_t s = 0; s < kSamplingSeeds; ++s) {
      const auto t = transversal_by_sampling(h, w, profile, s);
      tally.check(oracle::hits_all(h, t.vertices), "not a transversal at " + tag(seed));
      if (t.fallback) {
        ++fallbacks;
        continue;
      }
      tally.check(BigInt(static_cast<std::uint64_t>(t.vertices.size())) <= bound, "sample too large at " + tag(seed));
    }
    worst_fallbacks = std::max(worst_fallbacks, fallbacks);
    tally.check(static_cast<double>(fallbacks) < kMaxFallbackRate * kSamplingSeeds,
                "fallback rate " + std::to_string(fallbacks) + "% at " + tag(seed));
  }
  tally.check(accepted == kSamplingInstances, "only " + std::to_string(accepted) + " instances with 1 <= tau* <= 5");
  return tally.outcome(std::to_string(accepted) + " instances x " + std::to_string(kSamplingSeeds) +
                       " seeds, worst fallback rate " + std::to_string(worst_fallbacks) + "%");
}

std::vector<std::pair<std::string, BallSystem>> desk_suite() {
  std::vector<std::pair<std::string, BallSystem>> suite;
  suite.emplace_back("C5 r=1", all_balls(shared(gen_family({Family::kCycle, 5})), 1));
  for (const auto& [k, ell] : {std::pair{4, 10}, std::pair{6, 28}}) {
    auto broom = gen_broom_counterexample(k, ell, 1);
    suite.emplace_back("broom " + std::to_string(k) + "," + std::to_string(ell),
                       all_balls(shared(std::move(broom.graph)), ell));
  }
  for (int r = 1; r <= 3; ++r)
    suite.emplace_back("grid 6x6 r=" + std::to_string(r), all_balls(shared(gen_family({Family::kGrid, 6, 6})), r));
  suite.emplace_back("cycle 20 r=2", all_balls(shared(gen_family({Family::kCycle, 20})), 2));
  suite.emplace_back("subdivided grid", all_balls(shared(gen_family({Family::kSubdividedGrid, 3, 4, 0, 0.5, 2})), 2));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Family family = seed % 3 == 0 ? Family::kRandomTree : seed % 3 == 1 ? Family::kRandomPlanar : Family::kGrid;
    const Graph g = family == Family::kRandomTree ? gen_family({family, 30 + static_cast<int>(seed), 1, seed})
                                                  : gen_family({family, 4 + static_cast<int>(seed % 4), 6, seed, 0.5});
    suite.emplace_back("random " + tag(seed), oracle::random_system(shared(g), 15 + seed % 30, 3, seed + 900));
  }
  return suite;
}

Outcome linear_covers() {
  Tally tally;
  const auto profile = DensityProfile::planar();
  const Rational c = constants(profile).c;
  std::size_t exact_done = 0;
  const auto suite = desk_suite();
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto& [name, h] = suite[i];
    try {
      const auto cert = linear_cover(h, profile, i);
      tally.check(oracle::hits_all(h, cert.transversal), name + ": transversal misses a ball");
      tally.check(oracle::pairwise_disjoint(h, cert.matching), name + ": matching intersects");
      tally.check(count(cert.transversal.size()) <= c * count(cert.matching.size()), name + ": |T| > c|B|");
      for (std::size_t l = 1; l < cert.levels.size(); ++l)
        tally.check(cert.levels[l].balls < cert.levels[l - 1].balls, name + ": recursion did not shrink");
      try {
        const auto nu = exact_nu(h, SearchBudget{2'000'000});
        ++exact_done;
        tally.check(count(cert.transversal.size()) <= c * count(nu.size), name + ": |T| > c nu");
      } catch (const BudgetExceeded&) {
      }
    } catch (const Error& error) {
      tally.fail(name + ": " + std::string(to_string(error.kind())) + ": " + error.what());
    }
  }
  return tally.outcome(std::to_string(suite.size()) + " instances verified, exact nu on " +
                       std::to_string(exact_done));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"duality chain", duality_chain},
      {"C5 benchmark", c5},
      {"counterexample family", brooms},
      {"VC bound", vc_bound},
      {"derandomized sparsification", derandomization},
      {"small packing edge enumeration", enumeration},
      {"minor models", minor_models},
      {"rounding guarantee", rounding},
      {"sampling bound", sampling},
      {"linear cover", linear_covers},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& error) {
      outcome = {false, std::string("uncaught: ") + error.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > kBudgetSeconds[i + 1]) {
      outcome.pass = false;
      outcome.detail += "; over the " + std::to_string(static_cast<int>(kBudgetSeconds[i + 1])) + " s limit";
    }
    std::printf("%s criterion %zu: %s (%s) [%.2f s]\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), outcome.detail.c_str(), seconds);
    std::fflush(stdout);
    failures += outcome.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
