#include "ballcover/approx.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ballcover/bounds.hpp"
#include "ballcover/errors.hpp"
#include "ballcover/minor.hpp"
#include "ballcover/random.hpp"
#include "ballcover/sparsify.hpp"

namespace ballcover {
namespace {

// Best-effort minor certificate for a dense multiset intersection graph:
// sparsify the copies against median hyperedges, keep the copies whose ball
// was selected once, and contract along the medians.
std::optional<MinorModel> dense_multiset_minor(const BallSystem& h,
                                               const std::vector<std::size_t>& copies, int q) {
  const Graph& host = *h.graph;
  MultiHypergraph mh{static_cast<int>(copies.size()), {}};
  std::map<Vertex, std::size_t> hyperedge_of;
  std::map<BallPair, Vertex> medians;
  WitnessedPairSet pairs;
  for (std::size_t a = 0; a < copies.size(); ++a) {
    for (std::size_t b = a + 1; b < copies.size(); ++b) {
      const std::size_t i = copies[a];
      const std::size_t j = copies[b];
      if (i == j || !intersects(h[i], h[j])) continue;
      const BallPair key{std::min(i, j), std::max(i, j)};
      auto found = medians.find(key);
      if (found == medians.end()) found = medians.emplace(key, median_vertex(host, h[i], h[j])).first;
      const Vertex x = found->second;
      auto slot = hyperedge_of.find(x);
      if (slot == hyperedge_of.end()) {
        std::vector<int> members;
        for (std::size_t c = 0; c < copies.size(); ++c) {
          if (h[copies[c]].contains(x)) members.push_back(static_cast<int>(c));
        }
        slot = hyperedge_of.emplace(x, mh.edges.size()).first;
        mh.edges.push_back(std::move(members));
      }
      pairs.push_back({static_cast<int>(a), static_cast<int>(b), slot->second});
    }
  }
  if (pairs.empty()) return std::nullopt;
  try {
    const int k = std::max<int>({q, 2, static_cast<int>(mh.rank())});
    const auto sparse = sparsify_derandomized(mh, pairs, k);
    std::map<std::size_t, int> selected_copies;
    for (int c : sparse.vertices) ++selected_copies[copies[c]];
    std::vector<std::size_t> pattern_balls;
    for (const auto& [ball, count] : selected_copies) {
      if (count == 1) pattern_balls.push_back(ball);
    }
    std::map<std::size_t, std::size_t> position;
    for (std::size_t p = 0; p < pattern_balls.size(); ++p) position[pattern_balls[p]] = p;
    std::vector<BallPair> edges;
    std::map<BallPair, Vertex> local_medians;
    for (const auto& pair : sparse.kept) {
      const auto pi = position.find(copies[pair.u]);
      const auto pj = position.find(copies[pair.v]);
      if (pi == position.end() || pj == position.end()) continue;
      BallPair local{std::min(pi->second, pj->second), std::max(pi->second, pj->second)};
      const BallPair global{std::min(copies[pair.u], copies[pair.v]),
                            std::max(copies[pair.u], copies[pair.v])};
      if (local_medians.emplace(local, medians.at(global)).second) edges.push_back(local);
    }
    if (pattern_balls.empty()) return std::nullopt;
    return minor_from_medians(host, h.subsystem(pattern_balls), edges, local_medians);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

void DensityProfile::validate() const {
  if (d < 1) throw InputError("density bound d must be at least 1, got " + to_string(d));
  if (t < 2) throw InputError("clique-minor order t must be at least 2, got " + std::to_string(t));
}

std::vector<Vertex> caro_wei_independent_set(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> degree(n);
  std::vector<bool> removed(n, false);
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.emplace(degree[v], v);
  }
  auto remove = [&](Vertex v) {
    removed[v] = true;
    queue.erase({degree[v], v});
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({degree[w], w});
      queue.emplace(--degree[w], w);
    }
  };
  std::vector<Vertex> chosen;
  while (!queue.empty()) {
    const Vertex v = queue.begin()->second;
    chosen.push_back(v);
    std::vector<Vertex> closed{v};
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w]) closed.push_back(w);
    }
    for (Vertex w : closed) remove(w);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

RoundedMatching round_fractional_matching(const BallSystem& h, const FractionalSolution& w,
                                          const DensityProfile& profile) {
  profile.validate();
  if (w.side != LpSide::kMatching || !is_feasible(h, w)) {
    throw InputError("weights are not a feasible fractional matching");
  }
  if (minimal_ball_indices(h).size() != h.size()) {
    throw PreconditionError("rounding needs a minimalized ball system");
  }
  const auto n = static_cast<std::int64_t>(std::max<std::size_t>(h.size(), 1));
  RoundedMatching result;
  result.q = n;
  const auto scaled = floor_scale_weights(w, n);

  std::vector<std::size_t> copies;
  for (std::size_t e = 0; e < h.size(); ++e) {
    const BigInt multiplicity = floor(scaled.weights[e] * Rational(n));
    for (BigInt c = 0; c < multiplicity; ++c) copies.push_back(e);
  }
  result.p = static_cast<std::int64_t>(copies.size());
  const Rational threshold = e_upper() * profile.d * Rational(result.q);
  result.guaranteed = ceil(Rational(result.p) / (threshold + 1));
  if (copies.empty()) return result;

  std::vector<Ball> expanded;
  expanded.reserve(copies.size());
  for (std::size_t e : copies) expanded.push_back(h[e]);
  const Graph g = intersection_graph(expanded);
  const Rational density = average_degree(g);
  if (density > threshold) {
    DensityWitness witness{"multiset intersection graph has average degree " + to_string(density) +
                               " above e*d*q = " + to_string(threshold),
                           profile.d,
                           density,
                           g,
                           copies,
                           dense_multiset_minor(h, copies, static_cast<int>(result.q))};
    throw DensityWitnessError(std::move(witness));
  }

  for (Vertex v : caro_wei_independent_set(g)) result.balls.push_back(copies[v]);
  std::sort(result.balls.begin(), result.balls.end());
  if (!is_matching(h, result.balls)) throw InternalError("rounded matching is not disjoint");
  if (BigInt(result.balls.size()) < result.guaranteed) {
    throw InternalError("rounded matching is below its guaranteed size");
  }
  return result;
}

std::int64_t sampling_size(const Rational& tau_star, int delta) {
  if (delta < 1) throw InputError("sampling needs delta >= 1");
  if (tau_star.is_zero()) return 0;
  if (tau_star < 1) throw PreconditionError("sampling needs tau* >= 1, got " + to_string(tau_star));
  const Rational bound = 2 * Rational(delta) * tau_star * log_upper(11 * tau_star);
  return ceil(bound).convert_to<std::int64_t>();
}

SampledTransversal transversal_by_sampling(const BallSystem& h, const FractionalSolution& w,
                                           const DensityProfile& profile, std::uint64_t seed,
                                           std::size_t trial_budget) {
  profile.validate();
  if (w.side != LpSide::kTransversal || !is_feasible(h, w)) {
    throw InputError("weights are not a feasible fractional transversal");
  }
  SampledTransversal result;
  if (h.empty()) return result;
  result.sample_size = sampling_size(w.objective, profile.delta());

  // Integer weights over a common denominator, so draws are exact.
  BigInt scale = 1;
  for (const auto& value : w.weights) {
    const BigInt den = boost::multiprecision::denominator(value);
    scale = scale / boost::multiprecision::gcd(scale, den) * den;
  }
  std::vector<Vertex> support;
  std::vector<BigInt> cumulative;
  BigInt total = 0;
  for (std::size_t v = 0; v < w.weights.size(); ++v) {
    if (w.weights[v].is_zero()) continue;
    total += BigInt(w.weights[v] * Rational(scale));
    support.push_back(static_cast<Vertex>(v));
    cumulative.push_back(total);
  }
  const bool exact = total < (BigInt(1) << 62);
  std::vector<double> cumulative_double;
  for (const auto& c : cumulative) {
    cumulative_double.push_back(Rational(c, total).convert_to<double>());
  }

  Rng rng(seed);
  auto draw = [&]() -> Vertex {
    std::size_t pos;
    if (exact) {
      const BigInt r = rng.uniform(total.convert_to<std::uint64_t>());
      pos = std::upper_bound(cumulative.begin(), cumulative.end(), r) - cumulative.begin();
    } else {
      const double r = rng.unit();
      pos = std::upper_bound(cumulative_double.begin(), cumulative_double.end(), r) -
            cumulative_double.begin();
      pos = std::min(pos, support.size() - 1);
    }
    return support[pos];
  };

  for (std::size_t trial = 0; trial < trial_budget; ++trial) {
    std::vector<Vertex> sample;
    sample.reserve(static_cast<std::size_t>(result.sample_size));
    for (std::int64_t s = 0; s < result.sample_size; ++s) sample.push_back(draw());
    std::sort(sample.begin(), sample.end());
    sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
    if (is_transversal(h, sample)) {
      result.vertices = std::move(sample);
      result.trials = trial + 1;
      return result;
    }
  }
  result.vertices = greedy_set_cover(h);
  result.fallback = true;
  result.trials = trial_budget;
  return result;
}

std::vector<Vertex> greedy_set_cover(const BallSystem& h) {
  if (h.empty()) return {};
  const auto inc = incidence(h);
  std::vector<std::size_t> unhit_count(inc.size());
  for (std::size_t v = 0; v < inc.size(); ++v) unhit_count[v] = inc[v].size();
  std::vector<bool> hit(h.size(), false);
  std::size_t remaining = h.size();
  std::vector<Vertex> chosen;
  while (remaining > 0) {
    const auto best = std::max_element(unhit_count.begin(), unhit_count.end()) - unhit_count.begin();
    chosen.push_back(static_cast<Vertex>(best));
    for (std::size_t ball : inc[best]) {
      if (hit[ball]) continue;
      hit[ball] = true;
      --remaining;
      for (Vertex u : h[ball].members) --unhit_count[u];
    }
  }
  std::sort(chosen.begin(), chosen.end());
  if (!is_transversal(h, chosen)) throw InternalError("greedy cover misses a ball");
  return chosen;
}

SampledTransversal near_linear_transversal(const BallSystem& h, const DensityProfile& profile,
                                           std::uint64_t seed, std::size_t trial_budget) {
  profile.validate();
  if (h.empty()) return {};
  return transversal_by_sampling(h, solve_tau_star(h), profile, seed, trial_budget);
}

CoverConstants constants(const DensityProfile& profile) {
  profile.validate();
  const Rational e = e_upper();
  const Rational d = profile.d;
  const int t = profile.t;
  auto f = [e, d, t](const Rational& nu) -> Rational {
    if (nu <= 0) return Rational(0);
    return 2 * e * Rational(t - 1) * d * nu * log_upper(11 * e * d * nu);
  };
  const Rational three_halves_d = make_rational(3, 2) * d;
  const auto exponent = ceil(three_halves_d).convert_to<std::uint64_t>();
  const Rational base = 1 + make_rational(3, 2) * d * d * e;
  return {f, 2 * pow(base, exponent) * f(three_halves_d)};
}

}  // namespace ballcover
