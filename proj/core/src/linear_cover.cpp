#include "ballcover/linear_cover.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ballcover/bounds.hpp"
#include "ballcover/errors.hpp"
#include "ballcover/lp.hpp"
#include "ballcover/minor.hpp"
#include "ballcover/random.hpp"
#include "ballcover/sparsify.hpp"

namespace ballcover {
namespace {

std::vector<std::size_t> remap(const std::vector<std::size_t>& local,
                               const std::vector<std::size_t>& origin) {
  std::vector<std::size_t> out;
  out.reserve(local.size());
  for (std::size_t i : local) out.push_back(origin[i]);
  return out;
}

// Adds balls in index order while they stay disjoint from the matching.
void extend_to_maximal(const BallSystem& h, std::vector<std::size_t>& matching) {
  std::vector<bool> used(h.graph->vertex_count(), false);
  std::vector<bool> chosen(h.size(), false);
  for (std::size_t i : matching) {
    chosen[i] = true;
    for (Vertex v : h[i].members) used[v] = true;
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (chosen[i]) continue;
    const auto& members = h[i].members;
    if (std::any_of(members.begin(), members.end(), [&](Vertex v) { return used[v]; })) continue;
    matching.push_back(i);
    for (Vertex v : members) used[v] = true;
  }
  std::sort(matching.begin(), matching.end());
}

// Minor certificate for a dense core of the packing auxiliary graph:
// sparsify the core against the small packing edges and link the surviving
// matching balls through witness balls, which serve as connectors.
std::optional<MinorModel> packing_core_minor(const BallSystem& h, const PackingHypergraph& ph,
                                             int k, const DensityWitness& witness) {
  std::map<std::size_t, int> position;
  for (std::size_t p = 0; p < ph.matching.size(); ++p) position[ph.matching[p]] = static_cast<int>(p);
  MultiHypergraph mh{static_cast<int>(ph.matching.size()), {}};
  std::map<std::pair<int, int>, std::size_t> witness_edge;
  for (const auto& edge : ph.edges) {
    if (edge.members.size() > static_cast<std::size_t>(k)) continue;
    std::vector<int> members(edge.members.begin(), edge.members.end());
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        witness_edge.emplace(std::pair{members[a], members[b]}, mh.edges.size());
      }
    }
    mh.edges.push_back(std::move(members));
  }
  WitnessedPairSet pairs;
  for (const auto& [u, v] : witness.offending_graph.edges()) {
    int a = position.at(witness.offending_balls[u]);
    int b = position.at(witness.offending_balls[v]);
    if (a > b) std::swap(a, b);
    pairs.push_back({a, b, witness_edge.at({a, b})});
  }
  if (pairs.empty()) return std::nullopt;
  try {
    const auto sparse = sparsify_derandomized(mh, pairs, k);
    std::map<int, std::size_t> local;
    std::vector<std::size_t> balls;
    for (int p : sparse.vertices) {
      local[p] = balls.size();
      balls.push_back(ph.matching[p]);
    }
    std::vector<BallPair> edges;
    std::map<BallPair, Ball> connectors;
    std::map<std::vector<std::size_t>, const PackingEdge*> by_members;
    for (const auto& edge : ph.edges) by_members.emplace(edge.members, &edge);
    for (const auto& pair : sparse.kept) {
      const auto& members = mh.edges[pair.witness];
      const std::vector<std::size_t> key(members.begin(), members.end());
      const BallPair link{local.at(pair.u), local.at(pair.v)};
      edges.push_back(link);
      connectors.emplace(link, h[by_members.at(key)->witnesses.front()]);
    }
    return minor_from_connectors(*h.graph, h.subsystem(balls), edges, connectors);
  } catch (const Error&) {
    return std::nullopt;
  }
}

DensityWitness with_origin(DensityWitness witness, const std::vector<std::size_t>& origin) {
  witness.offending_balls = remap(witness.offending_balls, origin);
  return witness;
}

class Cover {
 public:
  Cover(const BallSystem& input, const DensityProfile& profile, std::uint64_t seed,
        const LinearCoverOptions& options)
      : input_(input), profile_(profile), options_(options), seed_state_(seed) {
    const Rational three_halves_d = make_rational(3, 2) * profile.d;
    k_ = std::max(2, ceil(three_halves_d).convert_to<int>());
    e1_limit_ = floor(three_halves_d).convert_to<std::size_t>();
  }

  // Returns the matching found at this level (input indices) and adds the
  // level's transversal to transversal_.
  std::vector<std::size_t> run(const std::vector<std::size_t>& system, std::size_t depth,
                               const std::vector<std::size_t>& parent_matching) {
    CoverLevelStats stats;
    stats.depth = depth;
    const std::size_t stats_slot = levels.size();
    levels.push_back(stats);

    const BallSystem full = input_.subsystem(system);
    const auto kept = minimal_ball_indices(full);
    const std::vector<std::size_t> origin = remap(kept, system);
    const BallSystem work = input_.subsystem(origin);
    stats.balls = work.size();
    if (work.empty()) {
      levels[stats_slot] = stats;
      return {};
    }

    std::vector<std::size_t> matching;
    extend_to_maximal(work, matching);
    check_halving(parent_matching, remap(matching, origin));

    augment(work, origin, matching, stats);
    check_halving(parent_matching, remap(matching, origin));
    stats.matching = matching.size();

    // Cover the balls whose pattern has at most 3d/2 matching balls.
    const auto ph = packing_hypergraph(work, matching);
    std::set<Vertex> level_transversal;
    std::vector<bool> in_e1(work.size(), false);
    for (const auto& edge : ph.edges) {
      if (edge.members.size() > e1_limit_) continue;
      ++stats.small_edges;
      for (std::size_t b : edge.witnesses) in_e1[b] = true;
      const auto piece = near_linear_transversal(work.subsystem(edge.witnesses), profile_,
                                                 splitmix64(seed_state_), options_.trial_budget);
      if (piece.fallback) ++stats.sampling_fallbacks;
      level_transversal.insert(piece.vertices.begin(), piece.vertices.end());
    }
    stats.e1_transversal = level_transversal.size();

    std::vector<std::size_t> e2;
    for (std::size_t b = 0; b < work.size(); ++b) {
      if (!in_e1[b]) e2.push_back(origin[b]);
    }
    stats.e2_balls = e2.size();
    levels[stats_slot] = stats;
    transversal_.insert(level_transversal.begin(), level_transversal.end());
    if (!e2.empty()) {
      if (e2.size() >= system.size()) {
        throw InternalError("recursion did not shrink the ball system");
      }
      run(e2, depth + 1, remap(matching, origin));
    }
    return remap(matching, origin);
  }

  std::vector<Vertex> transversal() const {
    return {transversal_.begin(), transversal_.end()};
  }

  std::vector<CoverLevelStats> levels;

 private:
  // Augmentation loop. Returns once no small packing edge has a fractional
  // transversal above e d |e|.
  void augment(const BallSystem& work, const std::vector<std::size_t>& origin,
                      std::vector<std::size_t>& matching, CoverLevelStats& stats) {
    const Rational threshold_unit = e_upper() * profile_.d;
    std::map<std::vector<std::size_t>, Rational> tau_cache;
    for (;;) {
      const auto ph = packing_hypergraph(work, matching);
      SmallPackingEdges small;
      try {
        small = enumerate_small_packing_edges(ph, k_, profile_.d);
      } catch (const DensityWitnessError& error) {
        DensityWitness witness = error.witness();
        witness.model = packing_core_minor(work, ph, k_, witness);
        throw DensityWitnessError(with_origin(std::move(witness), origin));
      }
      bool replaced = false;
      for (const auto& edge : small.edges) {
        if (edge.members.size() > e1_limit_) continue;
        const BallSystem piece = work.subsystem(edge.witnesses);
        auto cached = tau_cache.find(edge.witnesses);
        if (cached == tau_cache.end()) {
          cached = tau_cache.emplace(edge.witnesses, solve_tau_star(piece).objective).first;
        }
        const std::size_t size = edge.members.size();
        if (cached->second <= threshold_unit * Rational(static_cast<std::int64_t>(size))) continue;

        std::vector<std::size_t> larger;
        try {
          larger = round_fractional_matching(piece, solve_nu_star(piece), profile_).balls;
        } catch (const DensityWitnessError& error) {
          throw DensityWitnessError(with_origin(
              with_origin(error.witness(), edge.witnesses), origin));
        }
        if (larger.size() <= size) {
          ++stats.rounding_fallbacks;
          larger = find_matching_of_size(piece, size + 1, options_.exact_budget).balls;
        }
        if (larger.size() <= size) {
          const Graph g = intersection_graph(piece);
          DensityWitness witness{"tau* = " + to_string(cached->second) + " exceeds e*d*" +
                                     std::to_string(size) + " but nu = " +
                                     std::to_string(larger.size()),
                                 profile_.d,
                                 average_degree(g),
                                 g,
                                 remap(edge.witnesses, origin),
                                 std::nullopt};
          throw DensityWitnessError(std::move(witness));
        }

        std::set<std::size_t> removed;
        for (std::size_t position : edge.members) removed.insert(ph.matching[position]);
        std::vector<std::size_t> next;
        for (std::size_t b : matching) {
          if (!removed.count(b)) next.push_back(b);
        }
        for (std::size_t b : larger) next.push_back(edge.witnesses[b]);
        std::sort(next.begin(), next.end());
        if (!is_matching(work, next)) throw InternalError("augmented matching is not disjoint");
        extend_to_maximal(work, next);
        matching = std::move(next);
        if (++stats.augmentations > work.size()) {
          throw BudgetExceeded("augmentation cap reached",
                               static_cast<std::int64_t>(matching.size()));
        }
        replaced = true;
        break;
      }
      if (!replaced) return;
    }
  }

  // Every ball of the child meets more than 3d/2 parent matching balls, so a
  // child matching above half the parent one yields a minor denser than d.
  void check_halving(const std::vector<std::size_t>& parent, const std::vector<std::size_t>& child) {
    if (parent.empty() || 2 * child.size() <= parent.size()) return;
    std::vector<std::size_t> balls(parent);
    balls.insert(balls.end(), child.begin(), child.end());
    const BallSystem joint = input_.subsystem(balls);
    std::vector<BallPair> edges;
    std::vector<Edge> graph_edges;
    std::map<BallPair, Vertex> medians;
    for (std::size_t a = 0; a < parent.size(); ++a) {
      for (std::size_t b = parent.size(); b < balls.size(); ++b) {
        if (!intersects(joint[a], joint[b])) continue;
        edges.emplace_back(a, b);
        graph_edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        medians.emplace(BallPair{a, b}, median_vertex(*input_.graph, joint[a], joint[b]));
      }
    }
    const Graph g = Graph::from_edges(static_cast<int>(balls.size()), graph_edges);
    DensityWitness witness{"recursive matching of " + std::to_string(child.size()) +
                               " balls exceeds half of " + std::to_string(parent.size()),
                           profile_.d,
                           average_degree(g),
                           g,
                           balls,
                           std::nullopt};
    try {
      witness.model = minor_from_medians(*input_.graph, joint, edges, medians);
    } catch (const Error&) {
    }
    throw DensityWitnessError(std::move(witness));
  }

  const BallSystem& input_;
  const DensityProfile& profile_;
  const LinearCoverOptions& options_;
  std::uint64_t seed_state_;
  int k_ = 2;
  std::size_t e1_limit_ = 1;
  std::set<Vertex> transversal_;
};

}  // namespace

bool CoverCertificate::any_sampling_fallback() const {
  return std::any_of(levels.begin(), levels.end(),
                     [](const CoverLevelStats& level) { return level.sampling_fallbacks > 0; });
}

CoverCertificate linear_cover(const BallSystem& h, const DensityProfile& profile,
                              std::uint64_t seed, const LinearCoverOptions& options) {
  profile.validate();
  CoverCertificate certificate;
  certificate.ratio_bound = constants(profile).c;
  if (h.empty()) return certificate;

  Cover cover(h, profile, seed, options);
  std::vector<std::size_t> all(h.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  certificate.matching = cover.run(all, 0, {});
  certificate.transversal = cover.transversal();
  certificate.levels = std::move(cover.levels);

  if (!is_transversal(h, certificate.transversal)) {
    throw InternalError("cover misses ball " +
                        std::to_string(first_unhit_ball(h, certificate.transversal)));
  }
  if (!is_matching(h, certificate.matching)) throw InternalError("cover matching is not disjoint");
  if (Rational(static_cast<std::int64_t>(certificate.transversal.size())) >
      certificate.ratio_bound * Rational(static_cast<std::int64_t>(certificate.matching.size()))) {
    throw InternalError("cover exceeds its ratio bound");
  }
  return certificate;
}

}  // namespace ballcover
