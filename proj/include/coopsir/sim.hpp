// Generation-by-generation Monte Carlo engine for the two-type process on a
// lazily generated Galton-Watson tree. Only infected vertices are ever
// materialized: a child whose sampled infection times are both infinite has
// no infected descendants on a tree, so its whole subtree is pruned. Each
// replica owns a stream derived from (master_seed, replica_index); replicas
// are independent and may run on worker threads, with aggregation done as a
// deterministic fold over replica index.
#ifndef COOPSIR_SIM_HPP
#define COOPSIR_SIM_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "coopsir/config.hpp"
#include "coopsir/edge.hpp"
#include "coopsir/errors.hpp"
#include "coopsir/node.hpp"

namespace coopsir {

struct GenerationStats {
  int generation = 0;
  std::uint64_t count_ever_a = 0;
  std::uint64_t count_ever_b = 0;
  std::uint64_t count_ever_both = 0;
  std::uint64_t frontier_size = 0;
};

struct ReplicaResult {
  std::vector<GenerationStats> per_generation;  // length max_generation + 1
  bool survived_a = false;   // count_ever_a > 0 at the last generation
  bool survived_b = false;
  bool survived_both = false;
};

struct ExperimentSummary {
  SimConfig config;
  int replicas = 0;
  std::vector<double> mean_ever_a;
  std::vector<double> mean_ever_b;
  std::vector<double> mean_ever_both;
  std::vector<double> mean_frontier;
  std::vector<double> prop_some_a;
  std::vector<double> prop_some_b;
  std::vector<double> prop_some_both;
};

namespace detail {

// internal frontier entry; raw doubles with IEEE inf meaning "never",
// used for comparisons only
struct SimNode {
  double tau_a;
  double tau_b;
};

struct NullObserver {
  void child(int /*generation*/, const ParentView& /*parent*/,
             const EdgeOutcome& /*edge*/) {}
};

template <class Observer>
ReplicaResult run_replica_impl(const SimConfig& cfg, std::uint64_t replica_index,
                               Observer&& observe) {
  RandomStream rng = RandomStream::derive(cfg.master_seed, replica_index);
  const RateSet& r = cfg.rates;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  ReplicaResult result;
  result.per_generation.assign(static_cast<std::size_t>(cfg.max_generation) + 1, {});
  for (int g = 0; g <= cfg.max_generation; ++g) result.per_generation[g].generation = g;

  std::vector<SimNode> frontier;
  std::vector<SimNode> next;
  SimNode root{0.0, 0.0};
  if (cfg.root_state == RootState::OnlyA) root.tau_b = kInf;
  if (cfg.root_state == RootState::OnlyB) root.tau_a = kInf;
  frontier.push_back(root);
  {
    auto& s0 = result.per_generation[0];
    s0.count_ever_a = root.tau_a < kInf ? 1 : 0;
    s0.count_ever_b = root.tau_b < kInf ? 1 : 0;
    s0.count_ever_both = (root.tau_a < kInf && root.tau_b < kInf) ? 1 : 0;
    s0.frontier_size = 1;
  }

  for (int g = 0; g < cfg.max_generation && !frontier.empty(); ++g) {
    next.clear();
    auto& stats = result.per_generation[g + 1];
    for (const SimNode& node : frontier) {
      // recovery clocks: one draw per infected node, shared by all its edges
      ParentView parent;
      parent.tau_a = node.tau_a;
      parent.tau_b = node.tau_b;
      if (node.tau_a < kInf) parent.rho_a = node.tau_a + rng.exponential(r.mu1);
      if (node.tau_b < kInf) parent.rho_b = node.tau_b + rng.exponential(r.mu2);

      const std::uint64_t children = cfg.offspring.sample(rng);
      for (std::uint64_t c = 0; c < children; ++c) {
        const EdgeOutcome edge = sample_edge(parent, r, rng);
        observe(g + 1, parent, edge);
        const bool got_a = edge.child_tau_a.is_finite();
        const bool got_b = edge.child_tau_b.is_finite();
        if (!got_a && !got_b) continue;  // pruned: no path into this subtree
        stats.count_ever_a += got_a ? 1 : 0;
        stats.count_ever_b += got_b ? 1 : 0;
        stats.count_ever_both += (got_a && got_b) ? 1 : 0;
        next.push_back(SimNode{edge.child_tau_a.raw(), edge.child_tau_b.raw()});
      }
      if (next.size() > cfg.frontier_cap) {
        throw FrontierOverflow("infected frontier exceeded cap", next.size());
      }
    }
    stats.frontier_size = next.size();
    frontier.swap(next);
  }

  const auto& last = result.per_generation.back();
  result.survived_a = last.count_ever_a > 0;
  result.survived_b = last.count_ever_b > 0;
  result.survived_both = last.count_ever_both > 0;
  return result;
}

}  // namespace detail

// Simulates one replica, fully deterministic given (master_seed, replica_index).
ReplicaResult run_replica(const SimConfig& cfg, std::uint64_t replica_index);

// Instrumented variant for tests: observe(generation, parent, edge) is called
// for every sampled edge, pruned or not.
template <class Observer>
ReplicaResult run_replica_observed(const SimConfig& cfg, std::uint64_t replica_index,
                                   Observer&& observe) {
  cfg.validate();
  return detail::run_replica_impl(cfg, replica_index, std::forward<Observer>(observe));
}

// Runs cfg.replicas replicas (optionally on several threads) and aggregates.
// The summary depends only on the config, never on scheduling.
ExperimentSummary run_experiment(const SimConfig& cfg, int threads = 1);

struct SupermartingaleSeries {
  std::vector<double> mean_both;       // empirical E[X_n]
  std::vector<double> sem_both;
  std::vector<double> step_mean;       // E[X_{n+1} - X_n], per replica pairing
  std::vector<double> step_sem;
  // largest per-step increase in units of its standard error
  double max_step_z() const;
};

// Empirical E[X_n] per generation under the extinction hypothesis
// max(alpha_i/mu_i) <= 1/(m-1); throws AssumptionViolated otherwise.
SupermartingaleSeries supermartingale_check(const SimConfig& cfg, int replicas);

}  // namespace coopsir

#endif
