#include "coopsir/sim.hpp"

#include <atomic>
#include <cmath>
#include <optional>
#include <thread>

#include "coopsir/branching.hpp"

namespace coopsir {

ReplicaResult run_replica(const SimConfig& cfg, std::uint64_t replica_index) {
  cfg.validate();
  return detail::run_replica_impl(cfg, replica_index, detail::NullObserver{});
}

namespace {

// runs all replicas, storing results by index; worker threads pull indices
// from a shared counter so the partition never affects the output
std::vector<ReplicaResult> run_all_replicas(const SimConfig& cfg, int threads) {
  cfg.validate();
  const int n = cfg.replicas;
  std::vector<std::optional<ReplicaResult>> slots(n);
  threads = std::max(1, std::min(threads, n));

  if (threads == 1) {
    for (int i = 0; i < n; ++i) {
      try {
        slots[i] = run_replica(cfg, static_cast<std::uint64_t>(i));
      } catch (const FrontierOverflow& e) {
        throw FrontierOverflow(std::string(e.what()) + " (replica " + std::to_string(i) + ")",
                               e.frontier_size, i);
      }
    }
  } else {
    std::atomic<int> cursor{0};
    std::atomic<int> failed_replica{-1};
    std::vector<std::thread> pool;
    std::vector<std::uint64_t> overflow_size(threads, 0);
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (;;) {
          const int i = cursor.fetch_add(1);
          if (i >= n || failed_replica.load() >= 0) return;
          try {
            slots[i] = run_replica(cfg, static_cast<std::uint64_t>(i));
          } catch (const FrontierOverflow& e) {
            overflow_size[w] = e.frontier_size;
            int expected = -1;
            failed_replica.compare_exchange_strong(expected, i);
            return;
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (const int bad = failed_replica.load(); bad >= 0) {
      std::uint64_t size = 0;
      for (const auto s : overflow_size) size = std::max(size, s);
      throw FrontierOverflow("infected frontier exceeded cap (replica " +
                                 std::to_string(bad) + ")",
                             size, bad);
    }
  }

  std::vector<ReplicaResult> results;
  results.reserve(n);
  for (auto& s : slots) results.push_back(std::move(*s));
  return results;
}

}  // namespace

ExperimentSummary run_experiment(const SimConfig& cfg, int threads) {
  const auto results = run_all_replicas(cfg, threads);
  const int n = cfg.replicas;
  const std::size_t gens = static_cast<std::size_t>(cfg.max_generation) + 1;

  ExperimentSummary summary;
  summary.config = cfg;
  summary.replicas = n;
  summary.mean_ever_a.assign(gens, 0.0);
  summary.mean_ever_b.assign(gens, 0.0);
  summary.mean_ever_both.assign(gens, 0.0);
  summary.mean_frontier.assign(gens, 0.0);
  summary.prop_some_a.assign(gens, 0.0);
  summary.prop_some_b.assign(gens, 0.0);
  summary.prop_some_both.assign(gens, 0.0);

  for (const auto& res : results) {
    for (std::size_t g = 0; g < gens; ++g) {
      const auto& s = res.per_generation[g];
      summary.mean_ever_a[g] += static_cast<double>(s.count_ever_a);
      summary.mean_ever_b[g] += static_cast<double>(s.count_ever_b);
      summary.mean_ever_both[g] += static_cast<double>(s.count_ever_both);
      summary.mean_frontier[g] += static_cast<double>(s.frontier_size);
      summary.prop_some_a[g] += s.count_ever_a > 0 ? 1.0 : 0.0;
      summary.prop_some_b[g] += s.count_ever_b > 0 ? 1.0 : 0.0;
      summary.prop_some_both[g] += s.count_ever_both > 0 ? 1.0 : 0.0;
    }
  }
  for (std::size_t g = 0; g < gens; ++g) {
    summary.mean_ever_a[g] /= n;
    summary.mean_ever_b[g] /= n;
    summary.mean_ever_both[g] /= n;
    summary.mean_frontier[g] /= n;
    summary.prop_some_a[g] /= n;
    summary.prop_some_b[g] /= n;
    summary.prop_some_both[g] /= n;
  }
  return summary;
}

double SupermartingaleSeries::max_step_z() const {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < step_mean.size(); ++i) {
    const double sem = step_sem[i];
    const double z = sem > 0.0 ? step_mean[i] / sem : (step_mean[i] > 0.0 ? 1e300 : 0.0);
    worst = std::max(worst, z);
  }
  return worst;
}

SupermartingaleSeries supermartingale_check(const SimConfig& cfg, int replicas) {
  if (!two_type_extinct_sufficient(cfg.rates, cfg.offspring)) {
    throw AssumptionViolated("supermartingale check requires max(alpha_i/mu_i) <= 1/(m-1)");
  }
  SimConfig run_cfg = cfg;
  run_cfg.replicas = replicas;
  run_cfg.validate();

  const std::size_t gens = static_cast<std::size_t>(cfg.max_generation) + 1;
  std::vector<double> sum(gens, 0.0), sum_sq(gens, 0.0);
  std::vector<double> dsum(gens - 1, 0.0), dsum_sq(gens - 1, 0.0);
  for (int i = 0; i < replicas; ++i) {
    const ReplicaResult res = run_replica(run_cfg, static_cast<std::uint64_t>(i));
    for (std::size_t g = 0; g < gens; ++g) {
      const double x = static_cast<double>(res.per_generation[g].count_ever_both);
      sum[g] += x;
      sum_sq[g] += x * x;
      if (g + 1 < gens) {
        const double next =
            static_cast<double>(res.per_generation[g + 1].count_ever_both);
        const double d = next - x;
        dsum[g] += d;
        dsum_sq[g] += d * d;
      }
    }
  }

  const auto finish = [&](const std::vector<double>& s, const std::vector<double>& s2,
                          std::vector<double>& mean, std::vector<double>& sem) {
    const double n = static_cast<double>(replicas);
    mean.resize(s.size());
    sem.resize(s.size());
    for (std::size_t g = 0; g < s.size(); ++g) {
      mean[g] = s[g] / n;
      const double var = std::max(0.0, s2[g] / n - mean[g] * mean[g]);
      sem[g] = std::sqrt(var / n);
    }
  };
  SupermartingaleSeries series;
  finish(sum, sum_sq, series.mean_both, series.sem_both);
  finish(dsum, dsum_sq, series.step_mean, series.step_sem);
  return series;
}

}  // namespace coopsir
