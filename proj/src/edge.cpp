#include "coopsir/edge.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <limits>

#include "coopsir/errors.hpp"

namespace coopsir {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

EdgeOutcome sample_edge(const ParentView& parent, const RateSet& rates, RandomStream& rng) {
  if (parent.tau_a.is_inf() && parent.tau_b.is_inf()) {
    throw InvalidParent("parent has no finite infection time");
  }
  const double ta = parent.tau_a.raw();
  const double tb = parent.tau_b.raw();
  const double ra = parent.rho_a.raw();
  const double rb = parent.rho_b.raw();
  const bool inst_a = rates.beta1.is_inf();
  const bool inst_b = rates.beta2.is_inf();

  bool had_a = false;
  bool had_b = false;
  EdgeOutcome out;
  double t = std::min(ta, tb);

  for (;;) {
    if (had_a && had_b) break;

    // pending instantaneous boosted transmissions, A resolved before B
    if (!had_a && had_b && inst_a && ta <= t && t < ra) {
      had_a = true;
      out.child_tau_a = t;
      continue;
    }
    if (!had_b && had_a && inst_b && tb <= t && t < rb) {
      had_b = true;
      out.child_tau_b = t;
      continue;
    }

    // finite hazards at the current instant (instantaneous cases consumed above)
    double hazard_a = 0.0;
    double hazard_b = 0.0;
    if (!had_a && ta <= t && t < ra) {
      hazard_a = had_b ? rates.beta1.finite() : rates.alpha1;
    }
    if (!had_b && tb <= t && t < rb) {
      hazard_b = had_a ? rates.beta2.finite() : rates.alpha2;
    }
    const double hazard = hazard_a + hazard_b;

    double t_next = kInf;
    for (const double e : {ta, tb, ra, rb}) {
      if (e > t && e < t_next) t_next = e;
    }

    if (hazard <= 0.0) {
      if (t_next == kInf) break;
      t = t_next;
      continue;
    }
    const double step = rng.exp1() / hazard;
    if (t + step < t_next) {
      t += step;
      if (rng.uniform01() * hazard < hazard_a) {
        had_a = true;
        out.child_tau_a = t;
      } else {
        had_b = true;
        out.child_tau_b = t;
      }
    } else {
      // overshoot past a hazard-change epoch: redraw (memorylessness)
      if (t_next == kInf) break;
      t = t_next;
    }
  }
  return out;
}

double prob_omega1(double delta, const RateSet& rates) {
  assert(delta >= 0.0 && std::isfinite(delta));
  return std::exp(-(rates.mu1 + rates.alpha1) * delta);
}

double prob_omega2(double delta, const RateSet& rates) {
  assert(delta >= 0.0 && std::isfinite(delta));
  const double lam = rates.alpha1 + rates.mu1;
  if (lam <= 0.0) return 0.0;
  return (rates.alpha1 / lam) * -std::expm1(-lam * delta);
}

double omega3_bound(const RateSet& rates) {
  const double denom = rates.alpha1 + rates.mu1 + rates.alpha2 + rates.mu2;
  assert(denom > 0.0);
  return (rates.alpha1 + rates.alpha2) / denom;
}

namespace {

// Absorbing-chain value iteration over the 16 phase-2 states
// (parent A active, parent B active, child had A, child had B). Transitions
// only switch activity off or had-flags on, so plain memoized recursion is
// already a topological elimination.
class Phase2Chain {
 public:
  explicit Phase2Chain(const RateSet& r)
      : a1_(r.alpha1),
        m1_(r.mu1),
        a2_(r.alpha2),
        m2_(r.mu2),
        inst1_(r.beta1.is_inf()),
        inst2_(r.beta2.is_inf()),
        b1_(inst1_ ? 0.0 : r.beta1.finite()),
        b2_(inst2_ ? 0.0 : r.beta2.finite()) {
    seen_.fill(false);
  }

  double success_prob(bool pa, bool pb, bool ca, bool cb) {
    if (ca && cb) return 1.0;
    if ((!ca && !pa) || (!cb && !pb)) return 0.0;  // a disease can no longer arrive
    if (ca && !cb && pb && inst2_) return 1.0;     // instantaneous boosted B
    if (cb && !ca && pa && inst1_) return 1.0;     // instantaneous boosted A
    const int key = (pa ? 1 : 0) | (pb ? 2 : 0) | (ca ? 4 : 0) | (cb ? 8 : 0);
    if (seen_[key]) return memo_[key];

    double total = 0.0;
    double acc = 0.0;
    const auto add = [&](double rate, bool npa, bool npb, bool nca, bool ncb) {
      if (rate <= 0.0) return;
      total += rate;
      acc += rate * success_prob(npa, npb, nca, ncb);
    };
    if (pa) add(m1_, false, pb, ca, cb);
    if (pb) add(m2_, pa, false, ca, cb);
    if (!ca && pa) add(cb ? b1_ : a1_, pa, pb, true, cb);
    if (!cb && pb) add(ca ? b2_ : a2_, pa, pb, ca, true);

    const double value = total > 0.0 ? acc / total : 0.0;
    seen_[key] = true;
    memo_[key] = value;
    return value;
  }

 private:
  double a1_, m1_, a2_, m2_;
  bool inst1_, inst2_;
  double b1_, b2_;
  std::array<double, 16> memo_{};
  std::array<bool, 16> seen_{};
};

}  // namespace

double prob_both_exact(double tau_gap, const RateSet& rates, FirstDisease first) {
  assert(tau_gap >= 0.0 && std::isfinite(tau_gap));
  const RateSet r = (first == FirstDisease::B) ? swapped(rates) : rates;

  // phase 1 on [0, gap): transmission of the first disease races the
  // parent's recovery from it; anything else waits for the second infection
  const double lam = r.alpha1 + r.mu1;
  double p_hold = 1.0;
  double p_transmit = 0.0;
  if (tau_gap > 0.0) {
    p_hold = std::exp(-lam * tau_gap);
    p_transmit = (r.alpha1 / lam) * -std::expm1(-lam * tau_gap);
  }

  // child already carries the first disease when the second arrives: the
  // boosted second transmission races the parent's second recovery
  const double p_second =
      r.beta2.is_inf() ? 1.0 : r.beta2.finite() / (r.beta2.finite() + r.mu2);

  Phase2Chain chain(r);
  return p_transmit * p_second + p_hold * chain.success_prob(true, true, false, false);
}

std::vector<double> default_gap_grid(const RateSet& rates) {
  double max_rate = std::max({rates.alpha1, rates.mu1, rates.alpha2, rates.mu2});
  if (rates.beta1.is_finite()) max_rate = std::max(max_rate, rates.beta1.finite());
  if (rates.beta2.is_finite()) max_rate = std::max(max_rate, rates.beta2.finite());
  assert(max_rate > 0.0);
  std::vector<double> grid{0.0, 0.1, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0};
  for (double& g : grid) g /= max_rate;
  return grid;
}

double lemma_bound_margin(const RateSet& rates, double m, const std::vector<double>& gap_grid) {
  if (!(m > 1.0)) {
    throw AssumptionViolated("lemma bound needs offspring mean m > 1");
  }
  const double ratio = std::max(rates.alpha1 / rates.mu1, rates.alpha2 / rates.mu2);
  const double threshold = 1.0 / (m - 1.0);
  if (ratio > threshold * (1.0 + 1e-12)) {
    throw AssumptionViolated("rates violate max(alpha_i/mu_i) <= 1/(m-1)");
  }
  double margin = std::numeric_limits<double>::infinity();
  for (const double gap : gap_grid) {
    for (const FirstDisease first : {FirstDisease::A, FirstDisease::B}) {
      margin = std::min(margin, 1.0 / m - prob_both_exact(gap, rates, first));
    }
  }
  return margin;
}

}  // namespace coopsir
