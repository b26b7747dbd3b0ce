// Per-edge transmission between an infected parent and one child.
//
// Two companion routes live here. sample_edge draws the child's infection
// times given the parent's full timeline (infection and recovery clocks as
// the tree engine knows them; siblings share those clocks). The prob_*
// functions evaluate the same edge law in closed form, conditioning only on
// the parent's two infection times and marginalizing its recovery clocks;
// prob_both_exact is the exact value whose 1/m bound drives the extinction
// argument. Tests hold the two routes against each other.
#ifndef COOPSIR_EDGE_HPP
#define COOPSIR_EDGE_HPP

#include <vector>

#include "coopsir/ext_real.hpp"
#include "coopsir/rates.hpp"
#include "coopsir/rng.hpp"

namespace coopsir {

struct ParentView {
  ExtReal tau_a = ExtReal::infinity();  // parent's infection times
  ExtReal tau_b = ExtReal::infinity();
  ExtReal rho_a = ExtReal::infinity();  // parent's recovery times
  ExtReal rho_b = ExtReal::infinity();
};

struct EdgeOutcome {
  ExtReal child_tau_a = ExtReal::infinity();
  ExtReal child_tau_b = ExtReal::infinity();
};

// Samples the child's infection times. While the parent actively carries
// disease D and the child has never had D, transmission fires at rate
// alpha_D (beta_D once the child has had the other disease). Hazards change
// only at the later parent infection time, the parent recoveries and the
// child's first infection. beta = inf transmits the instant the boosted
// condition and parent activity overlap (A resolved before B when both are
// instantaneous at the same moment). Throws InvalidParent when the parent
// was never infected with either disease.
EdgeOutcome sample_edge(const ParentView& parent, const RateSet& rates, RandomStream& rng);

// P(parent neither transmits A nor recovers from A within a window of
// length delta) = exp(-(mu1 + alpha1) delta). "Disease 1" is the disease
// the parent caught first; callers order the rates accordingly.
double prob_omega1(double delta, const RateSet& rates);

// P(parent transmits A within the window) =
// alpha1/(alpha1+mu1) (1 - exp(-(alpha1+mu1) delta))
double prob_omega2(double delta, const RateSet& rates);

// first-event bound (alpha1+alpha2)/(alpha1+mu1+alpha2+mu2) on transmitting
// both once the parent carries both and the child is fresh
double omega3_bound(const RateSet& rates);

enum class FirstDisease { A, B };

// Exact probability that the child is eventually infected with both
// diseases, given the parent's infection-time gap |tau_B - tau_A| and which
// disease arrived first, marginalizing the parent's recovery clocks.
// Two-phase first-step analysis; see module docs.
double prob_both_exact(double tau_gap, const RateSet& rates, FirstDisease first);

// {0, 0.1, 0.25, 0.5, 1, 2, 5, 10} scaled by 1/max finite rate
std::vector<double> default_gap_grid(const RateSet& rates);

// min over the grid (and both arrival orders) of 1/m - prob_both_exact.
// Requires the extinction hypothesis max(alpha_i/mu_i) <= 1/(m-1); throws
// AssumptionViolated otherwise.
double lemma_bound_margin(const RateSet& rates, double m, const std::vector<double>& gap_grid);

}  // namespace coopsir

#endif
