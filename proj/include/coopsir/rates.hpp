// The six transmission/recovery rates of the two-type process. Base rates
// alpha_i and recoveries mu_i are finite; boosted rates beta_i live in
// [alpha_i, inf]. alpha_i = 0 disables disease i entirely, which is how
// single-type experiments run through the same engine.
#ifndef COOPSIR_RATES_HPP
#define COOPSIR_RATES_HPP

#include "coopsir/ext_real.hpp"

namespace coopsir {

struct RateSet {
  double alpha1 = 0.0;
  ExtReal beta1 = 0.0;
  double mu1 = 1.0;
  double alpha2 = 0.0;
  ExtReal beta2 = 0.0;
  double mu2 = 1.0;
};

// Returns r unchanged when all invariants hold, otherwise throws
// NegativeRate, BoostBelowBase or NonPositiveRecovery.
RateSet validate_rates(const RateSet& r);

// beta_i / alpha_i in [1, inf]; requires alpha_i > 0
ExtReal cooperativity1(const RateSet& r);
ExtReal cooperativity2(const RateSet& r);

// view of the rates with the two diseases swapped (A <-> B)
RateSet swapped(const RateSet& r);

}  // namespace coopsir

#endif
