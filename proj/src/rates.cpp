#include "coopsir/rates.hpp"

#include <cmath>
#include <string>

#include "coopsir/errors.hpp"

namespace coopsir {
namespace {

void validate_disease(const char* name, double alpha, ExtReal beta, double mu) {
  const std::string tag(name);
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw NegativeRate("alpha" + tag + " must be finite and >= 0");
  }
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw NonPositiveRecovery("mu" + tag + " must be finite and > 0");
  }
  if (beta.is_finite() && std::isnan(beta.raw())) {
    throw BoostBelowBase("beta" + tag + " is NaN");
  }
  if (beta < ExtReal(alpha)) {
    throw BoostBelowBase("beta" + tag + " must be >= alpha" + tag);
  }
}

}  // namespace

RateSet validate_rates(const RateSet& r) {
  validate_disease("1", r.alpha1, r.beta1, r.mu1);
  validate_disease("2", r.alpha2, r.beta2, r.mu2);
  return r;
}

ExtReal cooperativity1(const RateSet& r) {
  if (r.beta1.is_inf()) return ExtReal::infinity();
  return ExtReal(r.beta1.finite() / r.alpha1);
}

ExtReal cooperativity2(const RateSet& r) {
  if (r.beta2.is_inf()) return ExtReal::infinity();
  return ExtReal(r.beta2.finite() / r.alpha2);
}

RateSet swapped(const RateSet& r) {
  return RateSet{r.alpha2, r.beta2, r.mu2, r.alpha1, r.beta1, r.mu1};
}

}  // namespace coopsir
