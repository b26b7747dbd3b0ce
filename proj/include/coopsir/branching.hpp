// Criticality analysis for the single-type process: the thinned offspring
// law (each child is infected with probability alpha/(alpha+mu)), extinction
// probabilities as PGF fixed points, and the sufficient extinction condition
// for the two-type process.
#ifndef COOPSIR_BRANCHING_HPP
#define COOPSIR_BRANCHING_HPP

#include <string>

#include "coopsir/offspring.hpp"
#include "coopsir/rates.hpp"

namespace coopsir {

enum class Criticality { Subcritical, Critical, Supercritical };

std::string to_string(Criticality c);

struct CriticalityReport {
  double ratio = 0.0;      // alpha/mu
  double threshold = 0.0;  // 1/(m-1)
  Criticality classification = Criticality::Subcritical;
  double survival_probability = 0.0;
};

// mean number of children an infected vertex infects: m * alpha/(alpha+mu)
double thinned_mean(const OffspringLaw& p, double alpha, double mu);

// PGF of the thinned law: g(s) = f_p(1 - r + r s), r = alpha/(alpha+mu)
double thinned_pgf(const OffspringLaw& p, double alpha, double mu, double s);

// Smallest fixed point of the thinned PGF in [0, 1]: monotone iteration from
// 0 to 1e-12 (bisection fallback near criticality). Equals 1 exactly when
// thinned_mean <= 1.
double extinction_probability(const OffspringLaw& p, double alpha, double mu);

// Theorem-style classification of the single-type process; requires m > 1.
CriticalityReport classify_single(const OffspringLaw& p, double alpha, double mu);

// true iff max(alpha1/mu1, alpha2/mu2) <= 1/(m-1): extinction of the
// two-type process is then guaranteed regardless of the boosted rates.
bool two_type_extinct_sufficient(const RateSet& rates, const OffspringLaw& p);

}  // namespace coopsir

#endif
