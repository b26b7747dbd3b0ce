#include "coopsir/branching.hpp"

#include <cmath>

#include "coopsir/errors.hpp"

namespace coopsir {

std::string to_string(Criticality c) {
  switch (c) {
    case Criticality::Subcritical: return "subcritical";
    case Criticality::Critical: return "critical";
    case Criticality::Supercritical: return "supercritical";
  }
  return "subcritical";
}

double thinned_mean(const OffspringLaw& p, double alpha, double mu) {
  if (!(mu > 0.0)) throw NonPositiveRecovery("mu must be > 0");
  return p.mean() * alpha / (alpha + mu);
}

double thinned_pgf(const OffspringLaw& p, double alpha, double mu, double s) {
  const double r = alpha / (alpha + mu);
  return p.pgf(1.0 - r + r * s);
}

double extinction_probability(const OffspringLaw& p, double alpha, double mu) {
  if (!(mu > 0.0)) throw NonPositiveRecovery("mu must be > 0");
  if (thinned_mean(p, alpha, mu) <= 1.0) return 1.0;

  constexpr double kTol = 1e-12;
  constexpr int kMaxIter = 100000;
  double s = 0.0;
  for (int i = 0; i < kMaxIter; ++i) {
    const double next = thinned_pgf(p, alpha, mu, s);
    if (std::abs(next - s) <= kTol) return next;
    s = next;
  }

  // near-critical: iterates crawl; bisect g(s) - s on [0, 1 - 1e-9] instead
  const auto h = [&](double v) { return thinned_pgf(p, alpha, mu, v) - v; };
  double lo = 0.0;
  double hi = 1.0 - 1e-9;
  if (h(hi) > 0.0) return 1.0;  // smallest fixed point indistinguishable from 1
  for (int i = 0; i < 200 && hi - lo > kTol; ++i) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) > 0.0 ? lo : hi) = mid;
  }
  const double root = 0.5 * (lo + hi);
  if (std::abs(h(root)) > 1e-8) {
    throw NonConvergence("extinction fixed point did not converge");
  }
  return root;
}

CriticalityReport classify_single(const OffspringLaw& p, double alpha, double mu) {
  if (!(mu > 0.0)) throw NonPositiveRecovery("mu must be > 0");
  const double m = p.mean();
  if (!(m > 1.0)) throw MeanNotAboveOne("offspring mean must exceed 1");
  CriticalityReport report;
  report.ratio = alpha / mu;
  report.threshold = 1.0 / (m - 1.0);
  const double rel = 1e-12 * std::max(1.0, report.threshold);
  if (report.ratio > report.threshold + rel) {
    report.classification = Criticality::Supercritical;
  } else if (report.ratio >= report.threshold - rel) {
    report.classification = Criticality::Critical;
  } else {
    report.classification = Criticality::Subcritical;
  }
  report.survival_probability = 1.0 - extinction_probability(p, alpha, mu);
  return report;
}

bool two_type_extinct_sufficient(const RateSet& rates, const OffspringLaw& p) {
  const double m = p.mean();
  if (!(m > 1.0)) throw MeanNotAboveOne("offspring mean must exceed 1");
  const double ratio = std::max(rates.alpha1 / rates.mu1, rates.alpha2 / rates.mu2);
  const double threshold = 1.0 / (m - 1.0);
  return ratio <= threshold * (1.0 + 1e-12);
}

}  // namespace coopsir
