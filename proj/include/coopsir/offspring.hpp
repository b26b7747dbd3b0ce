// Offspring distributions for the Galton-Watson tree: closed-form mean,
// probability generating function, and exact sampling.
#ifndef COOPSIR_OFFSPRING_HPP
#define COOPSIR_OFFSPRING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "coopsir/rng.hpp"

namespace coopsir {

class OffspringLaw {
 public:
  enum class Kind { Deterministic, Binomial, Poisson, Geometric, Explicit };

  static OffspringLaw deterministic(std::uint64_t k);
  static OffspringLaw binomial(std::uint64_t n, double p);
  static OffspringLaw poisson(double lambda);
  // success probability p on support {0, 1, 2, ...}; mean (1-p)/p
  static OffspringLaw geometric(double p);
  // probability vector (index = child count); must sum to 1 within 1e-12
  static OffspringLaw explicit_probs(std::vector<double> probs);

  Kind kind() const { return kind_; }
  double mean() const;
  // f(s) = E[s^N] for s in [0, 1]
  double pgf(double s) const;
  std::uint64_t sample(RandomStream& rng) const;

  // "deterministic(2)", "binomial(4,0.5)", ... used in config echoes
  std::string describe() const;

 private:
  OffspringLaw(Kind kind, double a, double b, std::vector<double> probs)
      : kind_(kind), a_(a), b_(b), probs_(std::move(probs)) {}

  Kind kind_;
  double a_ = 0.0;  // k / n / lambda / p (per kind)
  double b_ = 0.0;  // binomial p
  std::vector<double> probs_;
};

}  // namespace coopsir

#endif
