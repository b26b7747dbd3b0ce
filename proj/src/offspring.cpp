#include "coopsir/offspring.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "coopsir/errors.hpp"

namespace coopsir {

OffspringLaw OffspringLaw::deterministic(std::uint64_t k) {
  return OffspringLaw(Kind::Deterministic, static_cast<double>(k), 0.0, {});
}

OffspringLaw OffspringLaw::binomial(std::uint64_t n, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw BadConfig("binomial p must be in [0, 1]");
  return OffspringLaw(Kind::Binomial, static_cast<double>(n), p, {});
}

OffspringLaw OffspringLaw::poisson(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw BadConfig("poisson lambda must be finite and >= 0");
  }
  return OffspringLaw(Kind::Poisson, lambda, 0.0, {});
}

OffspringLaw OffspringLaw::geometric(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw BadConfig("geometric p must be in (0, 1]");
  return OffspringLaw(Kind::Geometric, p, 0.0, {});
}

OffspringLaw OffspringLaw::explicit_probs(std::vector<double> probs) {
  if (probs.empty()) throw BadConfig("explicit law needs at least one probability");
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw BadConfig("explicit law probabilities must be >= 0");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw BadConfig("explicit law probabilities must sum to 1 (got " +
                    std::to_string(sum) + ")");
  }
  return OffspringLaw(Kind::Explicit, 0.0, 0.0, std::move(probs));
}

double OffspringLaw::mean() const {
  switch (kind_) {
    case Kind::Deterministic: return a_;
    case Kind::Binomial: return a_ * b_;
    case Kind::Poisson: return a_;
    case Kind::Geometric: return (1.0 - a_) / a_;
    case Kind::Explicit: {
      double m = 0.0;
      for (std::size_t k = 0; k < probs_.size(); ++k) m += static_cast<double>(k) * probs_[k];
      return m;
    }
  }
  return 0.0;
}

double OffspringLaw::pgf(double s) const {
  switch (kind_) {
    case Kind::Deterministic: return std::pow(s, a_);
    case Kind::Binomial: return std::pow(1.0 - b_ + b_ * s, a_);
    case Kind::Poisson: return std::exp(a_ * (s - 1.0));
    case Kind::Geometric: return a_ / (1.0 - (1.0 - a_) * s);
    case Kind::Explicit: {
      // Horner over the probability vector
      double acc = 0.0;
      for (auto it = probs_.rbegin(); it != probs_.rend(); ++it) acc = acc * s + *it;
      return acc;
    }
  }
  return 0.0;
}

std::uint64_t OffspringLaw::sample(RandomStream& rng) const {
  switch (kind_) {
    case Kind::Deterministic: return static_cast<std::uint64_t>(a_);
    case Kind::Binomial: return rng.binomial(static_cast<std::uint64_t>(a_), b_);
    case Kind::Poisson: return rng.poisson(a_);
    case Kind::Geometric: return rng.geometric(a_);
    case Kind::Explicit: {
      double u = rng.uniform01();
      for (std::size_t k = 0; k + 1 < probs_.size(); ++k) {
        if (u < probs_[k]) return k;
        u -= probs_[k];
      }
      return probs_.size() - 1;
    }
  }
  return 0;
}

std::string OffspringLaw::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Deterministic:
      os << "deterministic(" << static_cast<std::uint64_t>(a_) << ")";
      break;
    case Kind::Binomial:
      os << "binomial(" << static_cast<std::uint64_t>(a_) << "," << b_ << ")";
      break;
    case Kind::Poisson: os << "poisson(" << a_ << ")"; break;
    case Kind::Geometric: os << "geometric(" << a_ << ")"; break;
    case Kind::Explicit: {
      os << "explicit(";
      for (std::size_t k = 0; k < probs_.size(); ++k) {
        if (k) os << ",";
        os << probs_[k];
      }
      os << ")";
      break;
    }
  }
  return os.str();
}

}  // namespace coopsir
