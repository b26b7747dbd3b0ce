// Error types thrown across the library. Every failure mode callers are
// expected to handle has its own class so tests and the CLI can tell them
// apart without string matching.
#ifndef COOPSIR_ERRORS_HPP
#define COOPSIR_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coopsir {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// RateSet validation
class NegativeRate : public Error {
 public:
  using Error::Error;
};
class BoostBelowBase : public Error {
 public:
  using Error::Error;
};
class NonPositiveRecovery : public Error {
 public:
  using Error::Error;
};

// edge kernel
class InvalidParent : public Error {
 public:
  using Error::Error;
};

// shared by edge-kernel and gw-sim contracts that require the extinction
// hypothesis max(alpha_i/mu_i) <= 1/(m-1)
class AssumptionViolated : public Error {
 public:
  using Error::Error;
};

// branching-oracle
class MeanNotAboveOne : public Error {
 public:
  using Error::Error;
};
class NonConvergence : public Error {
 public:
  using Error::Error;
};

// gw-sim
class FrontierOverflow : public Error {
 public:
  FrontierOverflow(std::string msg, std::uint64_t frontier, int replica = -1)
      : Error(std::move(msg)), frontier_size(frontier), replica_index(replica) {}
  std::uint64_t frontier_size;
  int replica_index;  // -1 when unknown (raised inside a single replica)
};

// meanfield
class StepUnderflow : public Error {
 public:
  using Error::Error;
};
class NoRoot : public Error {
 public:
  using Error::Error;
};

// cli-harness
class BadConfig : public Error {
 public:
  using Error::Error;
};
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace coopsir

#endif
