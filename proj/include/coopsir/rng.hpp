// Deterministic random streams. The core generator is a counter-based
// splitmix64: the state is a Weyl counter advanced by a fixed odd gamma and
// each output is a strong 64-bit mix of the counter. Streams for Monte Carlo
// replicas are derived from (master_seed, replica_index) by hashing, so any
// replica can be regenerated in isolation and results do not depend on the
// order replicas are scheduled. The exact derivation is pinned in
// docs/formats.md.
#ifndef COOPSIR_RNG_HPP
#define COOPSIR_RNG_HPP

#include <cstdint>

namespace coopsir {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// Stafford mix13 finalizer; bijective on 64-bit words.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  // Stream for replica i of an experiment keyed by master_seed. Injective in
  // the replica index for a fixed master seed.
  static RandomStream derive(std::uint64_t master_seed, std::uint64_t replica_index) {
    return RandomStream(mix64(master_seed ^ mix64(kGolden * (replica_index + 1))));
  }

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  // uniform on [0, 1) with 53 random bits
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Exp(1) via a 256-layer ziggurat; exact, no discretization
  double exp1();

  // Exp(rate), rate > 0 finite
  double exponential(double rate) { return exp1() / rate; }

  std::uint64_t poisson(double lambda);
  std::uint64_t binomial(std::uint64_t n, double p);
  // failures before the first success; support {0, 1, 2, ...}, p in (0, 1]
  std::uint64_t geometric(double p);

 private:
  std::uint64_t state_;
};

}  // namespace coopsir

#endif
