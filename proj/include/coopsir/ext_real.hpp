// Extended non-negative reals: a finite double or the distinguished value
// "infinity". Event times (infected_at = inf means "never") and boosted
// rates live in this type. Infinity is a tag checked before any arithmetic;
// sums and differences never push an IEEE special through a float op.
#ifndef COOPSIR_EXT_REAL_HPP
#define COOPSIR_EXT_REAL_HPP

#include <cassert>
#include <cmath>
#include <limits>

namespace coopsir {

class ExtReal {
 public:
  constexpr ExtReal() : v_(0.0) {}
  constexpr ExtReal(double v) : v_(v) {}  // NOLINT: implicit by design

  static constexpr ExtReal infinity() {
    return ExtReal(std::numeric_limits<double>::infinity());
  }

  constexpr bool is_inf() const {
    return v_ == std::numeric_limits<double>::infinity();
  }
  constexpr bool is_finite() const { return !is_inf(); }

  // finite value; callers must branch on is_inf() first
  constexpr double finite() const {
    assert(is_finite());
    return v_;
  }

  // underlying double (inf allowed); for comparisons and serialization only
  constexpr double raw() const { return v_; }

  friend constexpr bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
  friend constexpr bool operator<(ExtReal a, ExtReal b) { return a.v_ < b.v_; }
  friend constexpr bool operator<=(ExtReal a, ExtReal b) { return a.v_ <= b.v_; }
  friend constexpr bool operator>(ExtReal a, ExtReal b) { return a.v_ > b.v_; }
  friend constexpr bool operator>=(ExtReal a, ExtReal b) { return a.v_ >= b.v_; }

  friend constexpr ExtReal operator+(ExtReal a, ExtReal b) {
    if (a.is_inf() || b.is_inf()) return infinity();
    return ExtReal(a.v_ + b.v_);
  }

 private:
  double v_;
};

// a - b for finite a, b; the only subtraction the model needs
constexpr double finite_diff(ExtReal a, ExtReal b) {
  return a.finite() - b.finite();
}

}  // namespace coopsir

#endif
