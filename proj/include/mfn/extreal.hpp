#pragma once

#include <cmath>
#include <limits>
#include <string>

namespace mfn {

// Extended-real value in (0, +inf] as used for weights and norms. Infinity is
// an explicit state set by divergence detection, never the result of overflow.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  constexpr ExtReal(double v) : v_(v) {}

  static constexpr ExtReal infinite() {
    ExtReal e;
    e.inf_ = true;
    return e;
  }

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }

  // Finite value; meaningless when infinite (callers must check first).
  double value() const { return inf_ ? std::numeric_limits<double>::infinity() : v_; }

  ExtReal operator*(double s) const { return inf_ ? *this : ExtReal(v_ * s); }

  friend ExtReal operator+(ExtReal a, ExtReal b) {
    if (a.inf_ || b.inf_) return infinite();
    return ExtReal(a.v_ + b.v_);
  }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.inf_ != b.inf_) return false;
    return a.inf_ || a.v_ == b.v_;
  }

 private:
  double v_ = 0.0;
  bool inf_ = false;
};

// Renders "inf" for the infinite state, otherwise a round-trip safe decimal.
std::string to_string(const ExtReal& x);

}  // namespace mfn
