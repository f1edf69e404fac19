#pragma once

#include <limits>

#include "pdifmp/error.hpp"

namespace pdifmp {

// A passage time that may be infinite (the path never reaches the barrier).
// Infinity is an explicit state, not a sentinel value.
class HittingTime {
 public:
  static HittingTime at(double t) { return HittingTime(t, true); }
  static HittingTime never() { return HittingTime(0.0, false); }

  bool is_finite() const noexcept { return finite_; }

  double value() const {
    if (!finite_) throw ArgumentError("value() of an infinite hitting time");
    return t_;
  }

  // Finite times compare by value; infinity is larger than every finite time.
  bool before(double t) const noexcept { return finite_ && t_ < t; }

  friend bool operator==(const HittingTime& a, const HittingTime& b) noexcept {
    return a.finite_ == b.finite_ && (!a.finite_ || a.t_ == b.t_);
  }

 private:
  HittingTime(double t, bool finite) : t_(t), finite_(finite) {}

  double t_;
  bool finite_;
};

}  // namespace pdifmp
