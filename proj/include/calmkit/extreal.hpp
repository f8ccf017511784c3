#ifndef CALMKIT_EXTREAL_HPP
#define CALMKIT_EXTREAL_HPP

#include <cmath>
#include <ostream>

#include "calmkit/common.hpp"

namespace calmkit {

/// Nonnegative extended real: a finite value or +infinity, kept as a tagged
/// pair so that +infinity is an explicit state, never a silent NaN.
class ExtReal {
 public:
  ExtReal() = default;

  static ExtReal finite(double v) {
    if (!std::isfinite(v)) throw Error("ExtReal: non-finite value");
    ExtReal e;
    e.value_ = v;
    return e;
  }

  static ExtReal infinity() {
    ExtReal e;
    e.inf_ = true;
    return e;
  }

  bool is_infinite() const { return inf_; }

  /// Finite payload; throws when infinite.
  double value() const {
    if (inf_) throw Error("ExtReal: value() on +infinity");
    return value_;
  }

  double value_or(double if_infinite) const {
    return inf_ ? if_infinite : value_;
  }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
    return a.value_ == b.value_;
  }
  friend bool operator<(const ExtReal& a, const ExtReal& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtReal& a, const ExtReal& b) {
    return a == b || a < b;
  }

  friend ExtReal max(const ExtReal& a, const ExtReal& b) {
    return a < b ? b : a;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtReal& e) {
    if (e.inf_) return os << "inf";
    return os << e.value_;
  }

 private:
  double value_ = 0.0;
  bool inf_ = false;
};

}  // namespace calmkit

#endif  // CALMKIT_EXTREAL_HPP
