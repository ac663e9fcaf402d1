#pragma once

#include <cassert>
#include <cmath>
#include <limits>
#include <string>

#include <gmpxx.h>

namespace sepcover {

/// Arbitrary-precision rational scalar with an infinity sentinel.
///
/// Doubles convert losslessly (every finite double is a binary rational),
/// so re-running a computation over Exact gives the real-arithmetic answer
/// for the same inputs the double path saw. Only the ring operations the
/// solvers need are provided.
class Exact {
 public:
  Exact() : v_(0) {}
  Exact(int i) : v_(i) {}
  explicit Exact(double d) {
    if (std::isinf(d)) {
      inf_ = true;
    } else {
      assert(std::isfinite(d));
      v_ = mpq_class(d);
    }
  }

  static Exact infinity() {
    Exact e;
    e.inf_ = true;
    return e;
  }

  bool is_inf() const { return inf_; }

  double to_double() const {
    return inf_ ? std::numeric_limits<double>::infinity() : v_.get_d();
  }

  std::string to_string() const {
    return inf_ ? "inf" : v_.get_str();
  }

  Exact& operator+=(const Exact& o) {
    if (inf_ || o.inf_) {
      inf_ = true;
    } else {
      v_ += o.v_;
    }
    return *this;
  }
  Exact& operator-=(const Exact& o) {
    assert(!o.inf_);  // never subtract infinity
    if (!inf_) v_ -= o.v_;
    return *this;
  }

  friend Exact operator+(Exact a, const Exact& b) { return a += b; }
  friend Exact operator-(Exact a, const Exact& b) { return a -= b; }

  friend bool operator==(const Exact& a, const Exact& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Exact& a, const Exact& b) { return !(a == b); }
  friend bool operator<(const Exact& a, const Exact& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator>(const Exact& a, const Exact& b) { return b < a; }
  friend bool operator<=(const Exact& a, const Exact& b) { return !(b < a); }
  friend bool operator>=(const Exact& a, const Exact& b) { return !(a < b); }

  const mpq_class& value() const {
    assert(!inf_);
    return v_;
  }

 private:
  mpq_class v_;
  bool inf_ = false;
};

/// Uniform access to "infinity" and conversions for the scalar types the
/// solvers are instantiated with (double for the fast path, Exact for the
/// verify path).
template <class R>
struct num;

template <>
struct num<double> {
  static double inf() { return std::numeric_limits<double>::infinity(); }
  static bool is_inf(double v) { return std::isinf(v); }
  static double from_double(double v) { return v; }
  static double to_double(double v) { return v; }
};

template <>
struct num<Exact> {
  static Exact inf() { return Exact::infinity(); }
  static bool is_inf(const Exact& v) { return v.is_inf(); }
  static Exact from_double(double v) { return Exact(v); }
  static double to_double(const Exact& v) { return v.to_double(); }
};

}  // namespace sepcover
