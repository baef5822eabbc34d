#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tribox {

using Rat = boost::multiprecision::mpq_rational;

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Element of the ordered field Q(√2), stored as rat + sq2·√2 with exact
/// rationals. Closed under +,−,×,÷; ordering is decided exactly (a+b√2 = 0
/// iff a = b = 0, since √2 is irrational).
class Scalar {
 public:
  Scalar() : a_(0), b_(0) {}
  Scalar(int v) : a_(v), b_(0) {}            // NOLINT: implicit by design
  Scalar(long v) : a_(v), b_(0) {}           // NOLINT
  Scalar(const Rat& r) : a_(r), b_(0) {}     // NOLINT
  Scalar(Rat r, Rat s) : a_(std::move(r)), b_(std::move(s)) {}

  static Scalar sqrt2() { return Scalar(Rat(0), Rat(1)); }
  static Scalar frac(long num, long den) { return Scalar(Rat(num, den)); }
  /// num/den + (num2/den2)·√2
  static Scalar frac2(long num, long den, long num2, long den2) {
    return Scalar(Rat(num, den), Rat(num2, den2));
  }

  const Rat& rat_part() const { return a_; }
  const Rat& sqrt2_part() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  Scalar operator-() const { return Scalar(-a_, -b_); }

  Scalar& operator+=(const Scalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    // (a+b√2)(c+d√2) = ac+2bd + (ad+bc)√2
    Rat na = a_ * o.a_ + 2 * (b_ * o.b_);
    Rat nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
  friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
  friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
  friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }

  /// Exact sign: -1, 0, +1.
  int sign() const;

  friend bool operator==(const Scalar& l, const Scalar& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }
  friend bool operator!=(const Scalar& l, const Scalar& r) { return !(l == r); }
  friend bool operator<(const Scalar& l, const Scalar& r) {
    return (l - r).sign() < 0;
  }
  friend bool operator>(const Scalar& l, const Scalar& r) { return r < l; }
  friend bool operator<=(const Scalar& l, const Scalar& r) { return !(r < l); }
  friend bool operator>=(const Scalar& l, const Scalar& r) { return !(l < r); }

  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const;

  /// Canonical text form: "p/q", "r/s*sqrt2" or "p/q+r/s*sqrt2" (with '-'
  /// folded into the √2 term when negative). Integers drop the "/1".
  std::string str() const;

  /// Inverse of str(); also accepts forms like "0+1/2*sqrt2" and "-sqrt2".
  static Scalar parse(const std::string& text);

 private:
  Rat a_;  // coefficient of 1
  Rat b_;  // coefficient of √2
};

inline Scalar abs(const Scalar& s) { return s.abs(); }

}  // namespace tribox
