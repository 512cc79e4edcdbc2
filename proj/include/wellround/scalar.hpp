#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "wellround/error.hpp"

namespace wellround {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact element of Q or of a real quadratic field Q(sqrt D).
///
/// A value is rat + irr * sqrt(D) with D squarefree and > 1. Pure
/// rationals carry D = 0 and mix freely with any extension; combining two
/// different extensions throws MixedExtension. Every comparison is decided
/// exactly by squaring, never through floating point.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : rat_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(const Rational& v) : rat_(v) { rat_.canonicalize(); }  // NOLINT
  Scalar(Rational rat, Rational irr, std::int64_t d);

  /// sqrt(D) itself; D must be squarefree and > 1.
  static Scalar sqrt_of(std::int64_t d);

  const Rational& rat() const noexcept { return rat_; }
  const Rational& irr() const noexcept { return irr_; }
  /// 0 for rational values.
  std::int64_t radicand() const noexcept { return d_; }

  bool is_rational() const noexcept { return sgn(irr_) == 0; }
  bool is_integer() const { return is_rational() && rat_.get_den() == 1; }
  int sign() const;

  /// rat^2 - irr^2 D, the field norm.
  Rational norm() const;
  Scalar conjugate() const;

  Integer floor() const;
  Integer ceil() const;
  double to_double() const;

  /// "3/2", "-1+2*sqrt(2)", "1/2*sqrt(3)".
  std::string to_string() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

 private:
  static std::int64_t common_radicand(const Scalar& a, const Scalar& b);
  void normalize();

  Rational rat_{0};
  Rational irr_{0};
  std::int64_t d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses "3", "-3/4", "sqrt2", "sqrt(2)", "√2", "3*sqrt(5)",
/// "1+2*sqrt(2)", "1/2-sqrt(3)/4". Throws Error(Parse) on failure.
Scalar parse_scalar(const std::string& text);

bool is_squarefree(std::int64_t d);

/// True when q is the square of a rational; stores the root in *root.
bool rational_sqrt(const Rational& q, Rational* root);

}  // namespace wellround
