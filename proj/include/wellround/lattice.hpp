#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "wellround/scalar.hpp"

namespace wellround {

/// Gram matrix [[a, b], [b, c]] of a planar lattice with respect to some basis.
struct GramForm {
  Scalar a;  // |v|^2
  Scalar b;  // (v, w)
  Scalar c;  // |w|^2

  friend bool operator==(const GramForm&, const GramForm&) = default;

  bool is_positive_definite() const;
  /// Throws NotPositiveDefinite otherwise.
  void require_positive_definite() const;
  bool is_integral() const;
  std::string to_string() const;
};

/// Integer 2x2 matrix; columns are basis vectors in ambient coordinates.
struct IntMatrix2 {
  std::array<std::array<std::int64_t, 2>, 2> m{{{1, 0}, {0, 1}}};

  static IntMatrix2 identity() { return {}; }
  static IntMatrix2 from_columns(std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2) {
    IntMatrix2 r;
    r.m = {{{x1, x2}, {y1, y2}}};
    return r;
  }

  std::int64_t operator()(int i, int j) const { return m[i][j]; }
  std::int64_t det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  IntMatrix2 operator*(const IntMatrix2& o) const;
  IntMatrix2 transpose() const;

  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

/// Basis change with determinant +-1.
struct Unimodular : IntMatrix2 {
  Unimodular() = default;
  explicit Unimodular(const IntMatrix2& mat);
};

enum class LatticeType { General, Rectangular, CentredRectangular, Rhombic, Square, Hexagonal };

inline constexpr std::array<LatticeType, 6> kAllLatticeTypes = {
    LatticeType::General,  LatticeType::Rectangular, LatticeType::CentredRectangular,
    LatticeType::Rhombic,  LatticeType::Square,      LatticeType::Hexagonal};

const char* to_string(LatticeType t);
/// Lower-case, human readable ("centred rectangular").
const char* display_name(LatticeType t);

/// M^T g M.
GramForm transform(const GramForm& g, const IntMatrix2& basis);

/// Gauss-Lagrange reduction. The result satisfies 0 <= 2b <= a <= c and
/// U^T g U equals it.
std::pair<GramForm, Unimodular> gauss_reduce(const GramForm& g);

/// Reduction of an integral Gram matrix in machine integers; same
/// conventions as gauss_reduce. Entries must stay well inside int64.
std::array<std::int64_t, 3> gauss_reduce_int(std::int64_t a, std::int64_t b, std::int64_t c);

/// Type of an already reduced Gram triple (0 <= 2b <= a <= c).
template <typename T>
LatticeType classify_reduced(const T& a, const T& b, const T& c) {
  const bool orthogonal = b == T(0);
  const bool equal_sides = a == c;
  if (orthogonal) return equal_sides ? LatticeType::Square : LatticeType::Rectangular;
  const bool half = a == b + b;
  if (equal_sides) return half ? LatticeType::Hexagonal : LatticeType::Rhombic;
  return half ? LatticeType::CentredRectangular : LatticeType::General;
}

LatticeType classify(const GramForm& g);
bool is_well_rounded(const GramForm& g);
inline bool is_well_rounded_type(LatticeType t) {
  return t == LatticeType::Rhombic || t == LatticeType::Square || t == LatticeType::Hexagonal;
}

/// ac - b^2.
Scalar discriminant(const GramForm& g);

/// Whether some positive multiple of g is a rational matrix.
bool is_rational(const GramForm& g);

/// Rational g rescaled to an integral primitive form (gcd(a, b, c) = 1).
/// Throws NotRational.
std::array<std::int64_t, 3> integral_primitive(const GramForm& g);

/// Value of the form at the integer vector (x, y).
Scalar form_value(const GramForm& g, std::int64_t x, std::int64_t y);
/// Bilinear form of two integer vectors.
Scalar form_inner(const GramForm& g, std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2);

namespace presets {
GramForm square();
/// [[2, 1], [1, 2]], twice the norm form x^2 + xy + y^2.
GramForm hexagonal();
GramForm diag(const Scalar& a, const Scalar& c);
}  // namespace presets

}  // namespace wellround
