#include "wellround/lattice.hpp"

#include <numeric>
#include <sstream>

namespace wellround {

namespace {

Integer ceil_half_down(const Scalar& x) {
  // nearest integer to x with halves going down: ceil(x - 1/2)
  return (x - Scalar(Rational(1, 2))).ceil();
}

std::int64_t to_i64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::OutOfRange, "basis coefficient exceeds 64 bits");
  return z.get_si();
}

}  // namespace

bool GramForm::is_positive_definite() const {
  return a.sign() > 0 && (a * c - b * b).sign() > 0;
}

void GramForm::require_positive_definite() const {
  if (!is_positive_definite()) {
    throw Error(ErrorKind::NotPositiveDefinite, "Gram matrix " + to_string() + " is not positive definite");
  }
}

bool GramForm::is_integral() const { return a.is_integer() && b.is_integer() && c.is_integer(); }

std::string GramForm::to_string() const {
  return "[[" + a.to_string() + "," + b.to_string() + "],[" + b.to_string() + "," + c.to_string() + "]]";
}

IntMatrix2 IntMatrix2::operator*(const IntMatrix2& o) const {
  IntMatrix2 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
  }
  return r;
}

IntMatrix2 IntMatrix2::transpose() const {
  IntMatrix2 r;
  r.m = {{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}};
  return r;
}

Unimodular::Unimodular(const IntMatrix2& mat) : IntMatrix2(mat) {
  const std::int64_t d = det();
  if (d != 1 && d != -1) throw Error(ErrorKind::DomainError, "matrix is not unimodular");
}

const char* to_string(LatticeType t) {
  switch (t) {
    case LatticeType::General: return "general";
    case LatticeType::Rectangular: return "rectangular";
    case LatticeType::CentredRectangular: return "centred_rect";
    case LatticeType::Rhombic: return "rhombic";
    case LatticeType::Square: return "square";
    case LatticeType::Hexagonal: return "hexagonal";
  }
  return "?";
}

const char* display_name(LatticeType t) {
  return t == LatticeType::CentredRectangular ? "centred rectangular" : to_string(t);
}

GramForm transform(const GramForm& g, const IntMatrix2& basis) {
  const auto [x1, x2] = std::pair{basis(0, 0), basis(0, 1)};
  const auto [y1, y2] = std::pair{basis(1, 0), basis(1, 1)};
  return {form_inner(g, x1, y1, x1, y1), form_inner(g, x1, y1, x2, y2), form_inner(g, x2, y2, x2, y2)};
}

Scalar form_inner(const GramForm& g, std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2) {
  return g.a * Scalar(x1 * x2) + g.b * Scalar(x1 * y2 + y1 * x2) + g.c * Scalar(y1 * y2);
}

Scalar form_value(const GramForm& g, std::int64_t x, std::int64_t y) { return form_inner(g, x, y, x, y); }

std::pair<GramForm, Unimodular> gauss_reduce(const GramForm& g) {
  g.require_positive_definite();
  Scalar a = g.a, b = g.b, c = g.c;
  // columns of u are the current basis vectors v, w
  std::int64_t u00 = 1, u10 = 0, u01 = 0, u11 = 1;
  for (;;) {
    if (c < a) {
      std::swap(a, c);
      std::swap(u00, u01);
      std::swap(u10, u11);
    }
    const Integer r = ceil_half_down(b / a);
    if (r == 0) break;
    const Scalar rs{Rational(r)};
    c = c - Scalar(2) * rs * b + rs * rs * a;
    b = b - rs * a;
    const std::int64_t ri = to_i64(r);
    u01 -= ri * u00;
    u11 -= ri * u10;
  }
  if (b.sign() < 0) {
    b = -b;
    u01 = -u01;
    u11 = -u11;
  }
  return {GramForm{a, b, c}, Unimodular(IntMatrix2::from_columns(u00, u10, u01, u11))};
}

std::array<std::int64_t, 3> gauss_reduce_int(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a <= 0 || a * c - b * b <= 0) throw Error(ErrorKind::NotPositiveDefinite, "integral Gram not positive definite");
  for (;;) {
    if (c < a) std::swap(a, c);
    // r = ceil(b/a - 1/2) = ceil((2b - a) / 2a), a > 0
    const std::int64_t num = 2 * b - a;
    const std::int64_t den = 2 * a;
    std::int64_t r = num / den;
    if (num % den != 0 && num > 0) ++r;
    if (r == 0) break;
    c = c - 2 * r * b + r * r * a;
    b = b - r * a;
  }
  if (b < 0) b = -b;
  return {a, b, c};
}

LatticeType classify(const GramForm& g) {
  const auto [red, u] = gauss_reduce(g);
  return classify_reduced(red.a, red.b, red.c);
}

bool is_well_rounded(const GramForm& g) {
  const auto [red, u] = gauss_reduce(g);
  return red.a == red.c;
}

Scalar discriminant(const GramForm& g) { return g.a * g.c - g.b * g.b; }

bool is_rational(const GramForm& g) {
  if (g.a.sign() == 0) {
    throw Error(ErrorKind::NotPositiveDefinite, "zero diagonal entry");
  }
  return (g.b / g.a).is_rational() && (g.c / g.a).is_rational();
}

std::array<std::int64_t, 3> integral_primitive(const GramForm& g) {
  if (!is_rational(g)) throw Error(ErrorKind::NotRational, "Gram matrix " + g.to_string() + " is not rational");
  const Rational b = (g.b / g.a).rat();
  const Rational c = (g.c / g.a).rat();
  Integer l;
  mpz_lcm(l.get_mpz_t(), b.get_den_mpz_t(), c.get_den_mpz_t());
  Integer ia = l;
  Integer ib = Rational(b * Rational(l)).get_num();
  Integer ic = Rational(c * Rational(l)).get_num();
  Integer gg = gcd(gcd(ia, ib), ic);
  ia /= gg;
  ib /= gg;
  ic /= gg;
  if (!ia.fits_slong_p() || !ib.fits_slong_p() || !ic.fits_slong_p()) {
    throw Error(ErrorKind::OutOfRange, "integral form entries exceed 64 bits");
  }
  return {ia.get_si(), ib.get_si(), ic.get_si()};
}

namespace presets {
GramForm square() { return {Scalar(1), Scalar(0), Scalar(1)}; }
GramForm hexagonal() { return {Scalar(2), Scalar(1), Scalar(2)}; }
GramForm diag(const Scalar& a, const Scalar& c) { return {a, Scalar(0), c}; }
}  // namespace presets

}  // namespace wellround
