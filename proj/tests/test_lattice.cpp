#include <random>

#include "doctest.h"
#include "wellround/io.hpp"
#include "wellround/lattice.hpp"

using namespace wellround;

namespace {

GramForm gram(std::int64_t a, std::int64_t b, std::int64_t c) { return {Scalar(a), Scalar(b), Scalar(c)}; }

Unimodular random_unimodular(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> step(0, 3);
  std::uniform_int_distribution<std::int64_t> coef(-3, 3);
  IntMatrix2 u = IntMatrix2::identity();
  for (int i = 0; i < 6; ++i) {
    const std::int64_t k = coef(rng);
    IntMatrix2 e;
    switch (step(rng)) {
      case 0: e = IntMatrix2::from_columns(1, 0, k, 1); break;
      case 1: e = IntMatrix2::from_columns(1, k, 0, 1); break;
      case 2: e = IntMatrix2::from_columns(0, 1, 1, 0); break;
      default: e = IntMatrix2::from_columns(1, 0, 0, -1); break;
    }
    u = u * e;
  }
  return Unimodular(u);
}

GramForm random_form(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(-20, 20);
  for (;;) {
    const std::int64_t a = std::abs(d(rng)) + 1, b = d(rng), c = std::abs(d(rng)) + 1;
    if (a * c - b * b > 0) return gram(a, b, c);
  }
}

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
  const Scalar r2 = Scalar::sqrt_of(2);
  CHECK(r2 * r2 == Scalar(2));
  CHECK((Scalar(1) - r2).sign() < 0);
  CHECK((Scalar(3) - Scalar(2) * r2).sign() > 0);  // 3 > 2.828
  CHECK((Scalar(Rational(7, 5)) - r2).sign() < 0);
  CHECK((Scalar(1) / (Scalar(1) + r2)) == r2 - Scalar(1));
  CHECK((Scalar(1) + r2).floor() == 2);
  CHECK((-r2).floor() == -2);
  CHECK_THROWS_AS(r2 + Scalar::sqrt_of(3), Error);
  CHECK(parse_scalar("1+2*sqrt(2)") == Scalar(Rational(1), Rational(2), 2));
  CHECK(parse_scalar("sqrt(8)") == Scalar(Rational(0), Rational(2), 2));
  CHECK(parse_scalar("3/2").rat() == Rational(3, 2));
}

TEST_CASE("gauss_reduce examples") {
  auto [r1, u1] = gauss_reduce(gram(1, 0, 1));
  CHECK(r1 == gram(1, 0, 1));
  CHECK(u1 == IntMatrix2::identity());
  auto [r2, u2] = gauss_reduce(gram(5, 4, 5));
  CHECK(r2 == gram(2, 1, 5));
  CHECK(transform(gram(5, 4, 5), u2) == r2);
  CHECK(gauss_reduce(gram(2, -1, 2)).first == gram(2, 1, 2));
  CHECK_THROWS_AS(gauss_reduce(gram(1, 2, 1)), Error);
}

TEST_CASE("reduced minimum equals brute-force minimum on [[5,4],[4,5]]") {
  std::int64_t best = 1 << 30;
  for (std::int64_t x = -5; x <= 5; ++x)
    for (std::int64_t y = -5; y <= 5; ++y)
      if (x || y) best = std::min(best, 5 * x * x + 8 * x * y + 5 * y * y);
  CHECK(best == 2);
}

TEST_CASE("classification examples") {
  CHECK(classify(gram(1, 0, 1)) == LatticeType::Square);
  CHECK(classify(gram(2, 1, 2)) == LatticeType::Hexagonal);
  CHECK(classify(gram(3, 1, 3)) == LatticeType::Rhombic);
  CHECK(classify(gram(5, 4, 5)) == LatticeType::CentredRectangular);
  CHECK(classify(gram(1, 0, 2)) == LatticeType::Rectangular);
  CHECK(classify(gram(3, 1, 4)) == LatticeType::General);
  CHECK_FALSE(is_well_rounded(gram(1, 0, 2)));
  CHECK(is_well_rounded(gram(3, 1, 3)));
  CHECK(is_well_rounded(gram(2, 1, 2)));
}

TEST_CASE("discriminant and rationality") {
  const Scalar r2 = Scalar::sqrt_of(2);
  CHECK(discriminant(gram(1, 0, 1)) == Scalar(1));
  CHECK(discriminant(gram(2, 1, 2)) == Scalar(3));
  CHECK(discriminant(presets::diag(Scalar(1), r2)) == r2);
  CHECK(is_rational(gram(1, 0, 2)));
  CHECK(is_rational(presets::diag(r2, Scalar(2) * r2)));
  CHECK_FALSE(is_rational(presets::diag(Scalar(1), r2)));
  CHECK(integral_primitive(GramForm{Scalar(Rational(1, 2)), Scalar(Rational(1, 4)), Scalar(Rational(1, 2))}) ==
        std::array<std::int64_t, 3>{2, 1, 2});
}

TEST_CASE("1000 randomized reduction properties") {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::int64_t> lam(1, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    const GramForm g = random_form(rng);
    const auto [red, u] = gauss_reduce(g);
    // reduced chain 0 <= 2b <= a <= c
    REQUIRE(red.b.sign() >= 0);
    REQUIRE((red.a - Scalar(2) * red.b).sign() >= 0);
    REQUIRE((red.c - red.a).sign() >= 0);
    REQUIRE(transform(g, u) == red);
    const GramForm moved = transform(g, random_unimodular(rng));
    REQUIRE(gauss_reduce(moved).first == red);
    REQUIRE(classify(moved) == classify(g));
    const Scalar scale(Rational(lam(rng), lam(rng)));
    REQUIRE(classify(GramForm{scale * g.a, scale * g.b, scale * g.c}) == classify(g));
    REQUIRE(is_well_rounded(g) == (red.a == red.c));
    // a' is the minimum of the form
    const std::int64_t a = g.a.rat().get_num().get_si(), c = g.c.rat().get_num().get_si();
    const std::int64_t box = 1 + (c + a - 1) / a + 2;
    Scalar best = g.a;
    for (std::int64_t x = -box; x <= box; ++x)
      for (std::int64_t y = -box; y <= box; ++y)
        if ((x || y) && form_value(g, x, y) < best) best = form_value(g, x, y);
    REQUIRE(best == red.a);
  }
}

TEST_CASE("reduction over a quadratic field") {
  const Scalar r2 = Scalar::sqrt_of(2);
  const GramForm g{Scalar(1), Scalar(0), r2};
  const GramForm sub = transform(g, IntMatrix2::from_columns(1, 1, 1, -1));
  const auto [red, u] = gauss_reduce(sub);
  CHECK(red.a == Scalar(1) + r2);
  CHECK(red.c == Scalar(1) + r2);
  CHECK(classify(sub) == LatticeType::Rhombic);
}
