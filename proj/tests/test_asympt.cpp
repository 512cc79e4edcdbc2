#include <cmath>
#include <random>

#include "doctest.h"
#include "wellround/asympt.hpp"
#include "wellround/wr_hex.hpp"
#include "wellround/wr_square.hpp"

using namespace wellround;

TEST_CASE("L-values at one") {
  CHECK(L_at_one(-4) == doctest::Approx(M_PI / 4).epsilon(1e-14));
  CHECK(L_at_one(-3) == doctest::Approx(M_PI / (3 * std::sqrt(3.0))).epsilon(1e-14));
  for (int d : {-4, -3}) {
    const auto chi = d == -4 ? DirichletCharacter::chi_minus4() : DirichletCharacter::chi_minus3();
    double s = 0.0;
    for (std::int64_t n = 1000000; n >= 1; --n) s += chi(n) / static_cast<double>(n);
    CHECK(std::abs(s - L_at_one(d)) < 1e-5);
  }
  CHECK_THROWS_AS(L_at_one(-7), Error);
}

TEST_CASE("logarithmic derivatives") {
  CHECK(std::abs(L_prime_over_L(-4) - 0.2456096) < 1e-6);
  CHECK(std::abs(L_prime_over_L(-3) - 0.3682816) < 1e-6);
  CHECK(std::abs(L_prime_over_L(-4) - L_prime_over_L_gamma_form(-4)) < 1e-12);
  CHECK(std::abs(L_prime_over_L(-3) - L_prime_over_L_gamma_form(-3)) < 1e-12);
}

TEST_CASE("elementary constants") {
  CHECK(std::abs(euler_gamma() - 0.57721566490153286) < 1e-12);
  CHECK(agm(1.0, 1.0) == 1.0);
  CHECK(std::abs(agm(1.0, std::sqrt(2.0)) - 1.19814023473559220744) < 1e-14);
  // zeta'(2) = -0.93754825431584375370
  CHECK(std::abs(zeta_prime_over_zeta_at_2().value + 0.93754825431584375370 / (M_PI * M_PI / 6)) < 1e-12);
  CHECK(std::abs(riemann_zeta(2.0) - M_PI * M_PI / 6) < 1e-13);
  CHECK(std::abs(riemann_zeta(4.0) - std::pow(M_PI, 4) / 90) < 1e-13);
  // Catalan's constant
  CHECK(std::abs(dirichlet_l(2.0, -4) - 0.91596559417721901505) < 1e-13);
  CHECK(std::abs(dirichlet_l(3.0, -4) - std::pow(M_PI, 3) / 32) < 1e-13);
}

TEST_CASE("well-rounded constants") {
  const auto sq = c_square_eval(200000);
  const auto tr = c_triangle_eval(200000);
  CHECK(std::abs(sq.value - 0.6272237) < 1e-5);
  CHECK(std::abs(tr.value - 0.4915036) < 1e-5);
  CHECK(sq.error < 1e-5);
  CHECK(tr.error < 1e-5);
}

TEST_CASE("interval sum bounds") {
  const auto empty = interval_sum_bounds(1, std::sqrt(3.0), 0, 0, 2);
  CHECK(empty.exact == 0.0);
  CHECK(empty.holds);
  CHECK(interval_sum_bounds(10, std::sqrt(3.0), 0, 0, 1.5).holds);
  CHECK(interval_sum_bounds(100, 3, 0, 0, 1.1).holds);
  CHECK_THROWS_AS(interval_sum_bounds(0, 2, 0, 0, 1), Error);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> l(1, 300);
  std::uniform_real_distribution<double> alpha(1.01, 4.0), beta(0.0, 2.0), gamma(0.0, 0.99), s(0.0, 4.0);
  for (int i = 0; i < 10000; ++i) REQUIRE(interval_sum_bounds(l(rng), alpha(rng), beta(rng), gamma(rng), s(rng)).holds);
}

TEST_CASE("sandwich inequalities") {
  const std::int64_t n = 100000;
  const auto as = a_square(n);
  for (double s : {1.5, 2.0, 3.0}) CHECK(sandwich_check_square(s, as).holds);
  const auto ah = a_hex(n);
  CHECK(sandwich_check_hex(1.5, ah).holds);
  for (double s : {1.5, 2.0, 3.0}) CHECK(sandwich_check_hex(s, ah).excess_holds);
}

TEST_CASE("similar sublattice asymptotics") {
  const std::int64_t n = 100000;
  const auto bs = b_square(n), bh = b_hex(n);
  for (std::int64_t x : {10000, 100000}) {
    const double xd = static_cast<double>(x);
    CHECK(std::abs(summatory(bs, x) - M_PI / 4 * xd) <= 10 * std::sqrt(xd));
    CHECK(std::abs(summatory(bh, x) - M_PI / (3 * std::sqrt(3.0)) * xd) <= 10 * std::sqrt(xd));
  }
  const auto rep = model_report(bs, similar_square_model(), {1000, 10000, 100000});
  REQUIRE(rep.rows.size() == 3);
  for (const auto& r : rep.rows) CHECK(std::abs(r.normalized_sqrt) < 10);
  CHECK_THROWS_AS(model_report(bs, similar_square_model(), {200000}), Error);
}

TEST_CASE("epstein zeta") {
  const EpsteinForm sq{1, 0, 1}, hex{1, 0.5, 1};
  const auto r1 = epstein_residue_estimate(sq, 8, 1e5, 2);
  const auto r2 = epstein_residue_estimate(hex, 8, 1e5, 2);
  CHECK(std::abs(r1.value / M_PI - 1) < 0.02);
  CHECK(std::abs(r2.value / (2 * M_PI / std::sqrt(3.0)) - 1) < 0.02);
  CHECK(r1.monotone);
  CHECK(r2.monotone);
  for (const auto& q : {sq, hex}) {
    const auto full = epstein_truncated(q, 2, 1e5);
    const auto prim = epstein_primitive_truncated(q, 2, 1e5);
    CHECK(std::abs(prim.value - full.value / riemann_zeta(4)) < 1e-4);
    CHECK(epstein_truncated(q, 2, 1e5, 3).partial == full.partial);
  }
  // sum_{(m,n)=1} (m^2+n^2)^-2 over Q(m,n)<=R is the primitive sum
  CHECK(std::abs(epstein_restricted(sq, 2, {}, 1e5) - epstein_primitive_truncated(sq, 2, 1e5).partial) < 1e-12);
}

TEST_CASE("restricted epstein sums") {
  const EpsteinForm sq{1, 0, 1};
  const double radius = 1e5;
  // gcd(m, 2) = 2: m = 2m', n odd, form 4m'^2 + n^2
  double shifted = 0.0;
  for (std::int64_t n = -400; n <= 400; ++n) {
    for (std::int64_t m = -200; m <= 200; ++m) {
      if (n % 2 == 0 || std::gcd(m, n) != 1) continue;
      const double v = 4.0 * m * m + static_cast<double>(n) * n;
      if (v <= radius) shifted += 1.0 / (v * v);
    }
  }
  CHECK(std::abs(epstein_restricted(sq, 2, {2, 2, 1, 1}, radius) - shifted) < 1e-12);
  for (const RestrictedSpec& spec : {RestrictedSpec{2, 2, 1, 1}, RestrictedSpec{6, 2, 15, 3}, RestrictedSpec{12, 3, 10, 5}}) {
    CHECK(std::abs(epstein_restricted(sq, 2, spec, radius) - epstein_restricted_moebius(sq, 2, spec, radius)) < 1e-10);
  }
}

TEST_CASE("asymptotic models") {
  const auto m = square_model({0.6272237, 0});
  CHECK(m.c1 == doctest::Approx(std::log(3.0) / (2 * M_PI)));
  CHECK(m.c2 == doctest::Approx(0.6272237 - std::log(3.0) / (2 * M_PI)));
  const auto h = hex_model({0.4915036, 0});
  CHECK(h.c1 == doctest::Approx(3 * std::sqrt(3.0) * std::log(3.0) / (8 * M_PI)));
  CHECK(nonrational_model(1).c2 == doctest::Approx(std::log(3.0) / 4));
  const std::int64_t n = 100000;
  const auto as = a_square(n);
  const double fitted = fit_linear_coefficient(as, m.c1, 1000);
  CHECK(std::abs(fitted - m.c2) < 1e-2);
}
