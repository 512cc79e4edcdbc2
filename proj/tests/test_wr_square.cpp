#include "doctest.h"
#include "wellround/sublattice.hpp"
#include "wellround/wr_square.hpp"

using namespace wellround;

namespace {
std::int64_t isqrt(std::int64_t n) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}
}  // namespace

TEST_CASE("similar sublattice streams") {
  const auto b = b_square(20);
  CHECK(b(1) == 1);
  CHECK(b(5) == 2);
  CHECK(b(3) == 0);
  const auto bp = b_square_primitive(20);
  CHECK(bp(1) == 1);
  CHECK(bp(4) == 0);
  CHECK(bp(2) == 1);
}

TEST_CASE("pair windows") {
  const auto w = pair_counts({PairParity::Any}, 100);
  CHECK(w(6) == 1);
  CHECK(w(2) == 0);
  CHECK(pair_counts({PairParity::Odd}, 100)(15) == 1);
  // doubling accounts for both orientations of an unordered pair
  for (std::int64_t n = 1; n <= 100; ++n) {
    std::int64_t ordered = 0;
    for (std::int64_t p = 1; p <= n; ++p) {
      if (n % p != 0) continue;
      const std::int64_t q = n / p;
      const std::int64_t lo = std::min(p, q), hi = std::max(p, q);
      if (p != q && hi * hi < 3 * lo * lo) ++ordered;
    }
    CHECK(2 * w(n) == ordered);
  }
}

TEST_CASE("a_square examples") {
  const auto a = a_square(20);
  CHECK(a(1) == 1);
  CHECK(a(2) == 1);
  CHECK(a(6) == 0);
  CHECK(a(12) == 2);
  const auto parts = a_square_parts(200);
  CHECK(parts.total == parts.similar + parts.even + parts.odd);
}

TEST_CASE("a_square matches the census") {
  const std::int64_t n_max = 150;
  const auto census = wr_census_bruteforce(presets::square(), n_max, {false, 4});
  const auto a = a_square(n_max);
  const auto b = b_square(n_max);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    REQUIRE(a(n) == census.well_rounded(n));
    REQUIRE(b(n) == census.by_type(n, LatticeType::Square));
  }
}

TEST_CASE("rhombic and square streams match the census") {
  const std::int64_t n_max = 60;
  const auto s = rhombic_square_series(n_max);
  const auto all = wr_census_bruteforce(presets::square(), n_max);
  const auto prim = wr_census_bruteforce(presets::square(), n_max, {true, 1});
  const auto types = primitive_type_series(n_max);
  CHECK(s.all(2) == 1);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const auto cr = [](const CensusReport& r, std::int64_t k) {
      return r.by_type(k, LatticeType::Rhombic) + r.by_type(k, LatticeType::CentredRectangular) +
             r.by_type(k, LatticeType::Square);
    };
    CHECK(s.all(n) == cr(all, n));
    CHECK(s.primitive(n) == cr(prim, n));
    CHECK(types.square(n) == prim.by_type(n, LatticeType::Square));
    CHECK(types.rhombic_cr(n) == prim.by_type(n, LatticeType::Rhombic) + prim.by_type(n, LatticeType::CentredRectangular));
    CHECK(types.rectangular(n) == prim.by_type(n, LatticeType::Rectangular));
    if (n % 2 == 1) CHECK(s.even(n) == 0);
  }
  CHECK(types.square(1) == 1);
  CHECK(types.rectangular(1) == 0);
  // index 2 holds one square and two rectangular sublattices
  CHECK(types.rhombic_cr(2) == 0);
}

TEST_CASE("admissible index set") {
  CHECK_FALSE(is_admissible_index_square(6));
  CHECK(in_superset_index_square(6));
  CHECK(is_admissible_index_square(2));
  CHECK(is_admissible_index_square(1));
  const std::int64_t n_max = 10000;
  const auto a = a_square(n_max);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const bool adm = is_admissible_index_square(n);
    REQUIRE(adm == (a(n) > 0));
    if (adm) REQUIRE(in_superset_index_square(n));
  }
}

TEST_CASE("sums of two squares") {
  for (std::int64_t n = 0; n <= 500; ++n) {
    bool found = false;
    for (std::int64_t x = 0; x * x <= n && !found; ++x) {
      const std::int64_t r = n - x * x;
      found = isqrt(r) * isqrt(r) == r;
    }
    CHECK(is_sum_of_two_squares(n) == found);
  }
}
