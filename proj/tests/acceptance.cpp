// Exit-gate checks. One line per criterion; tolerances are fixed here.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "wellround/asympt.hpp"
#include "wellround/general.hpp"
#include "wellround/sublattice.hpp"
#include "wellround/wr_hex.hpp"
#include "wellround/wr_square.hpp"

using namespace wellround;

namespace {

constexpr double kConstantTol = 1e-5;
constexpr double kLogDerivTol = 1e-6;
constexpr double kGrowthTol = 0.02;
constexpr double kSimilarBand = 10.0;     // multiples of sqrt(x)
constexpr double kNonRationalBand = 15.0; // multiples of sqrt(x)
constexpr double kResidueTol = 0.02;
constexpr double kMoebiusTol = 1e-6;
constexpr double kMoebiusRadius = 1e6;
constexpr double kSquareOracleSeconds = 60.0;
constexpr int kThreads = 4;

GramForm gram(std::int64_t a, std::int64_t b, std::int64_t c) { return {Scalar(a), Scalar(b), Scalar(c)}; }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::int64_t first_mismatch(const ArithSeq& counts, const CensusReport& census, std::int64_t n_max) {
  for (std::int64_t n = 1; n <= n_max; ++n)
    if (counts(n) != census.well_rounded(n)) return n;
  return 0;
}

Outcome oracle_square() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto census = wr_census_bruteforce(presets::square(), 150, {false, kThreads});
  const auto bad = first_mismatch(a_square(150), census, 150);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(bad == 0, "mismatch at n=" + std::to_string(bad));
  o.require(secs < kSquareOracleSeconds, "runtime");
  o.detail << " n<=150 exact, " << secs << " s";
  return o;
}

Outcome oracle_hex() {
  Outcome o;
  const auto census = wr_census_bruteforce(presets::hexagonal(), 150, {false, kThreads});
  const auto bad = first_mismatch(a_hex(150), census, 150);
  o.require(bad == 0, "mismatch at n=" + std::to_string(bad));
  o.detail << " n<=150 exact";
  return o;
}

Outcome index_witness() {
  Outcome o;
  const auto a = a_square(6);
  o.require(a(6) == 0, "a_square(6) != 0");
  o.require(in_superset_index_square(6), "6 not in superset");
  o.require(!is_admissible_index_square(6), "6 admissible");
  o.require(wr_census_bruteforce(presets::square(), 6).well_rounded(6) == 0, "census(6) != 0");
  o.detail << " a_square(6)=" << a(6) << ", 6=2*3*1 in superset";
  return o;
}

Outcome constants() {
  Outcome o;
  const auto t = constants_table();
  char buf[256];
  std::snprintf(buf, sizeof buf, " c_sq=%.8f c_tri=%.8f L'/L(-4)=%.8f L'/L(-3)=%.8f", t.c_square.value,
                t.c_triangle.value, t.Lp_over_L_chi4.value, t.Lp_over_L_chi3.value);
  o.detail << buf;
  o.require(std::abs(t.c_square.value - 0.6272237) <= kConstantTol, "c_square");
  o.require(std::abs(t.c_triangle.value - 0.4915036) <= kConstantTol, "c_triangle");
  o.require(std::abs(t.Lp_over_L_chi4.value - 0.2456096) <= kLogDerivTol, "L'/L chi_-4");
  o.require(std::abs(t.Lp_over_L_chi3.value - 0.3682816) <= kLogDerivTol, "L'/L chi_-3");
  return o;
}

Outcome growth() {
  Outcome o;
  const std::int64_t x = 1000000;
  const auto sq = model_report(a_square(x), square_model(c_square_eval()), {x});
  const auto hx = model_report(a_hex(x), hex_model(c_triangle_eval()), {x});
  const double rs = std::abs(sq.rows[0].relative), rh = std::abs(hx.rows[0].relative);
  o.require(rs <= kGrowthTol, "square");
  o.require(rh <= kGrowthTol, "hexagonal");
  o.detail << " x=1e6 |res|/x square=" << rs << " hex=" << rh;
  return o;
}

Outcome similar() {
  Outcome o;
  const std::int64_t n = 1000000;
  const auto bs = b_square(n), bh = b_hex(n);
  double worst = 0.0;
  for (std::int64_t x : {10000, 100000, 1000000}) {
    const double xd = static_cast<double>(x);
    const double ds = std::abs(summatory(bs, x) - M_PI / 4 * xd) / std::sqrt(xd);
    const double dh = std::abs(summatory(bh, x) - M_PI / (3 * std::sqrt(3.0)) * xd) / std::sqrt(xd);
    o.require(ds <= kSimilarBand, "square at " + std::to_string(x));
    o.require(dh <= kSimilarBand, "hex at " + std::to_string(x));
    worst = std::max({worst, ds, dh});
  }
  o.detail << " max |dev|/sqrt(x)=" << worst;
  return o;
}

Outcome nonrational() {
  Outcome o;
  const GramForm g = presets::diag(Scalar(1), Scalar::sqrt_of(2));
  const auto census = wr_census_bruteforce(g, 200, {false, kThreads});
  const auto bad = first_mismatch(count_wr_nonrational(g, 200), census, 200);
  o.require(bad == 0, "mismatch at n=" + std::to_string(bad));
  const std::int64_t x = 10000;
  const double total = static_cast<double>(summatory(count_wr_nonrational(g, x), x));
  const double dev = std::abs(total - std::log(3.0) / 4 * x);
  o.require(dev <= kNonRationalBand * std::sqrt(static_cast<double>(x)), "growth band");
  o.detail << " census n<=200 exact, A(1e4)=" << total << " dev=" << dev;
  return o;
}

Outcome rational_general() {
  Outcome o;
  const std::int64_t n = 100;
  const auto as = a_square(n), ah = a_hex(n);
  const auto rs = count_wr_rational(presets::square(), n), rh = count_wr_rational(presets::hexagonal(), n);
  for (std::int64_t k = 1; k <= n; ++k) {
    o.require(rs(k) == as(k), "square at " + std::to_string(k));
    o.require(rh(k) == ah(k), "hex at " + std::to_string(k));
  }
  const auto hits = count_wr_rational_report(presets::hexagonal(), n).boundary_hits;
  o.require(summatory(hits, n) > 0, "hexagonal correction not exercised");
  for (const GramForm& g : {gram(1, 0, 2), gram(2, 1, 3)}) {
    const auto bad = first_mismatch(count_wr_rational(g, n), wr_census_bruteforce(g, n, {false, kThreads}), n);
    o.require(bad == 0, g.to_string() + " at n=" + std::to_string(bad));
  }
  o.detail << " square/hex n<=100, diag(1,2) and [[2,1],[1,3]] vs census";
  return o;
}

Outcome appendix_c() {
  Outcome o;
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<std::int64_t> ent(-8, 8), coord(-40, 40);
  int lattices = 0, vectors_total = 0, parity_pairs = 0;
  while (lattices < 20) {
    const std::int64_t a = std::abs(ent(rng)) + 1, b = ent(rng), c = std::abs(ent(rng)) + 1;
    const std::int64_t d = a * c - b * b;
    if (d <= 0 || std::gcd(std::gcd(a, b), c) != 1) continue;
    ++lattices;
    const GramForm g = gram(a, b, c);
    int vectors = 0;
    while (vectors < 25) {
      const Vec2 w{coord(rng), coord(rng)};
      if (std::gcd(w[0], w[1]) != 1) continue;
      ++vectors;
      const Vec2 z = orthogonal_primitive(w, g);
      o.require(brs_index(w, g) == std::abs(w[0] * z[1] - w[1] * z[0]), "index");
      o.require(d % g_star(w, g) == 0, "g* divides d");
      for (int t = 0; t < 8; ++t) {
        const std::int64_t s1 = ent(rng), s2 = ent(rng);
        const Vec2 u{c * s1 - b * s2, -b * s1 + a * s2};  // in d Gamma*
        if (u[0] % 2 != 0 || u[1] % 2 != 0) continue;       // and in 2 Gamma
        const Vec2 w2{w[0] + u[0], w[1] + u[1]};
        if (std::gcd(w2[0], w2[1]) != 1) continue;
        ++parity_pairs;
        o.require(brs_parity(w2, g) == brs_parity(w, g), "parity");
      }
    }
    vectors_total += vectors;
  }
  o.detail << " " << lattices << " lattices, " << vectors_total << " vectors, " << parity_pairs << " parity pairs";
  return o;
}

Outcome epstein() {
  Outcome o;
  const EpsteinForm sq{1, 0, 1}, hex{1, 0.5, 1};
  const auto r1 = epstein_residue_estimate(sq, 8, 2e5, kThreads);
  const auto r2 = epstein_residue_estimate(hex, 8, 2e5, kThreads);
  const double e1 = std::abs(r1.value / (M_PI / std::sqrt(sq.det())) - 1);
  const double e2 = std::abs(r2.value / (M_PI / std::sqrt(hex.det())) - 1);
  o.require(e1 <= kResidueTol, "x^2+y^2 residue");
  o.require(e2 <= kResidueTol, "x^2+xy+y^2 residue");
  double worst = 0.0;
  for (const RestrictedSpec& spec : {RestrictedSpec{1, 1, 1, 1}, RestrictedSpec{2, 2, 1, 1}, RestrictedSpec{6, 2, 15, 3}}) {
    const double diff = std::abs(epstein_restricted(sq, 2, spec, kMoebiusRadius) -
                                 epstein_restricted_moebius(sq, 2, spec, kMoebiusRadius));
    worst = std::max(worst, diff);
  }
  o.require(worst <= kMoebiusTol, "Moebius identity");
  o.detail << " residue rel.err " << e1 << ", " << e2 << "; Moebius max diff " << worst;
  return o;
}

Outcome reduction_and_sandwich() {
  Outcome o;
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<std::int64_t> ent(-30, 30), coef(-4, 4), lam(1, 12);
  int checks = 0;
  while (checks < 1000) {
    const std::int64_t a = std::abs(ent(rng)) + 1, b = ent(rng), c = std::abs(ent(rng)) + 1;
    if (a * c - b * b <= 0) continue;
    ++checks;
    const GramForm g = gram(a, b, c);
    const auto [red, u] = gauss_reduce(g);
    const bool chain = red.b.sign() >= 0 && red.a >= Scalar(2) * red.b && red.c >= red.a;
    o.require(chain, "reduced inequalities");
    IntMatrix2 m = IntMatrix2::identity();
    for (int i = 0; i < 5; ++i) {
      const std::int64_t k = coef(rng);
      m = m * (i % 2 ? IntMatrix2::from_columns(1, 0, k, 1) : IntMatrix2::from_columns(1, k, 0, 1));
    }
    if (checks % 2) m = m * IntMatrix2::from_columns(0, 1, 1, 0);
    const GramForm moved = transform(g, Unimodular(m));
    o.require(gauss_reduce(moved).first == red && classify(moved) == classify(g), "unimodular invariance");
    const Scalar s(Rational(lam(rng), lam(rng)));
    o.require(classify(GramForm{s * g.a, s * g.b, s * g.c}) == classify(g), "scaling invariance");
  }
  const std::int64_t n = 100000;
  const auto as = a_square(n), ah = a_hex(n);
  o.detail << " 1000 reductions;";
  for (double s : {1.5, 2.0, 3.0}) {
    const auto rs = sandwich_check_square(s, as);
    const auto rh = sandwich_check_hex(s, ah);
    char buf[160];
    std::snprintf(buf, sizeof buf, " s=%g square %s, hex %s (upper %.4f, series %.4f, non-similar part %s)", s,
                  rs.holds ? "ok" : "FAILS", rh.holds ? "ok" : "FAILS", rh.upper, rh.series, rh.excess_holds ? "ok" : "FAILS");
    o.detail << buf;
    o.require(rs.holds, "square sandwich at s=" + std::to_string(s));
    o.require(rh.holds, "hex sandwich at s=" + std::to_string(s));
  }
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"oracle equivalence, square", oracle_square},
      {"oracle equivalence, hexagonal", oracle_hex},
      {"index-set witness", index_witness},
      {"asymptotic constants", constants},
      {"growth fit", growth},
      {"similar-sublattice asymptotics", similar},
      {"non-rational law", nonrational},
      {"rational-general consistency", rational_general},
      {"dual coefficient, index and parity", appendix_c},
      {"Epstein residue and Moebius identity", epstein},
      {"reduction properties and sandwich inequalities", reduction_and_sandwich},
  };
  int failed = 0, id = 0;
  for (const auto& [name, run] : criteria) {
    ++id;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    failed += !o.pass;
    std::printf("%s %2d %s:%s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", id - failed, id);
  return failed == 0 ? 0 : 1;
}
