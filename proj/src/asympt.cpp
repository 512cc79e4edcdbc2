#include "wellround/asympt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <thread>

namespace wellround {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLog3 = std::log(3.0);

void require_discriminant(int d) {
  if (d != -4 && d != -3) {
    throw Error(ErrorKind::UnsupportedDiscriminant, "only D = -4 and D = -3 are supported, got " + std::to_string(d));
  }
}

int kronecker(int d, std::int64_t n) {
  return d == -4 ? DirichletCharacter::chi_minus4()(n) : DirichletCharacter::chi_minus3()(n);
}

// Harmonic numbers: exact below the cutoff, asymptotic expansion above.
class Harmonic {
 public:
  Harmonic() : table_(kCut + 1, 0.0), gamma_(euler_gamma()) {
    for (std::size_t n = 1; n <= kCut; ++n) table_[n] = table_[n - 1] + 1.0 / static_cast<double>(n);
  }
  double operator()(std::int64_t n) const {
    if (n <= static_cast<std::int64_t>(kCut)) return table_[static_cast<std::size_t>(std::max<std::int64_t>(n, 0))];
    const double x = static_cast<double>(n);
    const double x2 = 1.0 / (x * x);
    return std::log(x) + gamma_ + 0.5 / x - x2 / 12.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 252.0;
  }
  /// Sum of 1/q over odd q <= n.
  double odd(std::int64_t n) const { return (*this)(n) - 0.5 * (*this)(n / 2); }

 private:
  static constexpr std::size_t kCut = 4096;
  std::vector<double> table_;
  double gamma_;
};

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Sum of term(j) for j = first, first+1, ..., first+count-1, plus a tail
// estimate assuming term(j) ~ K / p(j)^2 with p(j) = step*j + offset; K is
// the mean of p^2 term over the final tenth of the range.
template <typename Term>
Estimate bracket_sum(std::int64_t first, std::int64_t count, int step, int offset, Term term) {
  double sum = 0.0;
  double comp = 0.0;
  const std::int64_t block_start = first + count - count / 10;
  double k_acc = 0.0;
  double k_min = 1e300, k_max = -1e300;
  std::int64_t k_n = 0;
  for (std::int64_t j = first; j < first + count; ++j) {
    const double t = term(j);
    // Kahan summation
    const double y = t - comp;
    const double s = sum + y;
    comp = (s - sum) - y;
    sum = s;
    if (j >= block_start) {
      const double p = static_cast<double>(step * j + offset);
      const double scaled = p * p * t;
      k_acc += scaled;
      k_min = std::min(k_min, scaled);
      k_max = std::max(k_max, scaled);
      ++k_n;
    }
  }
  const double p_last = static_cast<double>(step * (first + count - 1) + offset);
  // sum over later p of 1/p^2 with spacing `step`
  const double inv_tail = 1.0 / (static_cast<double>(step) * p_last);
  const double mean = k_acc / static_cast<double>(k_n);
  const double tail = mean * inv_tail;
  const double spread = std::max(std::abs(k_max - mean), std::abs(k_min - mean));
  // oscillating terms average out; the spread over sqrt of the block length
  // bounds the drift of the mean
  const double error = std::abs(tail) * 0.5 + spread * inv_tail / std::sqrt(static_cast<double>(k_n)) + 1e-13;
  return {sum + tail, error};
}

double zeta2() { return kPi * kPi / 6.0; }

}  // namespace

double agm(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw Error(ErrorKind::DomainError, "AGM needs positive arguments");
  for (int i = 0; i < 100; ++i) {
    const double a = 0.5 * (x + y);
    const double g = std::sqrt(x * y);
    if (a == x && g == y) break;
    if (std::abs(a - g) <= 1e-17 * a) {
      x = a;
      y = g;
      break;
    }
    x = a;
    y = g;
  }
  return 0.5 * (x + y);
}

Estimate euler_gamma_estimate() {
  constexpr int n = 10000;
  double h = 0.0;
  for (int k = n; k >= 1; --k) h += 1.0 / k;
  const double x = n;
  const double value = h - std::log(x) - 0.5 / x + 1.0 / (12.0 * x * x) - 1.0 / (120.0 * x * x * x * x);
  return {value, 1e-14};
}

double euler_gamma() {
  static const double g = euler_gamma_estimate().value;
  return g;
}

Estimate zeta_prime_over_zeta_at_2() {
  constexpr int n = 1000;
  double s = 0.0;
  for (int k = n - 1; k >= 2; --k) s += std::log(static_cast<double>(k)) / (static_cast<double>(k) * k);
  const double x = n;
  const double lx = std::log(x);
  const double f = lx / (x * x);
  const double f1 = (1.0 - 2.0 * lx) / (x * x * x);
  const double f3 = (26.0 - 24.0 * lx) / (x * x * x * x * x);
  const double tail = (lx + 1.0) / x + f / 2.0 - f1 / 12.0 + f3 / 720.0;
  const double zeta_prime = -(s + tail);
  return {zeta_prime / zeta2(), 1e-13};
}

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0) || !(a > 0.0)) throw Error(ErrorKind::DomainError, "Hurwitz zeta needs s > 1 and a > 0");
  constexpr int n = 24;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) sum += std::pow(k + a, -s);
  const double x = n + a;
  sum += std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
  static constexpr double kB[] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0};
  double rising = s;  // s (s+1) ... (s+2k-2)
  double fact = 2.0;  // (2k)!
  double power = std::pow(x, -s - 1.0);
  for (int k = 1; k <= 6; ++k) {
    sum += kB[k - 1] / fact * rising * power;
    rising *= (s + 2 * k - 1) * (s + 2 * k);
    fact *= (2 * k + 1) * (2 * k + 2);
    power /= x * x;
  }
  return sum;
}

double riemann_zeta(double s) { return hurwitz_zeta(s, 1.0); }

double dirichlet_l(double s, int discriminant) {
  require_discriminant(discriminant);
  const int q = -discriminant;
  double sum = 0.0;
  for (int a = 1; a < q; ++a) {
    const int chi = kronecker(discriminant, a);
    if (chi != 0) sum += chi * hurwitz_zeta(s, static_cast<double>(a) / q);
  }
  return sum * std::pow(static_cast<double>(q), -s);
}

double L_at_one(int discriminant) {
  require_discriminant(discriminant);
  const int q = -discriminant;
  double s = 0.0;
  for (int n = 1; n < q; ++n) s += n * kronecker(discriminant, n);
  return -kPi / std::pow(static_cast<double>(q), 1.5) * s;
}

double L_prime_over_L(int discriminant) {
  require_discriminant(discriminant);
  const double g = euler_gamma();
  if (discriminant == -4) {
    const double m = agm(1.0, std::sqrt(2.0));
    return std::log(m * m * std::exp(g) / 2.0);
  }
  const double m = agm(1.0, std::cos(kPi / 12.0));
  return std::log(std::pow(2.0, 4.0 / 3.0) * m * m * std::exp(g) / 3.0);
}

double L_prime_over_L_gamma_form(int discriminant) {
  require_discriminant(discriminant);
  const double g = euler_gamma();
  if (discriminant == -4) return std::log(std::pow(std::tgamma(0.75), 4) * std::exp(g) / kPi);
  return std::log(16.0 * std::pow(kPi, 4) * std::exp(g) / (std::pow(3.0, 1.5) * std::pow(std::tgamma(1.0 / 3.0), 6)));
}

Estimate c_square_eval(std::int64_t terms) {
  if (terms < 100) throw Error(ErrorKind::DomainError, "need at least 100 bracket terms");
  const Harmonic h;
  const double l1 = L_at_one(-4);
  const double g = euler_gamma();
  const double lpl = L_prime_over_L(-4);
  const Estimate zp = zeta_prime_over_zeta_at_2();
  // p < q < sqrt3 p
  const Estimate s1 = bracket_sum(1, terms, 1, 0, [&](std::int64_t p) {
    const std::int64_t top = isqrt(3 * p * p - 1);
    const double inner = top > p ? h(top) - h(p) : 0.0;
    return (0.5 * kLog3 - inner) / static_cast<double>(p);
  });
  // odd q with p < q < sqrt3 p, p = 2k+1
  const Estimate s2 = bracket_sum(0, terms, 2, 1, [&](std::int64_t k) {
    const std::int64_t p = 2 * k + 1;
    const std::int64_t top = isqrt(3 * p * p - 1);
    const double inner = top > p ? h.odd(top) - h.odd(p) : 0.0;
    return (0.25 * kLog3 - inner) / static_cast<double>(p);
  });
  const double z2 = zeta2();
  const double bracket = z2 + kLog3 / 3.0 * (lpl + g - 2.0 * zp.value) +
                         kLog3 / 3.0 * (2.0 * g - kLog3 / 4.0 - std::log(2.0) / 6.0) - s1.value - 4.0 / 3.0 * s2.value;
  const double pre = l1 / z2;
  return {pre * bracket, pre * (s1.error + 4.0 / 3.0 * s2.error + 1e-12)};
}

Estimate c_triangle_eval(std::int64_t terms) {
  if (terms < 100) throw Error(ErrorKind::DomainError, "need at least 100 bracket terms");
  const Harmonic h;
  const double l3 = L_at_one(-3);
  const double g = euler_gamma();
  const double lpl = L_prime_over_L(-3);
  const Estimate zp = zeta_prime_over_zeta_at_2();
  // p < q <= 3p - 1
  const Estimate t1 = bracket_sum(1, terms, 1, 0, [&](std::int64_t p) {
    return (kLog3 - (h(3 * p - 1) - h(p))) / static_cast<double>(p);
  });
  // k < l <= 3k, odd values 2l+1
  const Estimate t2 = bracket_sum(0, terms, 2, 1, [&](std::int64_t k) {
    const double inner = h.odd(6 * k + 1) - h.odd(2 * k + 1);
    return 4.0 * (0.5 * kLog3 - inner) / static_cast<double>(2 * k + 1);
  });
  // the bracket sums enter without the log(3) carried by the other terms
  const double pre = 9.0 * l3 / (16.0 * zeta2());
  const double bracket = kLog3 * ((g + lpl - 2.0 * zp.value) + 2.0 * g - kLog3 / 4.0) - t1.value - t2.value;
  return {l3 + pre * bracket, pre * (t1.error + t2.error + 1e-12)};
}

ConstantsTable constants_table(std::int64_t terms) {
  ConstantsTable t;
  t.L1_chi4 = {L_at_one(-4), 1e-15};
  t.L1_chi3 = {L_at_one(-3), 1e-15};
  const double a4 = L_prime_over_L(-4), b4 = L_prime_over_L_gamma_form(-4);
  const double a3 = L_prime_over_L(-3), b3 = L_prime_over_L_gamma_form(-3);
  t.Lp_over_L_chi4 = {a4, std::max(std::abs(a4 - b4), 1e-14)};
  t.Lp_over_L_chi3 = {a3, std::max(std::abs(a3 - b3), 1e-14)};
  t.euler_gamma = euler_gamma_estimate();
  t.zeta2 = {zeta2(), 1e-16};
  t.zetap2_over_zeta2 = zeta_prime_over_zeta_at_2();
  t.c_square = c_square_eval(terms);
  t.c_triangle = c_triangle_eval(terms);
  return t;
}

IntervalBounds interval_sum_bounds(std::int64_t l, double alpha, double beta, double gamma, double s) {
  if (l < 1 || !(alpha > 1.0) || beta < 0.0 || gamma < 0.0 || gamma >= 1.0 || s < 0.0) {
    throw Error(ErrorKind::DomainError, "need l >= 1, alpha > 1, beta >= 0, 0 <= gamma < 1, s >= 0");
  }
  const double lo = static_cast<double>(l);
  const double hi = alpha * lo + beta;
  const double integral = s == 1.0 ? std::log((hi + gamma) / (lo + gamma))
                                   : (std::pow(lo + gamma, 1.0 - s) - std::pow(hi + gamma, 1.0 - s)) / (s - 1.0);
  IntervalBounds r;
  r.upper = integral;
  r.lower = integral - std::pow(lo + gamma, -s);
  const auto top = static_cast<std::int64_t>(std::ceil(hi)) - 1;  // n < hi
  for (std::int64_t n = l + 1; n <= top; ++n) r.exact += std::pow(static_cast<double>(n) + gamma, -s);
  r.holds = r.lower < r.exact && r.exact < r.upper;
  return r;
}

Estimate truncated_dirichlet_series(const ArithSeq& counts, double s) {
  if (!(s > 1.0)) throw Error(ErrorKind::DomainError, "need s > 1");
  const std::int64_t n = counts.bound();
  double sum = 0.0;
  // smallest terms first for a stable sum
  for (std::int64_t k = n; k >= 1; --k) {
    if (counts(k) != 0) sum += static_cast<double>(counts(k)) * std::pow(static_cast<double>(k), -s);
  }
  const auto partial = partial_sums(counts);
  double c = 0.0;
  for (std::int64_t x = std::max<std::int64_t>(3, n / 10); x <= n; ++x) {
    c = std::max(c, static_cast<double>(partial[static_cast<std::size_t>(x)]) / (x * std::log(static_cast<double>(x))));
  }
  // sum_{k > N} a(k) k^-s <= s C int_N^inf x^-s log x dx
  const double xn = static_cast<double>(n);
  const double tail = s * c * std::pow(xn, 1.0 - s) * (std::log(xn) / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
  return {sum, tail};
}

SandwichResult sandwich_check_square(double s, const ArithSeq& a_square_counts) {
  const Estimate phi = truncated_dirichlet_series(a_square_counts, s);
  const double l = dirichlet_l(s, -4);
  const double z = riemann_zeta(s);
  const double d = (2.0 + std::pow(2.0, s)) / (1.0 + std::pow(2.0, s)) * (1.0 - std::pow(std::sqrt(3.0), 1.0 - s)) /
                   (s - 1.0) * l / riemann_zeta(2.0 * s) * z * riemann_zeta(2.0 * s - 1.0);
  const double similar = z * l;
  SandwichResult r{s, d - similar, d + similar, phi.value, phi.error, similar, false, false};
  r.holds = r.lower < r.series && r.series + r.tail < r.upper;
  r.excess_holds = r.holds;
  return r;
}

SandwichResult sandwich_check_hex(double s, const ArithSeq& a_hex_counts) {
  const Estimate phi = truncated_dirichlet_series(a_hex_counts, s);
  const double l = dirichlet_l(s, -3);
  const double z = riemann_zeta(s);
  const double pref = 3.0 / (1.0 + std::pow(3.0, -s));
  const double d = 0.5 * pref * (1.0 - std::pow(3.0, 1.0 - s)) / (s - 1.0) * l / riemann_zeta(2.0 * s) * z *
                   riemann_zeta(2.0 * s - 1.0);
  const double e = pref * l * z;
  SandwichResult r{s, d - e, d, phi.value, phi.error, l * z, false, false};
  r.holds = r.lower < r.series && r.series + r.tail < r.upper;
  const double excess = r.series - r.similar;
  r.excess_holds = r.lower < excess && excess + r.tail < r.upper;
  return r;
}

namespace {

// Calls row(n, m_lo, m_hi) for each n with lattice points of Q <= R.
template <typename Row>
void for_each_row(const EpsteinForm& q, double radius, Row row) {
  const double d = q.det();
  if (!(q.a > 0.0) || !(d > 0.0)) throw Error(ErrorKind::NotPositiveDefinite, "Epstein form is not positive definite");
  const auto nmax = static_cast<std::int64_t>(std::sqrt(radius * q.a / d)) + 1;
  for (std::int64_t n = -nmax; n <= nmax; ++n) {
    const double nn = static_cast<double>(n);
    const double disc = q.a * radius - d * nn * nn;
    if (disc < 0.0) continue;
    const double centre = -q.b * nn / q.a;
    const double half = std::sqrt(disc) / q.a;
    row(n, static_cast<std::int64_t>(std::floor(centre - half)) - 1, static_cast<std::int64_t>(std::ceil(centre + half)) + 1);
  }
}

EpsteinValue epstein_impl(const EpsteinForm& q, double s, double radius, int threads, bool primitive) {
  if (!(s > 1.0)) throw Error(ErrorKind::DomainError, "Epstein sums need s > 1");
  if (!(radius >= 1.0)) throw Error(ErrorKind::DomainError, "truncation radius must be >= 1");
  std::vector<std::int64_t> rows;
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
  for_each_row(q, radius, [&](std::int64_t n, std::int64_t lo, std::int64_t hi) {
    rows.push_back(n);
    ranges.emplace_back(lo, hi);
  });
  std::vector<double> row_sum(rows.size(), 0.0);
  std::vector<std::int64_t> row_points(rows.size(), 0);
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < rows.size(); i += stride) {
      const std::int64_t n = rows[i];
      double acc = 0.0;
      std::int64_t pts = 0;
      for (std::int64_t m = ranges[i].first; m <= ranges[i].second; ++m) {
        if (m == 0 && n == 0) continue;
        if (primitive && std::gcd(m, n) != 1) continue;
        const double v = q(static_cast<double>(m), static_cast<double>(n));
        if (v > radius) continue;
        acc += std::pow(v, -s);
        ++pts;
      }
      row_sum[i] = acc;
      row_points[i] = pts;
    }
  };
  const int workers = std::max(1, threads);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, static_cast<std::size_t>(w), static_cast<std::size_t>(workers));
    for (auto& t : pool) t.join();
  }
  EpsteinValue out;
  // fixed summation order: row by row
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.partial += row_sum[i];
    out.points += row_points[i];
  }
  out.density = static_cast<double>(out.points) / radius;
  out.tail = out.density * std::pow(radius, 1.0 - s) / (s - 1.0);
  out.value = out.partial + out.tail;
  return out;
}

}  // namespace

EpsteinValue epstein_truncated(const EpsteinForm& q, double s, double radius, int threads) {
  return epstein_impl(q, s, radius, threads, false);
}

EpsteinValue epstein_primitive_truncated(const EpsteinForm& q, double s, double radius, int threads) {
  return epstein_impl(q, s, radius, threads, true);
}

ResidueEstimate epstein_residue_estimate(const EpsteinForm& q, int levels, double radius, int threads) {
  if (levels < 2) throw Error(ErrorKind::DomainError, "need at least two ladder levels");
  ResidueEstimate r;
  for (int j = 1; j <= levels; ++j) {
    const double h = std::ldexp(1.0, -j);
    const double s = 1.0 + h;
    r.s_values.push_back(s);
    r.ladder.push_back(h * epstein_truncated(q, s, radius, threads).value);
  }
  // (s - 1) zeta_Q(s) = residue + O(s - 1); halving h removes the linear term
  for (std::size_t i = 0; i + 1 < r.ladder.size(); ++i) r.richardson.push_back(2.0 * r.ladder[i + 1] - r.ladder[i]);
  r.value = r.richardson.back();
  r.error = std::abs(r.richardson.back() - r.richardson[r.richardson.size() - 2]) + std::abs(r.ladder.back() - r.value);
  bool inc = true, dec = true;
  for (std::size_t i = 0; i + 1 < r.ladder.size(); ++i) {
    inc = inc && r.ladder[i + 1] >= r.ladder[i];
    dec = dec && r.ladder[i + 1] <= r.ladder[i];
  }
  r.monotone = inc || dec;
  return r;
}

double epstein_phi(const EpsteinForm& q, std::int64_t a, std::int64_t k, std::int64_t l, double s, double radius) {
  const EpsteinForm scaled{q.a * k * k, q.b * k * l, q.c * l * l};
  double total = 0.0;
  for_each_row(scaled, radius, [&](std::int64_t n, std::int64_t lo, std::int64_t hi) {
    if (std::gcd(n, a) != 1) return;
    double acc = 0.0;
    for (std::int64_t m = lo; m <= hi; ++m) {
      if (std::gcd(m, n) != 1) continue;
      const double v = scaled(static_cast<double>(m), static_cast<double>(n));
      if (v <= radius) acc += std::pow(v, -s);
    }
    total += acc;
  });
  return total;
}

double epstein_restricted(const EpsteinForm& q, double s, const RestrictedSpec& spec, double radius) {
  double total = 0.0;
  for_each_row(q, radius, [&](std::int64_t n, std::int64_t lo, std::int64_t hi) {
    if (std::gcd(n, spec.C) != spec.l) return;
    double acc = 0.0;
    for (std::int64_t m = lo; m <= hi; ++m) {
      if (std::gcd(m, n) != 1 || std::gcd(m, spec.D) != spec.k) continue;
      const double v = q(static_cast<double>(m), static_cast<double>(n));
      if (v <= radius) acc += std::pow(v, -s);
    }
    total += acc;
  });
  return total;
}

double epstein_restricted_moebius(const EpsteinForm& q, double s, const RestrictedSpec& spec, double radius) {
  if (spec.D % spec.k != 0 || spec.C % spec.l != 0 || std::gcd(spec.k, spec.l) != 1) {
    throw Error(ErrorKind::DomainError, "need k | D, l | C and gcd(k, l) = 1");
  }
  const std::int64_t top = spec.l * spec.D / spec.k;
  const ArithSeq mu = moebius_seq(top);
  double total = 0.0;
  for (std::int64_t c = 1; c <= top; ++c) {
    if (top % c != 0 || mu(c) == 0) continue;
    total += static_cast<double>(mu(c)) * epstein_phi(q, c * spec.k * spec.C / spec.l, c * spec.k, spec.l, s, radius);
  }
  return total;
}

double AsymptoticModel::operator()(double x) const { return c1 * x * std::log(x) + c2 * x; }

AsymptoticModel square_model(const Estimate& c_square) {
  const double c1 = kLog3 / (2.0 * kPi);
  return {c1, c_square.value - c1, 0.75, "square lattice: log3/(2 pi) x log x + (c_sq - log3/(2 pi)) x"};
}

AsymptoticModel hex_model(const Estimate& c_triangle) {
  const double c1 = 3.0 * std::sqrt(3.0) * kLog3 / (8.0 * kPi);
  return {c1, c_triangle.value - c1, 0.75, "hexagonal lattice: 3 sqrt3 log3/(8 pi) x (log x - 1) + c_tri x"};
}

AsymptoticModel similar_square_model() { return {0.0, kPi / 4.0, 0.5, "similar sublattices of Z[i]: pi/4 x"}; }

AsymptoticModel similar_hex_model() {
  return {0.0, kPi / (3.0 * std::sqrt(3.0)), 0.5, "similar sublattices of Z[rho]: pi/(3 sqrt3) x"};
}

AsymptoticModel nonrational_model(std::int64_t csl_index) {
  return {0.0, kLog3 / (4.0 * static_cast<double>(csl_index)), 0.5, "non-rational lattice: log3/(4 Sigma) x"};
}

ModelReport model_report(const ArithSeq& counts, const AsymptoticModel& model, const std::vector<std::int64_t>& checkpoints) {
  const auto partial = partial_sums(counts);
  ModelReport rep;
  double lo = 1e300, hi = 0.0;
  for (std::int64_t x : checkpoints) {
    if (x < 2 || x > counts.bound()) {
      throw Error(ErrorKind::OutOfRange, "checkpoint " + std::to_string(x) + " outside 2.." + std::to_string(counts.bound()));
    }
    ResidualRow row;
    const double xd = static_cast<double>(x);
    row.x = x;
    row.count = partial[static_cast<std::size_t>(x)];
    row.model = model(xd);
    row.residual = static_cast<double>(row.count) - row.model;
    row.relative = row.residual / xd;
    row.normalized = row.residual / (std::pow(xd, model.error_exponent) * std::log(xd));
    row.normalized_sqrt = row.residual / std::sqrt(xd);
    lo = std::min(lo, std::abs(row.normalized));
    hi = std::max(hi, std::abs(row.normalized));
    rep.rows.push_back(row);
  }
  rep.flagged = rep.rows.size() > 1 && hi > 4.0 * std::max(lo, 1e-12) && hi > 1.0;
  return rep;
}

double fit_linear_coefficient(const ArithSeq& counts, double c1, std::int64_t x_min) {
  if (x_min < 2 || x_min > counts.bound()) throw Error(ErrorKind::OutOfRange, "fit range outside the series");
  const auto partial = partial_sums(counts);
  double sxy = 0.0, sxx = 0.0;
  for (std::int64_t x = x_min; x <= counts.bound(); ++x) {
    const double xd = static_cast<double>(x);
    const double y = static_cast<double>(partial[static_cast<std::size_t>(x)]) - c1 * xd * std::log(xd);
    sxy += xd * y;
    sxx += xd * xd;
  }
  return sxy / sxx;
}

AsymptoticModel fitted_model(const ArithSeq& counts, std::int64_t x_min) {
  if (x_min < 2 || x_min >= counts.bound()) throw Error(ErrorKind::OutOfRange, "fit range outside the series");
  const auto partial = partial_sums(counts);
  // normal equations for y ~ c1 x log x + c2 x, scaled by 1/x^2
  double s11 = 0.0, s12 = 0.0, s22 = 0.0, t1 = 0.0, t2 = 0.0;
  for (std::int64_t x = x_min; x <= counts.bound(); ++x) {
    const double xd = static_cast<double>(x);
    const double l = std::log(xd);
    const double y = static_cast<double>(partial[static_cast<std::size_t>(x)]) / xd;
    s11 += l * l;
    s12 += l;
    s22 += 1.0;
    t1 += l * y;
    t2 += y;
  }
  const double det = s11 * s22 - s12 * s12;
  if (det <= 0.0) throw Error(ErrorKind::DomainError, "fit range too short");
  AsymptoticModel m;
  m.c1 = (t1 * s22 - t2 * s12) / det;
  m.c2 = (s11 * t2 - s12 * t1) / det;
  m.error_exponent = 0.75;
  m.description = "least-squares fit c1 x log x + c2 x";
  return m;
}

}  // namespace wellround
