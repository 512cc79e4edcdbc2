#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wellround/dirichlet.hpp"

namespace wellround {

/// A floating value with an absolute error bound.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

double agm(double x, double y);
/// Euler-Mascheroni constant from the harmonic sum with Euler-Maclaurin correction.
Estimate euler_gamma_estimate();
double euler_gamma();
/// zeta'(2) / zeta(2) from -sum log(n)/n^2 with Euler-Maclaurin tail.
Estimate zeta_prime_over_zeta_at_2();

/// Hurwitz zeta for real s > 1 and 0 < a <= 1.
double hurwitz_zeta(double s, double a);
double riemann_zeta(double s);
/// L(s, chi_D) for real s > 1 and D in {-4, -3}.
double dirichlet_l(double s, int discriminant);

/// L(1, chi_D) from the finite character sum; D in {-4, -3}.
double L_at_one(int discriminant);
/// L'(1, chi_D) / L(1, chi_D) from the arithmetic-geometric mean.
double L_prime_over_L(int discriminant);
/// The same quantity from the Gamma-function closed form.
double L_prime_over_L_gamma_form(int discriminant);

/// Well-rounded x-coefficient constants, bracket sums truncated after
/// `terms` terms plus a tail estimate.
Estimate c_square_eval(std::int64_t terms = 10'000'000);
Estimate c_triangle_eval(std::int64_t terms = 10'000'000);

struct ConstantsTable {
  Estimate L1_chi4;
  Estimate L1_chi3;
  Estimate Lp_over_L_chi4;
  Estimate Lp_over_L_chi3;
  Estimate euler_gamma;
  Estimate zeta2;
  Estimate zetap2_over_zeta2;
  Estimate c_square;
  Estimate c_triangle;
};
ConstantsTable constants_table(std::int64_t terms = 10'000'000);

struct IntervalBounds {
  double lower = 0.0;
  double upper = 0.0;
  double exact = 0.0;
  bool holds = false;
};
/// I - 1/(l+g)^s < sum_{l < n < al + b} 1/(n+g)^s < I with I the matching integral.
IntervalBounds interval_sum_bounds(std::int64_t l, double alpha, double beta, double gamma, double s);

struct SandwichResult {
  double s = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double series = 0.0;  // truncated sum
  double tail = 0.0;    // bound on the omitted terms
  double similar = 0.0;  // series of the similar sublattices, zeta(s) L(s, chi)
  /// lower < series < series + tail < upper.
  bool holds = false;
  /// The same bounds applied to series - similar. For the hexagonal lattice
  /// the interval-sum estimates only bound the non-similar part, and the
  /// full series can exceed the upper bound (it does for s >= 2).
  bool excess_holds = false;
};
/// Dirichlet series of the counts at real s, with a tail bound from
/// A(x) <= C x log x (C taken from the top decade of the data).
Estimate truncated_dirichlet_series(const ArithSeq& counts, double s);
SandwichResult sandwich_check_square(double s, const ArithSeq& a_square_counts);
SandwichResult sandwich_check_hex(double s, const ArithSeq& a_hex_counts);

/// Q(m, n) = a m^2 + 2 b m n + c n^2.
struct EpsteinForm {
  double a = 1.0;
  double b = 0.0;
  double c = 1.0;
  double det() const { return a * c - b * b; }
  double operator()(double m, double n) const { return a * m * m + 2.0 * b * m * n + c * n * n; }
};

struct EpsteinValue {
  double value = 0.0;    // truncated sum plus tail
  double partial = 0.0;  // truncated sum only
  double tail = 0.0;
  double density = 0.0;  // lattice points per unit of Q, N(R)/R
  std::int64_t points = 0;
};
/// Sum over 0 < Q(m, n) <= R; tail from the empirical point density.
EpsteinValue epstein_truncated(const EpsteinForm& q, double s, double radius, int threads = 1);
/// Same restricted to coprime (m, n).
EpsteinValue epstein_primitive_truncated(const EpsteinForm& q, double s, double radius, int threads = 1);

struct ResidueEstimate {
  double value = 0.0;
  double error = 0.0;
  std::vector<double> s_values;
  std::vector<double> ladder;      // (s - 1) zeta_Q(s)
  std::vector<double> richardson;  // first extrapolated column
  bool monotone = false;
};
ResidueEstimate epstein_residue_estimate(const EpsteinForm& q, int levels = 8, double radius = 2e5, int threads = 1);

/// Constraint set gcd(m, n) = 1, gcd(m, D) = k, gcd(n, C) = l.
struct RestrictedSpec {
  std::int64_t D = 1;
  std::int64_t k = 1;
  std::int64_t C = 1;
  std::int64_t l = 1;
};
/// Direct constrained sum over Q(m, n) <= R.
double epstein_restricted(const EpsteinForm& q, double s, const RestrictedSpec& spec, double radius);
/// The same sum assembled from sum_{c | lD/k} mu(c) phi(c kC/l; ck, l; s).
double epstein_restricted_moebius(const EpsteinForm& q, double s, const RestrictedSpec& spec, double radius);
/// phi(a; k, l; s) = sum over coprime (m, n) with gcd(n, a) = 1 and Q(km, ln) <= R.
double epstein_phi(const EpsteinForm& q, std::int64_t a, std::int64_t k, std::int64_t l, double s, double radius);

/// A(x) ~ c1 x log x + c2 x.
struct AsymptoticModel {
  double c1 = 0.0;
  double c2 = 0.0;
  double error_exponent = 0.75;
  std::string description;
  double operator()(double x) const;
};
AsymptoticModel square_model(const Estimate& c_square);
AsymptoticModel hex_model(const Estimate& c_triangle);
AsymptoticModel similar_square_model();
AsymptoticModel similar_hex_model();
/// log(3) / (4 Sigma) x for non-rational lattices.
AsymptoticModel nonrational_model(std::int64_t csl_index);

struct ResidualRow {
  std::int64_t x = 0;
  std::int64_t count = 0;
  double model = 0.0;
  double residual = 0.0;
  double relative = 0.0;          // residual / x
  double normalized = 0.0;        // residual / (x^e log x)
  double normalized_sqrt = 0.0;   // residual / sqrt(x)
};
struct ModelReport {
  std::vector<ResidualRow> rows;
  /// Normalized residuals vary by more than a factor 4 across checkpoints.
  bool flagged = false;
};
ModelReport model_report(const ArithSeq& counts, const AsymptoticModel& model, const std::vector<std::int64_t>& checkpoints);

/// Least-squares c2 in A(x) - c1 x log x ~ c2 x over x_min <= x <= N.
double fit_linear_coefficient(const ArithSeq& counts, double c1, std::int64_t x_min);
/// Least-squares (c1, c2) over x_min <= x <= N; an empirical fit, not a law.
AsymptoticModel fitted_model(const ArithSeq& counts, std::int64_t x_min);

}  // namespace wellround
