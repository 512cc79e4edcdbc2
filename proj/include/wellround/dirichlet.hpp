#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "wellround/error.hpp"

namespace wellround {

/// Truncated arithmetic function a(1..N); slot 0 is unused and always zero.
class ArithSeq {
 public:
  ArithSeq() = default;
  explicit ArithSeq(std::int64_t bound) : v_(static_cast<std::size_t>(check_bound(bound)) + 1, 0) {}
  ArithSeq(std::int64_t bound, std::vector<std::int64_t> values);

  std::int64_t bound() const { return static_cast<std::int64_t>(v_.size()) - 1; }

  /// Throws OutOfRange outside 1..N.
  std::int64_t operator()(std::int64_t n) const { return v_[at(n)]; }
  std::int64_t& operator[](std::int64_t n) { return v_[at(n)]; }

  const std::vector<std::int64_t>& raw() const { return v_; }

  ArithSeq& operator+=(const ArithSeq& o);
  ArithSeq& operator-=(const ArithSeq& o);
  ArithSeq& operator*=(std::int64_t k);

  friend ArithSeq operator+(ArithSeq a, const ArithSeq& b) { return a += b; }
  friend ArithSeq operator-(ArithSeq a, const ArithSeq& b) { return a -= b; }
  friend ArithSeq operator*(std::int64_t k, ArithSeq a) { return a *= k; }
  friend bool operator==(const ArithSeq&, const ArithSeq&) = default;

  /// Copy truncated to a smaller bound.
  ArithSeq truncated(std::int64_t bound) const;

 private:
  static std::int64_t check_bound(std::int64_t n);
  std::size_t at(std::int64_t n) const;

  std::vector<std::int64_t> v_{0};
};

/// Real primitive character given by its period table (values at 0..q-1).
struct DirichletCharacter {
  std::int64_t modulus = 1;
  std::vector<int> table{1};

  int operator()(std::int64_t n) const { return table[static_cast<std::size_t>(((n % modulus) + modulus) % modulus)]; }

  static DirichletCharacter chi_minus4() { return {4, {0, 1, 0, -1}}; }
  static DirichletCharacter chi_minus3() { return {3, {0, 1, -1}}; }
};

ArithSeq convolve(const ArithSeq& f, const ArithSeq& g);
ArithSeq delta_seq(std::int64_t bound);
ArithSeq ones_seq(std::int64_t bound);
ArithSeq character_seq(const DirichletCharacter& chi, std::int64_t bound);
/// Linear sieve.
ArithSeq moebius_seq(std::int64_t bound);
/// Coefficients of 1/zeta(2s): mu(sqrt n) on squares, 0 elsewhere.
ArithSeq inv_zeta_2s(std::int64_t bound);
/// Coefficients of 1/(1 + m^-s): (-1)^j at m^j.
ArithSeq alt_euler_factor(std::int64_t m, std::int64_t bound);
/// Multiplication by m^-s.
ArithSeq shift_support(const ArithSeq& f, std::int64_t m);
/// Sum of f(n) for n <= x; throws OutOfRange for x > N.
std::int64_t summatory(const ArithSeq& f, std::int64_t x);
/// Running sums A(0..N).
std::vector<std::int64_t> partial_sums(const ArithSeq& f);

void write_csv(std::ostream& os, const ArithSeq& f, const char* column = "a");

}  // namespace wellround
