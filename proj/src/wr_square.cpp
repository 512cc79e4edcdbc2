#include "wellround/wr_square.hpp"

#include <cassert>

namespace wellround {

namespace {

ArithSeq odd_indicator(std::int64_t bound) {
  ArithSeq r(bound);
  for (std::int64_t n = 1; n <= bound; n += 2) r[n] = 1;
  return r;
}

// strict q < sqrt(3) p, by squaring; q^2 = 3p^2 has no integer solution
bool below_sqrt3(std::int64_t q, std::int64_t p) {
  assert(q * q != 3 * p * p);
  return q * q < 3 * p * p;
}

// q <= p <= sqrt(3) q
bool in_closed_window(std::int64_t p, std::int64_t q) { return q <= p && p * p <= 3 * q * q; }

bool has_window_factorisation(std::int64_t r) {
  for (std::int64_t q = 1; q * q <= r; ++q) {
    if (r % q == 0 && in_closed_window(r / q, q)) return true;
  }
  return false;
}

}  // namespace

ArithSeq b_square(std::int64_t bound) {
  return convolve(ones_seq(bound), character_seq(DirichletCharacter::chi_minus4(), bound));
}

ArithSeq b_square_primitive(std::int64_t bound) { return convolve(inv_zeta_2s(bound), b_square(bound)); }

RhombicSquareSeries rhombic_square_series(std::int64_t bound) {
  const ArithSeq bpr = b_square_primitive(bound);
  const ArithSeq one = ones_seq(bound);
  const ArithSeq odd = odd_indicator(bound);
  RhombicSquareSeries r;
  r.even = shift_support(convolve(convolve(one, one), bpr), 2);
  r.odd = convolve(convolve(convolve(odd, odd), alt_euler_factor(2, bound)), bpr);
  r.all = r.even + r.odd;
  r.primitive = convolve(inv_zeta_2s(bound), r.all);
  return r;
}

PrimitiveTypeSeries primitive_type_series(std::int64_t bound) {
  const ArithSeq bpr = b_square_primitive(bound);
  const ArithSeq one = ones_seq(bound);
  PrimitiveTypeSeries r;
  r.square = bpr;
  r.rhombic_cr = rhombic_square_series(bound).primitive - bpr;
  r.rectangular = convolve(convolve(convolve(inv_zeta_2s(bound), one), one), bpr) - bpr;
  return r;
}

ArithSeq pair_counts(const PairCountSpec& spec, std::int64_t bound) {
  ArithSeq w(bound);
  const std::int64_t step = spec.parity == PairParity::Odd ? 2 : 1;
  for (std::int64_t p = 1; p * (p + step) <= bound; p += step) {
    for (std::int64_t q = p + step; p * q <= bound && below_sqrt3(q, p); q += step) ++w[p * q];
  }
  return w;
}

SquareWrParts a_square_parts(std::int64_t bound) {
  const ArithSeq bpr = b_square_primitive(bound);
  SquareWrParts r;
  r.similar = b_square(bound);
  r.even = 2 * shift_support(convolve(pair_counts({PairParity::Any}, bound), bpr), 2);
  r.odd = 2 * convolve(convolve(alt_euler_factor(2, bound), pair_counts({PairParity::Odd}, bound)), bpr);
  r.total = r.similar + r.even + r.odd;
  return r;
}

ArithSeq a_square(std::int64_t bound) { return a_square_parts(bound).total; }

bool is_sum_of_two_squares(std::int64_t n) {
  if (n < 0) return false;
  for (std::int64_t x = 0; x * x <= n; ++x) {
    const std::int64_t rest = n - x * x;
    std::int64_t y = 0;
    while ((y + 1) * (y + 1) <= rest) ++y;
    if (y * y == rest) return true;
  }
  return false;
}

bool is_admissible_index_square(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::DomainError, "index must be >= 1");
  for (std::int64_t norm = 1; norm <= n; ++norm) {
    if (n % norm != 0 || !is_sum_of_two_squares(norm)) continue;
    const std::int64_t r = n / norm;
    if (r % 2 == 0 && has_window_factorisation(r / 2)) return true;
    if (n % 2 == 1 && has_window_factorisation(r)) return true;
  }
  return false;
}

bool in_superset_index_square(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::DomainError, "index must be >= 1");
  for (std::int64_t norm = 1; norm <= n; ++norm) {
    if (n % norm == 0 && is_sum_of_two_squares(norm) && has_window_factorisation(n / norm)) return true;
  }
  return false;
}

}  // namespace wellround
