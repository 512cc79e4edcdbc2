#include "wellround/wr_hex.hpp"

namespace wellround {

ArithSeq b_hex(std::int64_t bound) {
  return convolve(ones_seq(bound), character_seq(DirichletCharacter::chi_minus3(), bound));
}

ArithSeq b_hex_primitive(std::int64_t bound) { return convolve(inv_zeta_2s(bound), b_hex(bound)); }

ArithSeq hex_pair_counts(const HexPairSpec& spec, std::int64_t bound) {
  ArithSeq w(bound);
  if (spec.parity == PairParity::Any) {
    for (std::int64_t p = 1; p * (p + 1) <= bound; ++p) {
      for (std::int64_t q = p + 1; q < 3 * p && p * q <= bound; ++q) ++w[p * q];
    }
    return w;
  }
  for (std::int64_t k = 0; (2 * k + 1) * (2 * k + 3) <= bound; ++k) {
    const std::int64_t p = 2 * k + 1;
    for (std::int64_t l = k + 1;; ++l) {
      const bool inside = spec.odd_window == HexOddWindow::Inclusive ? l <= 3 * k : l < 3 * k + 1;
      const std::int64_t q = 2 * l + 1;
      if (!inside || p * q > bound) break;
      ++w[p * q];
    }
  }
  return w;
}

HexWrParts a_hex_parts(std::int64_t bound, HexOddWindow odd_window) {
  const ArithSeq bpr = b_hex_primitive(bound);
  const ArithSeq alt3 = alt_euler_factor(3, bound);
  HexWrParts r;
  r.similar = b_hex(bound);
  r.even = 3 * shift_support(convolve(convolve(alt3, hex_pair_counts({PairParity::Any}, bound)), bpr), 4);
  r.odd = 3 * convolve(convolve(alt3, hex_pair_counts({PairParity::Odd, odd_window}, bound)), bpr);
  r.total = r.similar + r.even + r.odd;
  return r;
}

ArithSeq a_hex(std::int64_t bound) { return a_hex_parts(bound).total; }

}  // namespace wellround
