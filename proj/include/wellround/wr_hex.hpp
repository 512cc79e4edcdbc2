#pragma once

#include <cstdint>

#include "wellround/dirichlet.hpp"
#include "wellround/wr_square.hpp"

namespace wellround {

enum class HexOddWindow {
  StrictPlusOne,  // k < l < 3k + 1
  Inclusive,      // k < l <= 3k
};

/// Pairs p < q < 3p with pq = n; with Odd parity p = 2k+1, q = 2l+1 and the
/// chosen encoding of the odd window.
struct HexPairSpec {
  PairParity parity = PairParity::Any;
  HexOddWindow odd_window = HexOddWindow::StrictPlusOne;
};

/// Similar sublattices of Z[rho]: 1 * chi_-3.
ArithSeq b_hex(std::int64_t bound);
ArithSeq b_hex_primitive(std::int64_t bound);

ArithSeq hex_pair_counts(const HexPairSpec& spec, std::int64_t bound);

struct HexWrParts {
  ArithSeq similar;
  ArithSeq even;
  ArithSeq odd;
  ArithSeq total;
};
HexWrParts a_hex_parts(std::int64_t bound, HexOddWindow odd_window = HexOddWindow::StrictPlusOne);

/// Number of well-rounded sublattices of Z[rho] of each index.
ArithSeq a_hex(std::int64_t bound);

}  // namespace wellround
