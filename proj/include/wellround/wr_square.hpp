#pragma once

#include <cstdint>

#include "wellround/dirichlet.hpp"

namespace wellround {

enum class PairParity { Any, Odd };

/// Pairs p < q < sqrt(3) p with pq = n. With Odd parity p = 2k+1, q = 2l+1 run
/// over odd values only (k < l < sqrt(3) k + (sqrt(3) - 1) / 2).
struct PairCountSpec {
  PairParity parity = PairParity::Any;
};

/// Similar sublattices of Z[i]: 1 * chi_-4.
ArithSeq b_square(std::int64_t bound);
/// Primitive similar sublattices: b_square / zeta(2s).
ArithSeq b_square_primitive(std::int64_t bound);

struct RhombicSquareSeries {
  ArithSeq even;
  ArithSeq odd;
  ArithSeq all;        // rhombic, centred rectangular and square
  ArithSeq primitive;  // the same, primitive only
};
RhombicSquareSeries rhombic_square_series(std::int64_t bound);

struct PrimitiveTypeSeries {
  ArithSeq square;
  ArithSeq rhombic_cr;
  ArithSeq rectangular;
};
PrimitiveTypeSeries primitive_type_series(std::int64_t bound);

ArithSeq pair_counts(const PairCountSpec& spec, std::int64_t bound);

/// Components of the well-rounded count; total = similar + even + odd.
struct SquareWrParts {
  ArithSeq similar;
  ArithSeq even;
  ArithSeq odd;
  ArithSeq total;
};
SquareWrParts a_square_parts(std::int64_t bound);

/// Number of well-rounded sublattices of Z[i] of each index.
ArithSeq a_square(std::int64_t bound);

/// Membership in {2pq|z|^2 : q <= p <= sqrt3 q} u {pq|z|^2 odd : q <= p <= sqrt3 q},
/// decided by direct search.
bool is_admissible_index_square(std::int64_t n);

/// Membership in the larger set {pq|z|^2 : q <= p <= sqrt3 q}.
bool in_superset_index_square(std::int64_t n);

/// Whether n = x^2 + y^2 for some integers x, y.
bool is_sum_of_two_squares(std::int64_t n);

}  // namespace wellround
