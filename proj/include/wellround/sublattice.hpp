#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "wellround/lattice.hpp"

namespace wellround {

/// Column Hermite normal form [[m, k], [0, l]] with m, l >= 1 and
/// 0 <= k < m. Columns are the sublattice generators in ambient coordinates.
struct SublatticeBasis {
  std::int64_t m = 1;
  std::int64_t k = 0;
  std::int64_t l = 1;

  std::int64_t index() const { return m * l; }
  IntMatrix2 matrix() const { return IntMatrix2::from_columns(m, 0, k, l); }
  /// Not contained in any j * ambient, j >= 2.
  bool is_primitive() const;

  friend bool operator==(const SublatticeBasis&, const SublatticeBasis&) = default;
};

/// Canonical HNF of the lattice spanned by the columns of an arbitrary
/// nonsingular integer matrix.
SublatticeBasis hermite_normal_form(const IntMatrix2& generators);

std::vector<SublatticeBasis> hnf_enumerate(std::int64_t n);

/// Number of index-n sublattices of a rank-d lattice; only d = 2 is supported.
std::int64_t g_count(std::int64_t n, int dimension = 2);

/// B^T g B for the generators in the columns of B.
GramForm sublattice_gram(const IntMatrix2& basis, const GramForm& g);
GramForm sublattice_gram(const SublatticeBasis& basis, const GramForm& g);

/// Per-index tallies of sublattices by geometric type.
class CensusReport {
 public:
  CensusReport() = default;
  explicit CensusReport(std::int64_t max_index);

  std::int64_t max_index() const { return static_cast<std::int64_t>(total_.size()) - 1; }

  std::int64_t total(std::int64_t n) const { return total_.at(check(n)); }
  std::int64_t by_type(std::int64_t n, LatticeType t) const { return by_type_.at(check(n))[static_cast<int>(t)]; }
  std::int64_t well_rounded(std::int64_t n) const;

  /// Vector indexed 0..N (slot 0 unused) of the well-rounded counts.
  std::vector<std::int64_t> well_rounded_series() const;

  void record(std::int64_t n, LatticeType t);

  /// Index-wise sum; the result covers the larger of the two ranges.
  /// Associative and commutative.
  CensusReport merged(const CensusReport& other) const;

  friend bool operator==(const CensusReport&, const CensusReport&) = default;

 private:
  std::size_t check(std::int64_t n) const;

  std::vector<std::int64_t> total_{0};
  std::vector<std::array<std::int64_t, 6>> by_type_{std::array<std::int64_t, 6>{}};
};

struct CensusOptions {
  /// Only count sublattices not contained in j * Gamma for any j >= 2.
  bool primitive_only = false;
  /// Worker threads; the report does not depend on this value.
  int threads = 1;
};

/// Classifies every sublattice of index <= N by brute force.
CensusReport wr_census_bruteforce(const GramForm& g, std::int64_t max_index, const CensusOptions& options = {});

/// Census restricted to the index range [lo, hi]; pieces merge into the full report.
CensusReport wr_census_range(const GramForm& g, std::int64_t lo, std::int64_t hi, bool primitive_only = false);

}  // namespace wellround
