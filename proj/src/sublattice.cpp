#include "wellround/sublattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace wellround {

bool SublatticeBasis::is_primitive() const { return std::gcd(std::gcd(m, k), l) == 1; }

SublatticeBasis hermite_normal_form(const IntMatrix2& generators) {
  // row-reduce the second coordinate: columns (x1, y1), (x2, y2)
  std::int64_t x1 = generators(0, 0), y1 = generators(1, 0);
  std::int64_t x2 = generators(0, 1), y2 = generators(1, 1);
  if (x1 * y2 - x2 * y1 == 0) throw Error(ErrorKind::DomainError, "generators are linearly dependent");
  // Euclid on the y-components so that one column ends with y = 0
  while (y1 != 0) {
    const std::int64_t q = y2 / y1;
    x2 -= q * x1;
    y2 -= q * y1;
    std::swap(x1, x2);
    std::swap(y1, y2);
  }
  // now column 1 = (x1, 0), column 2 = (x2, y2)
  std::int64_t m = std::llabs(x1);
  if (y2 < 0) {
    x2 = -x2;
    y2 = -y2;
  }
  std::int64_t k = ((x2 % m) + m) % m;
  return {m, k, y2};
}

std::vector<SublatticeBasis> hnf_enumerate(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::DomainError, "index must be >= 1");
  std::vector<SublatticeBasis> out;
  for (std::int64_t m = 1; m <= n; ++m) {
    if (n % m != 0) continue;
    for (std::int64_t k = 0; k < m; ++k) out.push_back({m, k, n / m});
  }
  return out;
}

std::int64_t g_count(std::int64_t n, int dimension) {
  if (dimension != 2) {
    throw Error(ErrorKind::UnsupportedDimension, "only planar lattices are supported, got d=" + std::to_string(dimension));
  }
  if (n < 1) throw Error(ErrorKind::DomainError, "index must be >= 1");
  std::int64_t s = 0;
  for (std::int64_t m1 = 1; m1 * m1 <= n; ++m1) {
    if (n % m1 != 0) continue;
    const std::int64_t m2 = n / m1;
    s += m2;
    if (m2 != m1) s += m1;
  }
  return s;
}

GramForm sublattice_gram(const IntMatrix2& basis, const GramForm& g) { return transform(g, basis); }

GramForm sublattice_gram(const SublatticeBasis& basis, const GramForm& g) { return transform(g, basis.matrix()); }

CensusReport::CensusReport(std::int64_t max_index)
    : total_(static_cast<std::size_t>(max_index) + 1, 0),
      by_type_(static_cast<std::size_t>(max_index) + 1, std::array<std::int64_t, 6>{}) {}

std::size_t CensusReport::check(std::int64_t n) const {
  if (n < 1 || n > max_index()) {
    throw Error(ErrorKind::OutOfRange, "index " + std::to_string(n) + " outside census range 1.." + std::to_string(max_index()));
  }
  return static_cast<std::size_t>(n);
}

std::int64_t CensusReport::well_rounded(std::int64_t n) const {
  const auto& row = by_type_.at(check(n));
  return row[static_cast<int>(LatticeType::Rhombic)] + row[static_cast<int>(LatticeType::Square)] +
         row[static_cast<int>(LatticeType::Hexagonal)];
}

std::vector<std::int64_t> CensusReport::well_rounded_series() const {
  std::vector<std::int64_t> out(total_.size(), 0);
  for (std::int64_t n = 1; n <= max_index(); ++n) out[static_cast<std::size_t>(n)] = well_rounded(n);
  return out;
}

void CensusReport::record(std::int64_t n, LatticeType t) {
  const std::size_t i = check(n);
  ++total_[i];
  ++by_type_[i][static_cast<int>(t)];
}

CensusReport CensusReport::merged(const CensusReport& other) const {
  CensusReport out(std::max(max_index(), other.max_index()));
  for (const CensusReport* src : {this, &other}) {
    for (std::size_t i = 1; i < src->total_.size(); ++i) {
      out.total_[i] += src->total_[i];
      for (int t = 0; t < 6; ++t) out.by_type_[i][t] += src->by_type_[i][t];
    }
  }
  return out;
}

namespace {

bool fits_integer_path(const GramForm& g, std::int64_t max_index) {
  if (!g.is_integral()) return false;
  const Integer limit = Integer(1) << 40;
  Integer biggest = 0;
  for (const Scalar* e : {&g.a, &g.b, &g.c}) biggest = std::max<Integer>(biggest, abs(e->rat().get_num()));
  // sublattice entries are bounded by ~ 4 * index^2 * max|entry|
  return biggest * Integer(4) * Integer(max_index) * Integer(max_index) < limit;
}

}  // namespace

CensusReport wr_census_range(const GramForm& g, std::int64_t lo, std::int64_t hi, bool primitive_only) {
  g.require_positive_definite();
  if (lo < 1 || hi < lo) throw Error(ErrorKind::DomainError, "bad census range");
  CensusReport report(hi);
  const bool int_path = fits_integer_path(g, hi);
  std::int64_t ga = 0, gb = 0, gc = 0;
  if (int_path) {
    ga = g.a.rat().get_num().get_si();
    gb = g.b.rat().get_num().get_si();
    gc = g.c.rat().get_num().get_si();
  }
  for (std::int64_t n = lo; n <= hi; ++n) {
    for (std::int64_t m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      const std::int64_t l = n / m;
      for (std::int64_t k = 0; k < m; ++k) {
        const SublatticeBasis basis{m, k, l};
        if (primitive_only && !basis.is_primitive()) continue;
        LatticeType t;
        if (int_path) {
          // columns (m, 0), (k, l)
          const std::int64_t a = ga * m * m;
          const std::int64_t b = ga * m * k + gb * m * l;
          const std::int64_t c = ga * k * k + 2 * gb * k * l + gc * l * l;
          const auto r = gauss_reduce_int(a, b, c);
          t = classify_reduced(r[0], r[1], r[2]);
        } else {
          const auto [red, u] = gauss_reduce(sublattice_gram(basis, g));
          t = classify_reduced(red.a, red.b, red.c);
        }
        report.record(n, t);
      }
    }
  }
  return report;
}

CensusReport wr_census_bruteforce(const GramForm& g, std::int64_t max_index, const CensusOptions& options) {
  if (max_index < 1) throw Error(ErrorKind::DomainError, "census bound must be >= 1");
  g.require_positive_definite();
  const int workers = std::max(1, std::min<int>(options.threads, static_cast<int>(max_index)));
  if (workers == 1) return wr_census_range(g, 1, max_index, options.primitive_only);

  // interleaved blocks keep the work balanced; merge order is irrelevant
  constexpr std::int64_t kBlock = 16;
  std::vector<CensusReport> partial(static_cast<std::size_t>(workers), CensusReport(max_index));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::int64_t lo = 1 + w * kBlock; lo <= max_index; lo += workers * kBlock) {
        const std::int64_t hi = std::min(max_index, lo + kBlock - 1);
        partial[static_cast<std::size_t>(w)] =
            partial[static_cast<std::size_t>(w)].merged(wr_census_range(g, lo, hi, options.primitive_only));
      }
    });
  }
  for (auto& t : pool) t.join();
  CensusReport out(max_index);
  for (const auto& p : partial) out = out.merged(p);
  return out;
}

}  // namespace wellround
