#include "wellround/dirichlet.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace wellround {

ArithSeq::ArithSeq(std::int64_t bound, std::vector<std::int64_t> values) : ArithSeq(bound) {
  if (static_cast<std::int64_t>(values.size()) != bound) {
    throw Error(ErrorKind::DomainError, "expected " + std::to_string(bound) + " values");
  }
  std::copy(values.begin(), values.end(), v_.begin() + 1);
}

std::int64_t ArithSeq::check_bound(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::DomainError, "truncation bound must be >= 1");
  return n;
}

std::size_t ArithSeq::at(std::int64_t n) const {
  if (n < 1 || n > bound()) {
    throw Error(ErrorKind::OutOfRange, "coefficient " + std::to_string(n) + " requested beyond bound " + std::to_string(bound()));
  }
  return static_cast<std::size_t>(n);
}

ArithSeq& ArithSeq::operator+=(const ArithSeq& o) {
  v_.resize(static_cast<std::size_t>(std::min(bound(), o.bound())) + 1);
  for (std::size_t i = 1; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

ArithSeq& ArithSeq::operator-=(const ArithSeq& o) {
  v_.resize(static_cast<std::size_t>(std::min(bound(), o.bound())) + 1);
  for (std::size_t i = 1; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

ArithSeq& ArithSeq::operator*=(std::int64_t k) {
  for (auto& x : v_) x *= k;
  return *this;
}

ArithSeq ArithSeq::truncated(std::int64_t b) const {
  if (b > bound()) throw Error(ErrorKind::OutOfRange, "cannot extend a truncated series");
  ArithSeq r(b);
  std::copy(v_.begin(), v_.begin() + b + 1, r.v_.begin());
  return r;
}

ArithSeq convolve(const ArithSeq& f, const ArithSeq& g) {
  const std::int64_t n = std::min(f.bound(), g.bound());
  std::vector<std::int64_t> out(static_cast<std::size_t>(n) + 1, 0);
  const auto& fv = f.raw();
  const auto& gv = g.raw();
  for (std::int64_t d = 1; d <= n; ++d) {
    const std::int64_t fd = fv[static_cast<std::size_t>(d)];
    if (fd == 0) continue;
    for (std::int64_t e = 1, m = d; m <= n; ++e, m += d) out[static_cast<std::size_t>(m)] += fd * gv[static_cast<std::size_t>(e)];
  }
  out.erase(out.begin());
  return ArithSeq(n, std::move(out));
}

ArithSeq delta_seq(std::int64_t bound) {
  ArithSeq r(bound);
  r[1] = 1;
  return r;
}

ArithSeq ones_seq(std::int64_t bound) {
  return ArithSeq(bound, std::vector<std::int64_t>(static_cast<std::size_t>(bound), 1));
}

ArithSeq character_seq(const DirichletCharacter& chi, std::int64_t bound) {
  ArithSeq r(bound);
  for (std::int64_t n = 1; n <= bound; ++n) r[n] = chi(n);
  return r;
}

ArithSeq moebius_seq(std::int64_t bound) {
  ArithSeq mu(bound);
  std::vector<std::int64_t> primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  mu[1] = 1;
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (!composite[static_cast<std::size_t>(i)]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::int64_t p : primes) {
      if (i * p > bound) break;
      composite[static_cast<std::size_t>(i * p)] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  return mu;
}

ArithSeq inv_zeta_2s(std::int64_t bound) {
  ArithSeq r(bound);
  std::int64_t root = 1;
  while ((root + 1) * (root + 1) <= bound) ++root;
  const ArithSeq mu = moebius_seq(root);
  for (std::int64_t k = 1; k <= root; ++k) r[k * k] = mu(k);
  return r;
}

ArithSeq alt_euler_factor(std::int64_t m, std::int64_t bound) {
  if (m < 2) throw Error(ErrorKind::DomainError, "Euler factor base must be >= 2");
  ArithSeq r(bound);
  std::int64_t sign = 1;
  for (std::int64_t p = 1; p <= bound; p *= m) {
    r[p] = sign;
    sign = -sign;
    if (p > bound / m) break;
  }
  return r;
}

ArithSeq shift_support(const ArithSeq& f, std::int64_t m) {
  if (m < 1) throw Error(ErrorKind::DomainError, "shift must be >= 1");
  ArithSeq r(f.bound());
  for (std::int64_t n = m, j = 1; n <= f.bound(); n += m, ++j) r[n] = f(j);
  return r;
}

std::int64_t summatory(const ArithSeq& f, std::int64_t x) {
  if (x > f.bound()) {
    throw Error(ErrorKind::OutOfRange, "summatory at " + std::to_string(x) + " beyond bound " + std::to_string(f.bound()));
  }
  std::int64_t s = 0;
  for (std::int64_t n = 1; n <= x; ++n) s += f(n);
  return s;
}

std::vector<std::int64_t> partial_sums(const ArithSeq& f) {
  std::vector<std::int64_t> out(f.raw().size(), 0);
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = out[i - 1] + f.raw()[i];
  return out;
}

void write_csv(std::ostream& os, const ArithSeq& f, const char* column) {
  os << "n," << column << ",summatory\n";
  std::int64_t acc = 0;
  for (std::int64_t n = 1; n <= f.bound(); ++n) {
    acc += f(n);
    os << n << ',' << f(n) << ',' << acc << '\n';
  }
}

}  // namespace wellround
