#include "wellround/general.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace wellround {

namespace {

using i128 = __int128;

struct IntForm {
  std::int64_t a, b, c;
  std::int64_t det() const { return a * c - b * b; }
  i128 value(const Vec2& v) const {
    return i128(a) * v[0] * v[0] + i128(2) * b * v[0] * v[1] + i128(c) * v[1] * v[1];
  }
  GramForm gram() const { return {Scalar(a), Scalar(b), Scalar(c)}; }
};

IntForm primitive_form(const GramForm& g) {
  g.require_positive_definite();
  const auto f = integral_primitive(g);
  return {f[0], f[1], f[2]};
}

Vec2 sign_normalized(Vec2 v) {
  if (v[0] < 0 || (v[0] == 0 && v[1] < 0)) v = {-v[0], -v[1]};
  return v;
}

std::int64_t gcd2(const Vec2& v) { return std::gcd(v[0], v[1]); }

Vec2 orthogonal_int(const Vec2& w, const IntForm& f, std::int64_t* gstar) {
  const std::int64_t u1 = f.a * w[0] + f.b * w[1];
  const std::int64_t u2 = f.b * w[0] + f.c * w[1];
  const std::int64_t g = std::gcd(u1, u2);
  if (gstar != nullptr) *gstar = g;
  return sign_normalized({-u2 / g, u1 / g});
}

// Calls visit(v) for every primitive v with first nonzero coordinate positive
// and f(v) <= bound.
template <typename Visit>
void for_each_short_primitive(const IntForm& f, i128 bound, Visit visit) {
  const double d = static_cast<double>(f.det());
  const double m = static_cast<double>(bound);
  const auto ymax = static_cast<std::int64_t>(std::sqrt(m * f.a / d)) + 1;
  for (std::int64_t y = 0; y <= ymax; ++y) {
    const double disc = std::max(0.0, f.a * m - d * static_cast<double>(y) * static_cast<double>(y));
    const double centre = -static_cast<double>(f.b) * static_cast<double>(y) / f.a;
    const double half = std::sqrt(disc) / f.a;
    std::int64_t lo = static_cast<std::int64_t>(std::floor(centre - half)) - 1;
    const std::int64_t hi = static_cast<std::int64_t>(std::ceil(centre + half)) + 1;
    if (y == 0) lo = 1;
    for (std::int64_t x = lo; x <= hi; ++x) {
      const Vec2 v{x, y};
      if (y == 0 && x != 1) continue;
      if (y > 0 || x > 0) {
        if (std::gcd(x, y) == 1 && f.value(v) <= bound) visit(v);
      }
    }
  }
}

// Adds the contributions of one frame with squared lengths A = |w|^2 and
// B = |z|^2 (any ordered type with exact comparison).
template <typename T>
void accumulate_frame(std::int64_t sigma, const T& big_a, const T& big_b, bool odd_window, std::int64_t x,
                      ArithSeq& counts, ArithSeq& hits) {
  const T three(3);
  // even window: index 2 sigma k l, (k, l) >= 1
  for (std::int64_t k = 1; 2 * sigma * k <= x; ++k) {
    const T ka = T(k * k) * big_a;
    for (std::int64_t l = 1; 2 * sigma * k * l <= x; ++l) {
      const T lb = T(l * l) * big_b;
      const T upper = three * ka;  // l^2 B <= 3 k^2 A
      if (upper < lb) break;
      const T lower = three * lb;  // k^2 A <= 3 l^2 B
      if (lower < ka) continue;
      const std::int64_t n = 2 * sigma * k * l;
      ++counts[n];
      if (lb == upper || lower == ka) ++hits[n];
    }
  }
  if (!odd_window) return;
  // odd window: p = 2k+1, q = 2l+1, index sigma p q / 2
  for (std::int64_t p = 1; sigma * p <= 2 * x; p += 2) {
    const T pa = T(p * p) * big_a;
    for (std::int64_t q = 1; sigma * p * q <= 2 * x; q += 2) {
      const T qb = T(q * q) * big_b;
      const T upper = three * pa;
      if (upper < qb) break;
      const T lower = three * qb;
      if (lower < pa) continue;
      const std::int64_t n = sigma * p * q / 2;
      ++counts[n];
      if (qb == upper || lower == pa) ++hits[n];
    }
  }
}

// Exact integer wrapper so the window template works with wide products.
struct Wide {
  i128 v;
  explicit Wide(i128 x) : v(x) {}
  friend Wide operator*(const Wide& a, const Wide& b) { return Wide(a.v * b.v); }
  friend bool operator<(const Wide& a, const Wide& b) { return a.v < b.v; }
  friend bool operator==(const Wide& a, const Wide& b) { return a.v == b.v; }
};

std::int64_t squarefree_part(std::int64_t n) {
  std::int64_t out = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2 == 1) out *= p;
  }
  return out * n;
}

}  // namespace

const char* to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

const char* to_string(ExistenceKind k) {
  switch (k) {
    case ExistenceKind::RationalLattice: return "RationalLattice";
    case ExistenceKind::TraceRationalOnly: return "TraceRationalOnly";
    case ExistenceKind::NormConditionHolds: return "NormConditionHolds";
    case ExistenceKind::NoWellRounded: return "NoWellRounded";
  }
  return "?";
}

std::string to_string(const Vec2& v) { return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")"; }

ReflectionFrame make_frame(const Vec2& w_in, const Vec2& z_in, const GramForm& g) {
  if (gcd2(w_in) != 1 || gcd2(z_in) != 1) throw Error(ErrorKind::NotPrimitiveVector, "frame vectors must be primitive");
  if (form_inner(g, w_in[0], w_in[1], z_in[0], z_in[1]).sign() != 0) {
    throw Error(ErrorKind::DomainError, "frame vectors " + to_string(w_in) + ", " + to_string(z_in) + " are not orthogonal");
  }
  Vec2 w = sign_normalized(w_in);
  Vec2 z = sign_normalized(z_in);
  Scalar nw = form_value(g, w[0], w[1]);
  Scalar nz = form_value(g, z[0], z[1]);
  if (nw < nz || (nw == nz && w < z)) {
    std::swap(w, z);
    std::swap(nw, nz);
  }
  ReflectionFrame f;
  f.w = w;
  f.z = z;
  f.sigma = std::llabs(w[0] * z[1] - w[1] * z[0]);
  f.kappa_sq = nw / nz;
  f.parity = f.sigma % 2 == 0 ? Parity::Even : Parity::Odd;
  return f;
}

GramForm gram_from_trace_norm(const Scalar& t, const Scalar& n) {
  GramForm g{Scalar(1), t / Scalar(2), n};
  g.require_positive_definite();
  return g;
}

ExistenceVerdict existence(const GramForm& g) {
  g.require_positive_definite();
  const Scalar t = Scalar(2) * g.b / g.a;
  const Scalar n = g.c / g.a;
  ExistenceVerdict v;
  if (t.is_rational()) {
    v.kind = n.is_rational() ? ExistenceKind::RationalLattice : ExistenceKind::TraceRationalOnly;
    return v;
  }
  // t = t0 + t1 sqrt D with t1 != 0; n = q + r t forces r = n1 / t1
  const Rational r = n.irr() / t.irr();
  const Rational q = n.rat() - r * t.rat();
  if (rational_sqrt(Rational(q + r * r), nullptr)) {
    v.kind = ExistenceKind::NormConditionHolds;
    v.q = q;
    v.r = r;
  }
  return v;
}

ReflectionFrame unique_frame(const GramForm& g) {
  const ExistenceVerdict v = existence(g);
  const Scalar t = Scalar(2) * g.b / g.a;
  Vec2 w, z;
  switch (v.kind) {
    case ExistenceKind::RationalLattice:
      throw Error(ErrorKind::NoFrame, "rational lattices have infinitely many frames; enumerate them instead");
    case ExistenceKind::NoWellRounded:
      throw Error(ErrorKind::NoFrame, "lattice " + g.to_string() + " has no rectangular sublattice");
    case ExistenceKind::TraceRationalOnly: {
      const Rational half = t.rat() / 2;
      w = {1, 0};
      z = {half.get_num().get_si(), -half.get_den().get_si()};
      break;
    }
    case ExistenceKind::NormConditionHolds: {
      Rational s;
      rational_sqrt(Rational(v.q + v.r * v.r), &s);
      Rational slope = sgn(v.q) != 0 ? Rational((v.r + s) / v.q) : Rational(-1 / (2 * v.r));
      slope.canonicalize();
      w = {slope.get_den().get_si(), slope.get_num().get_si()};
      Rational other = -slope * v.q;
      other.canonicalize();
      z = {other.get_num().get_si(), other.get_den().get_si()};
      break;
    }
  }
  return make_frame(w, z, g);
}

std::int64_t g_star(const Vec2& w, const GramForm& g) {
  if (!g.is_integral()) throw Error(ErrorKind::NotIntegralForm, "Gram matrix " + g.to_string() + " is not integral");
  const IntForm f{g.a.rat().get_num().get_si(), g.b.rat().get_num().get_si(), g.c.rat().get_num().get_si()};
  if (std::gcd(std::gcd(f.a, f.b), f.c) != 1) {
    throw Error(ErrorKind::NotIntegralForm, "Gram matrix " + g.to_string() + " is not primitive");
  }
  g.require_positive_definite();
  if (gcd2(w) != 1) throw Error(ErrorKind::NotPrimitiveVector, "vector " + to_string(w) + " is not primitive");
  std::int64_t gs = 0;
  orthogonal_int(w, f, &gs);
  return gs;
}

std::int64_t brs_index(const Vec2& w, const GramForm& g) {
  const std::int64_t gs = g_star(w, g);
  const Scalar norm = form_value(g, w[0], w[1]);
  return norm.rat().get_num().get_si() / gs;
}

Parity brs_parity(const Vec2& w, const GramForm& g) { return brs_index(w, g) % 2 == 0 ? Parity::Even : Parity::Odd; }

Vec2 orthogonal_primitive(const Vec2& w, const GramForm& g) {
  g_star(w, g);
  const IntForm f{g.a.rat().get_num().get_si(), g.b.rat().get_num().get_si(), g.c.rat().get_num().get_si()};
  return orthogonal_int(w, f, nullptr);
}

CslInfo gamma_tilde_and_csl(const ReflectionFrame& frame) {
  CslInfo info;
  info.sigma = frame.sigma;
  info.tilde = frame.sigma % 2 == 0;
  info.index = info.tilde ? frame.sigma / 2 : frame.sigma;
  return info;
}

bool is_commensurate_to_hexagonal(const GramForm& g) {
  if (!is_rational(g)) return false;
  return squarefree_part(primitive_form(g).det()) == 3;
}

WrCount count_wr_nonrational_report(const GramForm& g, std::int64_t x) {
  if (x < 1) throw Error(ErrorKind::DomainError, "index bound must be >= 1");
  if (is_rational(g)) throw Error(ErrorKind::NotApplicable, "lattice is rational; use the rational counter");
  const ReflectionFrame frame = unique_frame(g);
  WrCount out{ArithSeq(x), ArithSeq(x), 1};
  const Scalar big_a = form_value(g, frame.w[0], frame.w[1]);
  const Scalar big_b = form_value(g, frame.z[0], frame.z[1]);
  accumulate_frame<Scalar>(frame.sigma, big_a, big_b, frame.parity == Parity::Even, x, out.counts, out.boundary_hits);
  return out;
}

ArithSeq count_wr_nonrational(const GramForm& g, std::int64_t x) { return count_wr_nonrational_report(g, x).counts; }

std::vector<ReflectionFrame> enumerate_frames(const GramForm& g, std::int64_t bound) {
  if (bound < 1) throw Error(ErrorKind::DomainError, "height bound must be >= 1");
  if (!is_rational(g)) throw Error(ErrorKind::NotRational, "frame enumeration needs a rational lattice");
  const IntForm f = primitive_form(g);
  const GramForm fg = f.gram();
  std::map<std::pair<Vec2, Vec2>, ReflectionFrame> seen;
  for (std::int64_t x = 0; x <= bound; ++x) {
    for (std::int64_t y = -bound; y <= bound; ++y) {
      if ((x == 0 && y <= 0) || std::gcd(x, y) != 1) continue;
      const Vec2 w{x, y};
      ReflectionFrame fr = make_frame(w, orthogonal_int(w, f, nullptr), fg);
      fr.kappa_sq = form_value(g, fr.w[0], fr.w[1]) / form_value(g, fr.z[0], fr.z[1]);
      seen.emplace(std::pair{fr.w, fr.z}, fr);
    }
  }
  std::vector<ReflectionFrame> out;
  for (auto& [key, fr] : seen) out.push_back(fr);
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    return std::tie(l.sigma, l.w, l.z) < std::tie(r.sigma, r.w, r.z);
  });
  return out;
}

std::vector<ReflectionFrame> frames_up_to_index(const GramForm& g, std::int64_t max_sigma) {
  if (!is_rational(g)) throw Error(ErrorKind::NotRational, "frame enumeration needs a rational lattice");
  const IntForm f = primitive_form(g);
  const GramForm fg = f.gram();
  // (w, w) = sigma g*(w) and g*(w) | d, so both members satisfy (w, w) <= sigma d
  const i128 norm_bound = i128(max_sigma) * f.det();
  std::map<std::pair<Vec2, Vec2>, ReflectionFrame> seen;
  for_each_short_primitive(f, norm_bound, [&](const Vec2& w) {
    std::int64_t gs = 0;
    const Vec2 z = orthogonal_int(w, f, &gs);
    if (f.value(w) / gs > max_sigma) return;
    const ReflectionFrame fr = make_frame(w, z, fg);
    seen.emplace(std::pair{fr.w, fr.z}, fr);
  });
  std::vector<ReflectionFrame> out;
  for (auto& [key, fr] : seen) out.push_back(fr);
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    return std::tie(l.sigma, l.w, l.z) < std::tie(r.sigma, r.w, r.z);
  });
  return out;
}

WrCount count_wr_rational_report(const GramForm& g, std::int64_t x) {
  if (x < 1) throw Error(ErrorKind::DomainError, "index bound must be >= 1");
  if (!is_rational(g)) throw Error(ErrorKind::NotRational, "lattice " + g.to_string() + " is not rational");
  const IntForm f = primitive_form(g);
  // smallest index of a frame is 2 sigma (even window) or sigma / 2 (odd window)
  const auto frames = frames_up_to_index(g, 2 * x);
  WrCount out{ArithSeq(x), ArithSeq(x), static_cast<std::int64_t>(frames.size())};
  for (const auto& fr : frames) {
    accumulate_frame<Wide>(fr.sigma, Wide(f.value(fr.w)), Wide(f.value(fr.z)), fr.parity == Parity::Even, x, out.counts,
                           out.boundary_hits);
  }
  const bool hex = is_commensurate_to_hexagonal(g);
  for (std::int64_t n = 1; n <= x; ++n) {
    const std::int64_t h = out.boundary_hits(n);
    if (h == 0) continue;
    if (!hex || h % 3 != 0) {
      throw Error(ErrorKind::DomainError, "unexpected window boundary hits at index " + std::to_string(n));
    }
    // each hexagonal sublattice sits on the boundary of exactly three frames
    out.counts[n] -= 2 * (h / 3);
  }
  return out;
}

ArithSeq count_wr_rational(const GramForm& g, std::int64_t x) { return count_wr_rational_report(g, x).counts; }

}  // namespace wellround
