#include "wellround/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

namespace wellround {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::MixedExtension: return "MixedExtension";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::NoFrame: return "NoFrame";
    case ErrorKind::NotPrimitiveVector: return "NotPrimitiveVector";
    case ErrorKind::NotIntegralForm: return "NotIntegralForm";
    case ErrorKind::UnsupportedDiscriminant: return "UnsupportedDiscriminant";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

bool is_squarefree(std::int64_t d) {
  if (d < 1) return false;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

bool rational_sqrt(const Rational& q, Rational* root) {
  if (sgn(q) < 0) return false;
  Integer num = q.get_num();
  Integer den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return false;
  }
  if (root != nullptr) {
    Integer rn = sqrt(num);
    Integer rd = sqrt(den);
    *root = Rational(rn, rd);
    root->canonicalize();
  }
  return true;
}

Scalar::Scalar(Rational rat, Rational irr, std::int64_t d)
    : rat_(std::move(rat)), irr_(std::move(irr)), d_(d) {
  rat_.canonicalize();
  irr_.canonicalize();
  if (sgn(irr_) != 0 && !is_squarefree(d_)) {
    throw Error(ErrorKind::DomainError, "radicand must be squarefree and > 1, got " + std::to_string(d_));
  }
  if (d_ == 1) throw Error(ErrorKind::DomainError, "radicand 1 is not irrational");
  normalize();
}

Scalar Scalar::sqrt_of(std::int64_t d) { return Scalar(Rational(0), Rational(1), d); }

void Scalar::normalize() {
  if (sgn(irr_) == 0) d_ = 0;
}

std::int64_t Scalar::common_radicand(const Scalar& a, const Scalar& b) {
  if (a.d_ == 0) return b.d_;
  if (b.d_ == 0 || a.d_ == b.d_) return a.d_;
  throw Error(ErrorKind::MixedExtension,
              "cannot combine Q(sqrt " + std::to_string(a.d_) + ") with Q(sqrt " + std::to_string(b.d_) + ")");
}

int Scalar::sign() const {
  const int sr = sgn(rat_);
  const int si = sgn(irr_);
  if (si == 0) return sr;
  if (sr == 0 || sr == si) return si;
  // opposite signs: compare rat^2 with irr^2 * D
  const Rational lhs = rat_ * rat_;
  const Rational rhs = irr_ * irr_ * Rational(static_cast<long>(d_));
  const int c = cmp(lhs, rhs);
  return c > 0 ? sr : si;  // never 0: D is not a rational square
}

Rational Scalar::norm() const { return rat_ * rat_ - irr_ * irr_ * Rational(static_cast<long>(d_)); }

Scalar Scalar::conjugate() const {
  Scalar r = *this;
  r.irr_ = -r.irr_;
  return r;
}

Integer Scalar::floor() const {
  if (is_rational()) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), rat_.get_num_mpz_t(), rat_.get_den_mpz_t());
    return q;
  }
  Integer n(std::floor(to_double()));
  // the double estimate is off by at most one step for sane magnitudes;
  // the loops make the result exact regardless
  while ((*this - Scalar(Rational(n))).sign() < 0) n -= 1;
  while ((*this - Scalar(Rational(n + 1))).sign() >= 0) n += 1;
  return n;
}

Integer Scalar::ceil() const { return -((-*this).floor()); }

double Scalar::to_double() const {
  double v = rat_.get_d();
  if (!is_rational()) v += irr_.get_d() * std::sqrt(static_cast<double>(d_));
  return v;
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  if (is_rational()) {
    os << rat_.get_str();
    return os.str();
  }
  const bool has_rat = sgn(rat_) != 0;
  if (has_rat) os << rat_.get_str();
  Rational c = irr_;
  if (sgn(c) < 0) {
    os << "-";
    c = -c;
  } else if (has_rat) {
    os << "+";
  }
  if (c != 1) os << c.get_str() << "*";
  os << "sqrt(" << d_ << ")";
  return os.str();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = common_radicand(*this, o);
  rat_ += o.rat_;
  irr_ += o.irr_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = common_radicand(*this, o);
  rat_ -= o.rat_;
  irr_ -= o.irr_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  const std::int64_t d = common_radicand(*this, o);
  Rational r = rat_ * o.rat_ + irr_ * o.irr_ * Rational(static_cast<long>(d));
  Rational i = rat_ * o.irr_ + irr_ * o.rat_;
  rat_ = std::move(r);
  irr_ = std::move(i);
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.sign() == 0) throw Error(ErrorKind::DomainError, "division by zero");
  const std::int64_t d = common_radicand(*this, o);
  if (o.is_rational()) {
    rat_ /= o.rat_;
    irr_ /= o.rat_;
    d_ = d;
    normalize();
    return *this;
  }
  const Rational n = o.norm();
  *this *= o.conjugate();
  rat_ /= n;
  irr_ /= n;
  normalize();
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.rat_ = -r.rat_;
  r.irr_ = -r.irr_;
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.rat_ != b.rat_ || a.irr_ != b.irr_) return false;
  return a.is_rational() || a.d_ == b.d_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(const std::string& text) : s_(text) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, "cannot parse scalar '" + s_ + "': " + why);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(const std::string& tok) {
    skip_ws();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept("+")) {
        v += term();
      } else if (accept("-")) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (accept("*")) {
        v *= unary();
      } else if (accept("/")) {
        v /= unary();
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return primary();
  }

  Scalar primary() {
    if (accept("(")) {
      Scalar v = expr();
      if (!accept(")")) fail("missing ')'");
      return v;
    }
    if (accept("sqrt") || accept("\xE2\x88\x9A")) {  // U+221A
      const bool paren = accept("(");
      const std::int64_t n = integer();
      if (paren && !accept(")")) fail("missing ')'");
      return sqrt_integer(n);
    }
    return Scalar(Rational(Integer(std::to_string(integer()))));
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 18) fail("integer literal too long");
    return std::stoll(s_.substr(start, pos_ - start));
  }

  Scalar sqrt_integer(std::int64_t n) {
    if (n < 0) fail("negative radicand");
    std::int64_t outside = 1;
    std::int64_t inside = n;
    for (std::int64_t p = 2; p * p <= inside; ++p) {
      while (inside % (p * p) == 0) {
        inside /= p * p;
        outside *= p;
      }
    }
    if (inside <= 1) return Scalar(Rational(static_cast<long>(outside * inside)));
    return Scalar(Rational(0), Rational(static_cast<long>(outside)), inside);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const std::string& text) { return ScalarParser(text).parse(); }

}  // namespace wellround
