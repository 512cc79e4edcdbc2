#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "wellround/dirichlet.hpp"
#include "wellround/lattice.hpp"

namespace wellround {

using Vec2 = std::array<std::int64_t, 2>;

enum class Parity { Odd, Even };
const char* to_string(Parity p);

/// Primitive orthogonal pair {+-w, +-z} in coordinates of the input basis.
/// Canonical form: |w| >= |z|, first nonzero coordinate of each vector
/// positive, and w > z lexicographically when |w| = |z|.
struct ReflectionFrame {
  Vec2 w{1, 0};
  Vec2 z{0, 1};
  std::int64_t sigma = 1;  // [Gamma : <w, z>]
  Scalar kappa_sq{1};      // |w|^2 / |z|^2 >= 1
  Parity parity = Parity::Odd;
};

/// Builds the canonical frame from two orthogonal primitive vectors.
ReflectionFrame make_frame(const Vec2& w, const Vec2& z, const GramForm& g);

enum class ExistenceKind { RationalLattice, TraceRationalOnly, NormConditionHolds, NoWellRounded };
const char* to_string(ExistenceKind k);

struct ExistenceVerdict {
  ExistenceKind kind = ExistenceKind::NoWellRounded;
  // n = q + r t; only meaningful for NormConditionHolds
  Rational q;
  Rational r;
};

/// Decides whether g has a well-rounded sublattice, with t = 2b/a and n = c/a.
ExistenceVerdict existence(const GramForm& g);

/// Gram form of the lattice <1, tau> with tau + conj(tau) = t and |tau|^2 = n.
GramForm gram_from_trace_norm(const Scalar& t, const Scalar& n);

/// The single frame of a non-rational lattice with a well-rounded sublattice.
/// Throws NoFrame otherwise.
ReflectionFrame unique_frame(const GramForm& g);

/// Coefficient of w in the dual lattice: gcd of the entries of G w.
/// g must be integral and primitive, w primitive.
std::int64_t g_star(const Vec2& w, const GramForm& g);
/// [Gamma : Gamma_w] = (w, w) / g*(w).
std::int64_t brs_index(const Vec2& w, const GramForm& g);
Parity brs_parity(const Vec2& w, const GramForm& g);
/// Primitive vector orthogonal to w (integral form), first nonzero coordinate positive.
Vec2 orthogonal_primitive(const Vec2& w, const GramForm& g);

struct CslInfo {
  bool tilde = false;       // coincidence site lattice is the index-2 superlattice of <w, z>
  std::int64_t sigma = 1;   // [Gamma : <w, z>]
  std::int64_t index = 1;   // [Gamma : CSL]
};
CslInfo gamma_tilde_and_csl(const ReflectionFrame& frame);

/// Whether some lattice similar to a sublattice of g is hexagonal.
bool is_commensurate_to_hexagonal(const GramForm& g);

struct WrCount {
  ArithSeq counts;
  /// Contributions sitting exactly on a window boundary (hexagonal sublattices).
  ArithSeq boundary_hits;
  std::int64_t frames = 0;
};

/// Well-rounded sublattice counts of a non-rational lattice up to index x.
/// Throws NotApplicable for rational lattices and NoFrame if none exist.
WrCount count_wr_nonrational_report(const GramForm& g, std::int64_t x);
ArithSeq count_wr_nonrational(const GramForm& g, std::int64_t x);

/// Frames with a member whose coordinates are bounded by H in absolute value.
std::vector<ReflectionFrame> enumerate_frames(const GramForm& g, std::int64_t bound);

/// Frames with [Gamma : <w, z>] <= max_sigma, ordered by (sigma, w, z).
std::vector<ReflectionFrame> frames_up_to_index(const GramForm& g, std::int64_t max_sigma);

/// Well-rounded sublattice counts of a rational lattice by summing over frames.
WrCount count_wr_rational_report(const GramForm& g, std::int64_t x);
ArithSeq count_wr_rational(const GramForm& g, std::int64_t x);

std::string to_string(const Vec2& v);

}  // namespace wellround
