#pragma once

// Exact degree and slope calculus for Frobenius push-forwards and pull-backs,
// Sun's slope bound, and the stability / embedding certificates built on it.

#include "frobstrat/rational.hpp"

#include <vector>

namespace frobstrat {

using Slope = Rational;

struct BundleData {
  long long rank = 1;
  long long degree = 0;

  Slope slope() const { return Slope(degree, rank); }
  bool operator==(const BundleData&) const = default;
};

/// chi = degree + rank (1 - g).
long long euler_characteristic(const BundleData& b, int g);

/// (p * rank, degree + rank (p - 1)(g - 1)).
BundleData pushforward(const BundleData& b, int p, int g);
long long pushforward_degree(const BundleData& b, int p, int g);

/// (rank, p * degree).
BundleData pullback_degree(const BundleData& b, int p);

/// Strict upper bound on mu(G) for a subsheaf G of rank `subrank` of the
/// push-forward of a line bundle:  mu(F_*L) - (p - subrank)(g - 1)/p.
/// Throws std::invalid_argument unless 1 <= subrank <= p.
Slope sun_upper_bound(int subrank, int p, int g, const Slope& pushforward_slope);

/// One inequality of a certificate: bound <= threshold.
struct SubrankWitness {
  int subrank = 0;
  Slope bound;
  Slope threshold;
  bool verdict = false;
};

struct Certificate {
  bool holds = false;
  std::vector<SubrankWitness> witnesses;
};

/// Rank-p bundle E of degree d inside F_*(L), deg L = t: every subsheaf G of
/// rank s < p satisfies mu(G) < bound(s), so E is stable once every bound is
/// <= d/p. Throws std::domain_error for g < 2 or r != p, and
/// std::invalid_argument if deg F_*(L) < d.
Certificate stability_certificate(int p, int g, int r, long long d, long long t);

/// Adjunction E -> F_*(L) is injective when no image of rank s in 1..r-1 can
/// have slope strictly between d/r and bound(s). Throws std::domain_error for
/// g < 2 or r > p.
Certificate embedding_certificate(int p, int g, int r, long long d, long long t);

/// Degrees of the graded pieces Omega^i (x) L of the canonical filtration of
/// F^* F_*(L), from i = p - 1 down to 0: t + i (2g - 2).
std::vector<long long> canonical_filtration_degrees(int p, int g, long long t);

/// p | (g - 1), taken verbatim as the non-splitting criterion for
/// F^* F_*(L). For (p, g) = (3, 2) this returns false although the
/// canonical filtration is known not to split there; callers should not
/// read the return value as a splitting verdict in that case.
bool nonsplit_predicate(int p, int g);

/// deg(F^*E n E_2) = deg E_2 - colength with deg E_2 = d + 3, for
/// (p, g, t) = (3, 2, d - 1). Throws std::invalid_argument unless colength is 1, 2 or 3.
long long degree_from_colength(long long d, int colength);

}  // namespace frobstrat
