#pragma once

// Convex lattice polygons ConPgn(m, n): Harder-Narasimhan polygons of
// Frobenius pull-backs, their dominance order, and the constrained
// enumeration of destabilized polygons.

#include "frobstrat/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace frobstrat {

/// A (rank, degree) lattice point.
struct Vertex {
  long long rank = 0;
  long long degree = 0;
  auto operator<=>(const Vertex&) const = default;
};

/// Strictly convex polygon with integral vertices from (0,0) to (m, n).
/// Segment slopes strictly decrease; a single segment is the semistable
/// polygon.
class LatticePolygon {
public:
  /// Throws std::invalid_argument when the list does not start at (0,0), has
  /// fewer than two vertices, ranks do not strictly increase, or slopes do
  /// not strictly decrease.
  static LatticePolygon make(std::vector<Vertex> vertices);

  /// The segment (0,0) -> (rank, degree).
  static LatticePolygon straight(long long rank, long long degree);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& endpoint() const { return vertices_.back(); }
  std::size_t segment_count() const { return vertices_.size() - 1; }

  /// Height of the piecewise-linear boundary at `rank` in [0, m].
  Rational height_at(const Rational& rank) const;

  auto operator<=>(const LatticePolygon&) const = default;

  /// "(0,0)-(1,1)-(3,0)"
  std::string to_string() const;

private:
  explicit LatticePolygon(std::vector<Vertex> v) : vertices_(std::move(v)) {}
  std::vector<Vertex> vertices_;
};

/// Throws std::invalid_argument on an invalid parameter set.
struct CurveParams {
  int p = 3;
  int g = 2;
  int r = 3;
  long long d = 0;

  void validate() const;
  /// Endpoint degree of pull-back polygons: p * d.
  long long pullback_degree() const { return static_cast<long long>(p) * d; }
};

/// One graded piece of a filtration.
struct GradedPiece {
  long long rank = 0;
  long long degree = 0;
  Rational slope() const { return Rational(degree, rank); }
  bool operator==(const GradedPiece&) const = default;
};

using FiltrationData = std::vector<GradedPiece>;

enum class Dominance { GreaterOrEqual, LessOrEqual, Equal, Incomparable };

enum class PolygonLabel { Psi1, Psi2, Psi3, Psi4, Semistable, Other };

std::string to_string(Dominance d);
/// "Psi1".."Psi4", "semistable", "other".
std::string to_string(PolygonLabel l);
/// Inverse of to_string for the four Psi labels; throws std::invalid_argument otherwise.
PolygonLabel parse_label(const std::string& s);

LatticePolygon make_polygon(std::vector<Vertex> vertices);

std::vector<Rational> slopes(const LatticePolygon& P);

/// Largest drop between consecutive slopes. Throws std::invalid_argument on a
/// single-segment polygon.
Rational max_slope_gap(const LatticePolygon& P);

/// Pointwise comparison of heights at every integer rank. Throws
/// std::invalid_argument if the endpoints differ.
Dominance dominates(const LatticePolygon& P, const LatticePolygon& Q);

/// Every polygon in ConPgn(r, p*d) with at least two segments, integral
/// vertices, strictly decreasing slopes and consecutive slope drops at most
/// 2g - 2, sorted lexicographically by vertex list. Throws std::domain_error
/// for g < 2.
std::vector<LatticePolygon> enumerate_destabilized_polygons(const CurveParams& params);

/// Cumulative sums of the pieces. Throws std::invalid_argument unless the
/// piece slopes strictly decrease and all ranks are positive.
LatticePolygon polygon_of_filtration(const FiltrationData& f);

/// Graded pieces read back from the segments of P.
FiltrationData filtration_of_polygon(const LatticePolygon& P);

/// The polygon Psi_i(d) for rank-3 bundles with (p, g) = (3, 2); i in 1..4.
LatticePolygon psi_template(PolygonLabel label, long long d);

/// Matches P against the four templates at params.d. Throws std::domain_error
/// ("unclassified regime") unless (p, g, r) = (3, 2, 3).
PolygonLabel name_polygon(const LatticePolygon& P, const CurveParams& params);

}  // namespace frobstrat
