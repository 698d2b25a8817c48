#pragma once

// Finite local model of the Frobenius pull-back of F_*(L) at a point.
//
// S = k[t]/(t^{pM}) is a module over R = k[u]/(u^M) via u -> t^p. Elements
// of S (x)_R S are kept in the normal form sum c[i][j] t^i (x) t^j with
// i < pM and j < p, using 1 (x) t^p = t^p (x) 1. The right factor carries
// the S-module structure. tau = t(x)1 - 1(x)t generates the canonical
// filtration; E_2 is the S-span of tau^2.

#include "frobstrat/gfield.hpp"
#include "frobstrat/polygon.hpp"

#include <map>
#include <vector>

namespace frobstrat {

/// Field plus truncation level M (S is cut at t^{pM}). Requires M >= 3.
class ModelSpec {
public:
  /// Throws std::invalid_argument if M < 3.
  ModelSpec(FieldSpec field, int M);

  const FieldSpec& field() const { return field_; }
  int p() const { return field_.characteristic(); }
  int M() const { return M_; }
  /// pM, the number of left exponents kept.
  int left_size() const { return p() * M_; }
  /// Dimension over k of S (x)_R S, equal to p^2 M.
  int dimension() const { return left_size() * p(); }
  /// Same field, truncation raised by one.
  ModelSpec refined() const { return ModelSpec(field_, M_ + 1); }

  friend bool operator==(const ModelSpec& a, const ModelSpec& b) {
    return a.M_ == b.M_ && a.field_ == b.field_;
  }

private:
  FieldSpec field_;
  int M_;
};

/// Sparse term of a tensor element: coeff * t^i (x) t^j.
struct TensorTerm {
  int i = 0;
  int j = 0;
  FieldElement coeff;
};

/// Element of S (x)_R S in normal form.
class TensorElement {
public:
  static TensorElement zero(const ModelSpec& spec);
  /// c * t^i (x) t^j for arbitrary i, j >= 0, reduced to normal form.
  static TensorElement monomial(const ModelSpec& spec, int i, int j, const FieldElement& c);
  static TensorElement monomial(const ModelSpec& spec, int i, int j);
  /// f (x) 1 for f = sum coeffs[i] t^i.
  static TensorElement left(const ModelSpec& spec, const std::vector<FieldElement>& coeffs);

  const ModelSpec& spec() const { return spec_; }
  const FieldElement& coeff(int i, int j) const;
  /// Flat coefficient vector indexed by i * p + j (the echelon monomial order).
  const std::vector<FieldElement>& coords() const { return coeffs_; }
  bool is_zero() const;
  /// Nonzero terms in (i asc, j asc) order.
  std::vector<TensorTerm> terms() const;

  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement operator-() const;
  TensorElement operator*(const FieldElement& c) const;
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_;
  }

  /// "t^2(x)1 + 2 t(x)t + ..." in monomial order, or "0".
  std::string to_string() const;

private:
  TensorElement(ModelSpec spec, std::vector<FieldElement> coeffs)
      : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {}
  void require_same_spec(const TensorElement& o) const;
  void add_term(int i, int j, const FieldElement& c);

  friend class SubspaceBasis;
  friend TensorElement times_t_right(const TensorElement& e);
  friend TensorElement times_t_left(const TensorElement& e);

  ModelSpec spec_;
  std::vector<FieldElement> coeffs_;
};

/// tau^i, tau = t(x)1 - 1(x)t.
TensorElement tau_power(const ModelSpec& spec, int i);
/// Multiplication by 1(x)t.
TensorElement times_t_right(const TensorElement& e);
/// Multiplication by t(x)1.
TensorElement times_t_left(const TensorElement& e);
/// Multiplication by 1(x)t^n.
TensorElement times_t_right(const TensorElement& e, int n);

/// A k-subspace of S (x)_R S held as a reduced row echelon basis under the
/// (i asc, j asc) monomial order.
class SubspaceBasis {
public:
  static SubspaceBasis span(const ModelSpec& spec, const std::vector<TensorElement>& generators);

  const ModelSpec& spec() const { return spec_; }
  const std::vector<TensorElement>& basis() const { return rows_; }
  std::size_t dim() const { return rows_.size(); }

  /// Throws std::invalid_argument on a model mismatch.
  bool contains(const TensorElement& e) const;
  /// Remainder of e after reduction against the basis.
  TensorElement reduce(const TensorElement& e) const;

private:
  SubspaceBasis(ModelSpec spec, std::vector<TensorElement> rows, std::vector<int> pivots)
      : spec_(std::move(spec)), rows_(std::move(rows)), pivots_(std::move(pivots)) {}

  ModelSpec spec_;
  std::vector<TensorElement> rows_;
  std::vector<int> pivots_;
};

bool membership(const TensorElement& e, const SubspaceBasis& W);

/// Colength-1 R-submodule V of S with t^3 S in V, given by the functional
/// a0 + a1 t + a2 t^2 -> alpha a0 + beta a1 + gamma a2 whose kernel is V mod t^3.
/// Characteristic 3 only.
class SubmoduleV {
public:
  /// Throws std::domain_error if p != 3 and std::invalid_argument if the
  /// point lives over a different field.
  SubmoduleV(ModelSpec spec, ProjectivePoint hyperplane);

  const ModelSpec& spec() const { return spec_; }
  const ProjectivePoint& hyperplane() const { return hyperplane_; }

  /// Two polynomials of degree <= 2 spanning V modulo t^3, in reduced
  /// echelon form with respect to the functional's pivot.
  std::vector<std::vector<FieldElement>> kernel_basis() const;
  /// R-module generators: the kernel basis followed by t^3, t^4, t^5.
  std::vector<std::vector<FieldElement>> generators() const;

private:
  ModelSpec spec_;
  ProjectivePoint hyperplane_;
};

SubmoduleV submodule_from_point(const ModelSpec& spec, const ProjectivePoint& h);

/// Whether t^j lies in V, j in {0, 1, 2}.
bool contains_monomial(const SubmoduleV& V, int j);

/// Image of V (x)_R S in S (x)_R S.
SubspaceBasis pullback_span(const SubmoduleV& V);

/// k-span of tau^2 * (1 (x) t^b) for all b: the E_2 stalk under truncation.
SubspaceBasis e2_span(const ModelSpec& spec);

/// dim E_2 / (E_2 n pullback_span(V)). Recomputed at M + 1; throws
/// std::logic_error if the two disagree or the value leaves {1, 2, 3}.
int intersection_colength(const SubmoduleV& V);

/// Colength at the model's own truncation level, no stability check.
int intersection_colength_at_level(const SubmoduleV& V);

/// Psi4 iff t, t^2 in V; Psi3 iff t not in V and t^2 in V; Psi2 iff t^2 not in V.
PolygonLabel classify_stratum(const SubmoduleV& V);

/// Membership of tau^2 t^j (j = 0..3) in pullback_span(V), and whether each
/// of the four local claims holds at this point.
struct ClaimReport {
  bool tau2_in = false;
  bool tau2_t_in = false;
  bool tau2_t2_in = false;
  bool tau2_t3_in = false;
  bool claim_a = false;  // tau^2 not in the span
  bool claim_b = false;  // tau^2 t in span <=> t, t^2 in V
  bool claim_c = false;  // tau^2 t^2 in span <=> t^2 in V
  bool claim_d = false;  // tau^2 t^3 in span
  bool all() const { return claim_a && claim_b && claim_c && claim_d; }
  bool operator==(const ClaimReport&) const = default;
};

ClaimReport verify_claims(const SubmoduleV& V);

/// Per-point record of a census scan.
struct PointClassification {
  ProjectivePoint point;
  bool t_in_v = false;
  bool t2_in_v = false;
  int colength = 0;
  PolygonLabel label = PolygonLabel::Other;
  ClaimReport claims;
  int pullback_colength = 0;  // codim of pullback_span(V) in S (x)_R S
};

PointClassification classify_point(const ModelSpec& spec, const ProjectivePoint& h);

/// Classifies every point of P^2(F_q). Requires p = 3.
std::map<PolygonLabel, long long> stratum_census(const ModelSpec& spec);

/// All per-point records, in projective_plane order.
std::vector<PointClassification> census_points(const ModelSpec& spec);

}  // namespace frobstrat
