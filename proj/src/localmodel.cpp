#include "frobstrat/localmodel.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace frobstrat {

ModelSpec::ModelSpec(FieldSpec field, int M) : field_(std::move(field)), M_(M) {
  if (M_ < 3) throw std::invalid_argument("truncation level M must be >= 3");
}

TensorElement TensorElement::zero(const ModelSpec& spec) {
  return TensorElement(spec, std::vector<FieldElement>(spec.dimension(), spec.field().zero()));
}

void TensorElement::add_term(int i, int j, const FieldElement& c) {
  const int p = spec_.p();
  i += p * (j / p);
  j %= p;
  if (i >= spec_.left_size()) return;
  auto& slot = coeffs_[static_cast<std::size_t>(i) * p + j];
  slot = slot + c;
}

TensorElement TensorElement::monomial(const ModelSpec& spec, int i, int j, const FieldElement& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent in tensor monomial");
  TensorElement e = zero(spec);
  e.add_term(i, j, c);
  return e;
}

TensorElement TensorElement::monomial(const ModelSpec& spec, int i, int j) {
  return monomial(spec, i, j, spec.field().one());
}

TensorElement TensorElement::left(const ModelSpec& spec, const std::vector<FieldElement>& coeffs) {
  TensorElement e = zero(spec);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) e.add_term(static_cast<int>(i), 0, coeffs[i]);
  }
  return e;
}

const FieldElement& TensorElement::coeff(int i, int j) const {
  if (i < 0 || i >= spec_.left_size() || j < 0 || j >= spec_.p()) {
    throw std::out_of_range("tensor coefficient index out of range");
  }
  return coeffs_[static_cast<std::size_t>(i) * spec_.p() + j];
}

bool TensorElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElement& c) { return c.is_zero(); });
}

std::vector<TensorTerm> TensorElement::terms() const {
  std::vector<TensorTerm> out;
  const int p = spec_.p();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) out.push_back({static_cast<int>(k) / p, static_cast<int>(k) % p, coeffs_[k]});
  }
  return out;
}

void TensorElement::require_same_spec(const TensorElement& o) const {
  if (!(spec_ == o.spec_)) throw std::invalid_argument("tensor elements from different local models");
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  require_same_spec(o);
  TensorElement r = *this;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] += o.coeffs_[k];
  return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  require_same_spec(o);
  TensorElement r = *this;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] -= o.coeffs_[k];
  return r;
}

TensorElement TensorElement::operator-() const {
  TensorElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TensorElement TensorElement::operator*(const FieldElement& c) const {
  TensorElement r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

std::string TensorElement::to_string() const {
  const auto ts = terms();
  if (ts.empty()) return "0";
  auto power = [](int e) -> std::string {
    if (e == 0) return "1";
    if (e == 1) return "t";
    return "t^" + std::to_string(e);
  };
  std::ostringstream os;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    if (k) os << " + ";
    if (!ts[k].coeff.is_one()) os << ts[k].coeff.to_string() << " ";
    os << power(ts[k].i) << "(x)" << power(ts[k].j);
  }
  return os.str();
}

TensorElement times_t_right(const TensorElement& e) {
  TensorElement r = TensorElement::zero(e.spec());
  for (const auto& term : e.terms()) r.add_term(term.i, term.j + 1, term.coeff);
  return r;
}

TensorElement times_t_left(const TensorElement& e) {
  TensorElement r = TensorElement::zero(e.spec());
  for (const auto& term : e.terms()) r.add_term(term.i + 1, term.j, term.coeff);
  return r;
}

TensorElement times_t_right(const TensorElement& e, int n) {
  TensorElement r = e;
  for (int k = 0; k < n; ++k) r = times_t_right(r);
  return r;
}

TensorElement tau_power(const ModelSpec& spec, int i) {
  if (i < 0) throw std::invalid_argument("negative tau exponent");
  TensorElement e = TensorElement::monomial(spec, 0, 0);
  for (int k = 0; k < i; ++k) e = times_t_left(e) - times_t_right(e);
  return e;
}

SubspaceBasis SubspaceBasis::span(const ModelSpec& spec, const std::vector<TensorElement>& generators) {
  std::vector<TensorElement> rows;
  std::vector<int> pivots;
  for (const auto& g : generators) {
    if (!(g.spec() == spec)) throw std::invalid_argument("generator from a different local model");
    TensorElement v = g;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const FieldElement c = v.coeffs_[pivots[r]];
      if (!c.is_zero()) v = v - rows[r] * c;
    }
    const auto lead = std::find_if(v.coeffs_.begin(), v.coeffs_.end(),
                                   [](const FieldElement& c) { return !c.is_zero(); });
    if (lead == v.coeffs_.end()) continue;
    const int pivot = static_cast<int>(lead - v.coeffs_.begin());
    v = v * lead->inverse();
    for (auto& row : rows) {
      const FieldElement c = row.coeffs_[pivot];
      if (!c.is_zero()) row = row - v * c;
    }
    const auto pos = std::lower_bound(pivots.begin(), pivots.end(), pivot) - pivots.begin();
    pivots.insert(pivots.begin() + pos, pivot);
    rows.insert(rows.begin() + pos, std::move(v));
  }
  return SubspaceBasis(spec, std::move(rows), std::move(pivots));
}

TensorElement SubspaceBasis::reduce(const TensorElement& e) const {
  if (!(e.spec() == spec_)) throw std::invalid_argument("membership test across different local models");
  TensorElement v = e;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const FieldElement c = v.coeffs_[pivots_[r]];
    if (!c.is_zero()) v = v - rows_[r] * c;
  }
  return v;
}

bool SubspaceBasis::contains(const TensorElement& e) const { return reduce(e).is_zero(); }

bool membership(const TensorElement& e, const SubspaceBasis& W) { return W.contains(e); }

SubmoduleV::SubmoduleV(ModelSpec spec, ProjectivePoint hyperplane)
    : spec_(std::move(spec)), hyperplane_(std::move(hyperplane)) {
  if (spec_.p() != 3) throw std::domain_error("submodule classification is implemented for p = 3 only");
  if (!(hyperplane_.field() == spec_.field())) {
    throw std::invalid_argument("hyperplane point is over a different field than the model");
  }
}

std::vector<std::vector<FieldElement>> SubmoduleV::kernel_basis() const {
  const auto& h = hyperplane_.coords();
  const FieldSpec& k = spec_.field();
  int pivot = 0;
  while (h[pivot].is_zero()) ++pivot;
  std::vector<std::vector<FieldElement>> basis;
  for (int j = 0; j < 3; ++j) {
    if (j == pivot) continue;
    std::vector<FieldElement> v(3, k.zero());
    v[j] = k.one();
    v[pivot] = -h[j];  // h[pivot] == 1 after normalization
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<FieldElement>> SubmoduleV::generators() const {
  auto gens = kernel_basis();
  const FieldSpec& k = spec_.field();
  for (int e = 3; e <= 5; ++e) {
    std::vector<FieldElement> v(e + 1, k.zero());
    v[e] = k.one();
    gens.push_back(std::move(v));
  }
  return gens;
}

SubmoduleV submodule_from_point(const ModelSpec& spec, const ProjectivePoint& h) { return SubmoduleV(spec, h); }

bool contains_monomial(const SubmoduleV& V, int j) {
  if (j < 0 || j > 2) throw std::invalid_argument("contains_monomial expects j in {0,1,2}");
  return V.hyperplane()[j].is_zero();
}

SubspaceBasis pullback_span(const SubmoduleV& V) {
  const ModelSpec& spec = V.spec();
  const int p = spec.p();
  std::vector<TensorElement> gens;
  for (const auto& v : V.generators()) {
    for (int a = 0; a < spec.M(); ++a) {
      for (int j = 0; j < p; ++j) {
        TensorElement e = TensorElement::zero(spec);
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (!v[i].is_zero()) e = e + TensorElement::monomial(spec, static_cast<int>(i) + p * a, j, v[i]);
        }
        gens.push_back(std::move(e));
      }
    }
  }
  return SubspaceBasis::span(spec, gens);
}

SubspaceBasis e2_span(const ModelSpec& spec) {
  const TensorElement tau2 = tau_power(spec, 2);
  std::vector<TensorElement> gens;
  TensorElement e = tau2;
  for (int b = 0; b < spec.left_size(); ++b) {
    gens.push_back(e);
    e = times_t_right(e);
  }
  return SubspaceBasis::span(spec, gens);
}

int intersection_colength_at_level(const SubmoduleV& V) {
  const SubspaceBasis W = pullback_span(V);
  std::vector<TensorElement> gens = W.basis();
  const SubspaceBasis E2 = e2_span(V.spec());
  gens.insert(gens.end(), E2.basis().begin(), E2.basis().end());
  const SubspaceBasis sum = SubspaceBasis::span(V.spec(), gens);
  return static_cast<int>(sum.dim() - W.dim());
}

int intersection_colength(const SubmoduleV& V) {
  const int c = intersection_colength_at_level(V);
  if (c < 1 || c > 3) throw std::logic_error("intersection colength " + std::to_string(c) + " outside {1,2,3}");
  const int refined = intersection_colength_at_level(SubmoduleV(V.spec().refined(), V.hyperplane()));
  if (refined != c) throw std::logic_error("intersection colength not stable under raising the truncation level");
  return c;
}

PolygonLabel classify_stratum(const SubmoduleV& V) {
  const bool t_in = contains_monomial(V, 1);
  const bool t2_in = contains_monomial(V, 2);
  if (!t2_in) return PolygonLabel::Psi2;
  return t_in ? PolygonLabel::Psi4 : PolygonLabel::Psi3;
}

namespace {

ClaimReport claims_against(const SubmoduleV& V, const SubspaceBasis& W) {
  const TensorElement tau2 = tau_power(V.spec(), 2);
  ClaimReport r;
  r.tau2_in = W.contains(tau2);
  r.tau2_t_in = W.contains(times_t_right(tau2, 1));
  r.tau2_t2_in = W.contains(times_t_right(tau2, 2));
  r.tau2_t3_in = W.contains(times_t_right(tau2, 3));
  const bool t_in = contains_monomial(V, 1);
  const bool t2_in = contains_monomial(V, 2);
  r.claim_a = !r.tau2_in;
  r.claim_b = r.tau2_t_in == (t_in && t2_in);
  r.claim_c = r.tau2_t2_in == t2_in;
  r.claim_d = r.tau2_t3_in;
  return r;
}

}  // namespace

ClaimReport verify_claims(const SubmoduleV& V) { return claims_against(V, pullback_span(V)); }

PointClassification classify_point(const ModelSpec& spec, const ProjectivePoint& h) {
  const SubmoduleV V(spec, h);
  const SubspaceBasis W = pullback_span(V);
  PointClassification out{h, false, false, 0, PolygonLabel::Other, {}, 0};
  out.t_in_v = contains_monomial(V, 1);
  out.t2_in_v = contains_monomial(V, 2);
  out.colength = intersection_colength(V);
  out.label = classify_stratum(V);
  out.claims = claims_against(V, W);
  out.pullback_colength = spec.dimension() - static_cast<int>(W.dim());
  return out;
}

std::vector<PointClassification> census_points(const ModelSpec& spec) {
  if (spec.p() != 3) throw std::domain_error("stratum census requires characteristic 3");
  std::vector<PointClassification> out;
  for (const auto& h : projective_plane(spec.field())) out.push_back(classify_point(spec, h));
  return out;
}

std::map<PolygonLabel, long long> stratum_census(const ModelSpec& spec) {
  if (spec.p() != 3) throw std::domain_error("stratum census requires characteristic 3");
  std::map<PolygonLabel, long long> counts{
      {PolygonLabel::Psi2, 0}, {PolygonLabel::Psi3, 0}, {PolygonLabel::Psi4, 0}};
  for (const auto& h : projective_plane(spec.field())) ++counts[classify_stratum(SubmoduleV(spec, h))];
  return counts;
}

}  // namespace frobstrat
