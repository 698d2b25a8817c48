#include "frobstrat/strata.hpp"

#include <algorithm>
#include <stdexcept>

namespace frobstrat {
namespace {

constexpr int kCurveDim = 1;

void require_quot_label(PolygonLabel label) {
  if (label == PolygonLabel::Psi1) throw std::domain_error("Psi1 has no Quot fiber model");
  if (label != PolygonLabel::Psi2 && label != PolygonLabel::Psi3 && label != PolygonLabel::Psi4) {
    throw std::invalid_argument("label " + to_string(label) + " is not a destabilized stratum");
  }
}

}  // namespace

int quot_fiber_dimension(PolygonLabel label) {
  require_quot_label(label);
  switch (label) {
    case PolygonLabel::Psi2: return 2;
    case PolygonLabel::Psi3: return 1;
    default: return 0;
  }
}

int quot_stratum_dimension(PolygonLabel label, int g) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  // dim Pic^{(t)}(X) = g
  return quot_fiber_dimension(label) + kCurveDim + g;
}

int moduli_stratum_dimension(PolygonLabel label, int g) {
  if (g != 2) throw std::domain_error("strata dimensions are only tabulated for (p, g, r) = (3, 2, 3)");
  switch (label) {
    case PolygonLabel::Psi1: return moduli_stratum_dimension(PolygonLabel::Psi2, g);
    case PolygonLabel::Psi2:
    case PolygonLabel::Psi3: return quot_stratum_dimension(label, g);
    case PolygonLabel::Psi4: return g;  // Jacobian
    default: throw std::invalid_argument("label " + to_string(label) + " is not a destabilized stratum");
  }
}

int moduli_dimension(int r, int g) {
  if (r < 1) throw std::invalid_argument("rank must be >= 1");
  if (g < 2) throw std::invalid_argument("genus must be >= 2");
  return r * r * (g - 1) + 1;
}

LatticePolygon dualize_polygon(const LatticePolygon& P) {
  const Vertex end = P.endpoint();
  std::vector<Vertex> v;
  v.reserve(P.vertices().size());
  for (auto it = P.vertices().rbegin(); it != P.vertices().rend(); ++it) {
    v.push_back({end.rank - it->rank, it->degree - end.degree});
  }
  return LatticePolygon::make(std::move(v));
}

StrataTable strata_table(long long d) {
  constexpr int g = 2;
  StrataTable table;
  table.d = d;
  for (auto label : {PolygonLabel::Psi1, PolygonLabel::Psi2, PolygonLabel::Psi3, PolygonLabel::Psi4}) {
    StratumRecord rec;
    rec.label = label;
    rec.polygon = psi_template(label, d);
    if (label != PolygonLabel::Psi1) {
      rec.fiber_dim = quot_fiber_dimension(label);
      rec.quot_dim = quot_stratum_dimension(label, g);
    }
    rec.stratum_dim = moduli_stratum_dimension(label, g);
    rec.closed_stratum_dim = rec.stratum_dim;
    table.records.push_back(std::move(rec));
  }
  table.moduli_dim = moduli_dimension(3, g);
  const int top = std::max_element(table.records.begin(), table.records.end(), [](const auto& a, const auto& b) {
                    return a.stratum_dim < b.stratum_dim;
                  })->stratum_dim;
  table.codimension = table.moduli_dim - top;
  table.top_components = static_cast<int>(std::count_if(
      table.records.begin(), table.records.end(), [top](const auto& r) { return r.stratum_dim == top; }));
  return table;
}

}  // namespace frobstrat
