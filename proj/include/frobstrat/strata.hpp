#pragma once

// Dimension bookkeeping for the Frobenius strata of rank-3 stable bundles on
// a genus-2 curve in characteristic 3.

#include "frobstrat/polygon.hpp"

#include <optional>
#include <vector>

namespace frobstrat {

struct StratumRecord {
  PolygonLabel label = PolygonLabel::Other;
  LatticePolygon polygon = LatticePolygon::straight(1, 0);
  std::optional<int> fiber_dim;  // absent for Psi1
  std::optional<int> quot_dim;   // absent for Psi1
  int stratum_dim = 0;
  int closed_stratum_dim = 0;
};

struct StrataTable {
  long long d = 0;
  std::vector<StratumRecord> records;  // Psi1..Psi4
  int moduli_dim = 0;
  int codimension = 0;     // moduli_dim - max stratum_dim
  int top_components = 0;  // records attaining the max
};

/// Dimension of the Quot fiber over a point (x, [L]): P^2, P^1, point for
/// Psi2, Psi3, Psi4. Throws std::domain_error for Psi1 and
/// std::invalid_argument for non-Psi labels.
int quot_fiber_dimension(PolygonLabel label);

/// fiber + dim X + dim Pic = fiber + 1 + g.
int quot_stratum_dimension(PolygonLabel label, int g);

/// Dimension of the stratum in the moduli space. Psi2 and Psi3 inherit the
/// Quot dimension (the classifying map is injective on that locus), Psi4 is
/// the Jacobian (dimension g), Psi1 is transported from Psi2 by duality.
/// Throws std::domain_error unless g == 2.
int moduli_stratum_dimension(PolygonLabel label, int g);

/// r^2 (g - 1) + 1. Throws std::invalid_argument for r < 1 or g < 2.
int moduli_dimension(int r, int g);

/// HN polygon of the dual bundle: (rank, degree) -> (r - rank, degree - D),
/// read from the other end.
LatticePolygon dualize_polygon(const LatticePolygon& P);

/// The four strata records for degree d.
StrataTable strata_table(long long d);

}  // namespace frobstrat
