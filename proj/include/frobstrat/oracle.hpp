#pragma once

// Independent cross-checks used by `--verify` and the test suites. Nothing
// here shares code paths with the routines it checks.

#include "frobstrat/polygon.hpp"

#include <vector>

namespace frobstrat::oracle {

/// Scans every subset of interior ranks {1..r-1} as vertex abscissae and
/// every integer height vector inside the slope box, keeping strictly convex
/// lattice polygons with slope drops <= 2g - 2. Sorted like the enumerator.
std::vector<LatticePolygon> brute_force_destabilized_polygons(const CurveParams& params);

/// Integer-only restatement of a certificate inequality:
/// r (t + (p-1)(g-1) - (p-s)(g-1)) <= p d.
bool bound_within_slope(int p, int g, int r, long long d, long long t, int subrank);

}  // namespace frobstrat::oracle
