#pragma once

// JSON encodings shared by the CLI and external consumers.
//
//   field element      [c0, c1, ...]   (c0 + c1 x + ...)
//   projective point   [[...], [...], [...]]
//   polygon            [[rank, degree], ...]
//   tensor element     [{"i": i, "j": j, "coeff": [...]}, ...]  (nonzero terms)
//   rational           {"num": n, "den": d}

#include "frobstrat/gfield.hpp"
#include "frobstrat/localmodel.hpp"
#include "frobstrat/polygon.hpp"
#include "frobstrat/slopecalc.hpp"
#include "frobstrat/strata.hpp"

#include "json.hpp"

#include <map>

namespace frobstrat {

using json = nlohmann::ordered_json;

json to_json(const FieldElement& a);
json to_json(const ProjectivePoint& pt);
json to_json(const LatticePolygon& P);
json to_json(const TensorElement& e);
json to_json(const Rational& r);
json to_json(const SubrankWitness& w);
json to_json(const Certificate& c);
json to_json(const ClaimReport& c);
json to_json(const std::map<PolygonLabel, long long>& census);
json to_json(const StratumRecord& r);
json to_json(const StrataTable& t);

/// Parses [[rank, degree], ...]; throws std::invalid_argument on non-integral
/// entries or any polygon validation failure.
LatticePolygon polygon_from_json(const json& j);

}  // namespace frobstrat
