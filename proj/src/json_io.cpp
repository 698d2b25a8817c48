#include "frobstrat/json_io.hpp"

#include <stdexcept>

namespace frobstrat {

json to_json(const FieldElement& a) { return json(a.coeffs()); }

json to_json(const ProjectivePoint& pt) {
  return json::array({to_json(pt[0]), to_json(pt[1]), to_json(pt[2])});
}

json to_json(const LatticePolygon& P) {
  json arr = json::array();
  for (const auto& v : P.vertices()) arr.push_back({v.rank, v.degree});
  return arr;
}

json to_json(const TensorElement& e) {
  json arr = json::array();
  for (const auto& t : e.terms()) arr.push_back({{"i", t.i}, {"j", t.j}, {"coeff", to_json(t.coeff)}});
  return arr;
}

json to_json(const Rational& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

json to_json(const SubrankWitness& w) {
  return {{"subrank", w.subrank}, {"bound", to_json(w.bound)}, {"threshold", to_json(w.threshold)},
          {"verdict", w.verdict}};
}

json to_json(const Certificate& c) {
  json ws = json::array();
  for (const auto& w : c.witnesses) ws.push_back(to_json(w));
  return {{"holds", c.holds}, {"witnesses", ws}};
}

json to_json(const ClaimReport& c) {
  return {{"a", c.claim_a}, {"b", c.claim_b}, {"c", c.claim_c}, {"d", c.claim_d}};
}

json to_json(const std::map<PolygonLabel, long long>& census) {
  json obj = json::object();
  for (const auto& [label, count] : census) obj[to_string(label)] = count;
  return obj;
}

json to_json(const StratumRecord& r) {
  json j;
  j["label"] = to_string(r.label);
  j["vertices"] = to_json(r.polygon);
  j["fiber_dim"] = r.fiber_dim ? json(*r.fiber_dim) : json(nullptr);
  j["quot_dim"] = r.quot_dim ? json(*r.quot_dim) : json(nullptr);
  j["stratum_dim"] = r.stratum_dim;
  j["closed_equals_open"] = r.stratum_dim == r.closed_stratum_dim;
  return j;
}

json to_json(const StrataTable& t) {
  json recs = json::array();
  for (const auto& r : t.records) recs.push_back(to_json(r));
  return {{"d", t.d},
          {"strata", recs},
          {"moduli_dim", t.moduli_dim},
          {"codimension", t.codimension},
          {"top_components", t.top_components}};
}

LatticePolygon polygon_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polygon must be a JSON array of [rank, degree] pairs");
  std::vector<Vertex> v;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("polygon vertex must be a [rank, degree] pair");
    for (const auto& x : pair) {
      if (!x.is_number_integer()) throw std::invalid_argument("polygon vertices must be integral");
    }
    v.push_back({pair[0].get<long long>(), pair[1].get<long long>()});
  }
  return LatticePolygon::make(std::move(v));
}

}  // namespace frobstrat
