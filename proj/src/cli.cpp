#include "frobstrat/cli.hpp"

#include "CLI11.hpp"
#include "frobstrat/json_io.hpp"
#include "frobstrat/oracle.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace frobstrat::cli {
namespace {

struct Options {
  int p = 3;
  int g = 2;
  int r = 3;
  long long d = 0;
  int q = 3;
  int M = 3;
  long long t = 0;
  bool t_given = false;
  std::string format = "text";
  bool verify = false;
  std::string polygon;

  bool json() const { return format == "json"; }
  long long line_degree() const { return t_given ? t : d - 1; }
  CurveParams params() const { return {p, g, r, d}; }
};

const char* pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

bool in_regime(const CurveParams& c) { return c.p == 3 && c.g == 2 && c.r == 3; }

std::string label_or_dash(const LatticePolygon& P, const CurveParams& c) {
  return in_regime(c) ? to_string(name_polygon(P, c)) : std::string("-");
}

std::string slopes_text(const LatticePolygon& P) {
  std::string s = "[";
  const auto sl = slopes(P);
  for (std::size_t i = 0; i < sl.size(); ++i) s += (i ? ", " : "") + to_string(sl[i]);
  return s + "]";
}

// q = 3^m with 1 <= m and q within the field size cap.
FieldSpec field_of_order(int q) {
  int m = 0;
  long long x = q;
  while (x > 1 && x % 3 == 0) x /= 3, ++m;
  if (q < 3 || x != 1) throw std::invalid_argument("--q must be a power of 3, got " + std::to_string(q));
  return FieldSpec::make(3, m);
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const CurveParams c = o.params();
  const auto polys = enumerate_destabilized_polygons(c);
  const long long gap_bound = 2LL * c.g - 2;
  bool gaps_ok = true;
  for (const auto& P : polys) gaps_ok = gaps_ok && max_slope_gap(P) <= gap_bound;
  bool verified = true;
  if (o.verify) verified = polys == oracle::brute_force_destabilized_polygons(c);
  const bool ok = gaps_ok && verified;

  if (o.json()) {
    json arr = json::array();
    for (const auto& P : polys) {
      json entry = {{"vertices", to_json(P)}};
      entry["label"] = in_regime(c) ? json(to_string(name_polygon(P, c))) : json(nullptr);
      arr.push_back(entry);
    }
    json doc = {{"params", {{"p", c.p}, {"g", c.g}, {"r", c.r}, {"d", c.d}}}, {"polygons", arr}};
    doc["gap_bound_ok"] = gaps_ok;
    if (o.verify) doc["verify"] = verified;
    out << doc.dump(2) << "\n";
  } else {
    out << "destabilized HN polygons for (p,g,r,d) = (" << c.p << "," << c.g << "," << c.r << "," << c.d
        << "): " << polys.size() << "\n";
    for (const auto& P : polys) {
      out << std::left << std::setw(8) << label_or_dash(P, c) << std::setw(28) << P.to_string() << "slopes "
          << slopes_text(P) << "  max gap " << to_string(max_slope_gap(P)) << "\n";
    }
    out << "gap bound <= " << gap_bound << ": " << pass_fail(gaps_ok) << "\n";
    if (o.verify) out << "verify (brute force): " << pass_fail(verified) << "\n";
  }
  return ok ? kOk : kCheckFailed;
}

struct CensusRun {
  std::vector<PointClassification> points;
  std::map<PolygonLabel, long long> census;
  bool claims_ok = true;
  bool consistent = true;  // label <-> colength <-> degree, pullback colength p
};

CensusRun run_census(const ModelSpec& spec) {
  CensusRun run;
  run.points = census_points(spec);
  run.census = stratum_census(spec);
  for (const auto& pt : run.points) {
    run.claims_ok = run.claims_ok && pt.claims.all();
    const PolygonLabel from_colength =
        pt.colength == 1 ? PolygonLabel::Psi4 : pt.colength == 2 ? PolygonLabel::Psi3 : PolygonLabel::Psi2;
    run.consistent = run.consistent && from_colength == pt.label && pt.pullback_colength == spec.p();
  }
  return run;
}

bool same_classification(const CensusRun& a, const CensusRun& b) {
  if (a.census != b.census || a.points.size() != b.points.size()) return false;
  for (std::size_t k = 0; k < a.points.size(); ++k) {
    const auto& x = a.points[k];
    const auto& y = b.points[k];
    if (!(x.point == y.point) || x.colength != y.colength || x.label != y.label || !(x.claims == y.claims)) return false;
  }
  return true;
}

int cmd_localmodel(const Options& o, std::ostream& out) {
  const FieldSpec k = field_of_order(o.q);
  const ModelSpec spec(k, o.M);
  const CensusRun run = run_census(spec);
  const long long q = o.q;
  const bool counts_ok = run.census.at(PolygonLabel::Psi2) == q * q && run.census.at(PolygonLabel::Psi3) == q &&
                         run.census.at(PolygonLabel::Psi4) == 1;
  const bool tau_ok = tau_power(spec, 3).is_zero();
  bool verified = true;
  if (o.verify) verified = same_classification(run, run_census(spec.refined()));
  const bool ok = run.claims_ok && run.consistent && counts_ok && tau_ok && verified;

  const TensorElement tau2 = tau_power(spec, 2);
  if (o.json()) {
    json pts = json::array();
    for (const auto& pt : run.points) {
      pts.push_back({{"point", to_json(pt.point)},
                     {"t_in_V", pt.t_in_v},
                     {"t2_in_V", pt.t2_in_v},
                     {"colength", pt.colength},
                     {"label", to_string(pt.label)},
                     {"claims", to_json(pt.claims)}});
    }
    json tau = json::object();
    tau["tau2"] = to_json(tau2);
    for (int j = 1; j <= 3; ++j) tau["tau2_t" + std::to_string(j)] = to_json(times_t_right(tau2, j));
    tau["tau3"] = to_json(tau_power(spec, 3));
    json doc = {{"field", {{"p", k.characteristic()}, {"m", k.degree()}, {"modulus", k.modulus()}}},
                {"M", o.M},
                {"census", to_json(run.census)},
                {"points", pts},
                {"tau", tau},
                {"claims_pass", run.claims_ok},
                {"consistent", run.consistent},
                {"census_pass", counts_ok}};
    if (o.verify) doc["verify"] = verified;
    out << doc.dump(2) << "\n";
  } else {
    out << "local model over " << k.describe() << ", S = k[t]/(t^" << spec.left_size() << "), M = " << o.M << "\n";
    out << "tau^2       = " << tau2.to_string() << "\n";
    for (int j = 1; j <= 3; ++j) {
      out << "tau^2 t^" << j << "   = " << times_t_right(tau2, j).to_string() << "\n";
    }
    out << "tau^3       = " << tau_power(spec, 3).to_string() << "\n";
    out << "point" << std::string(12, ' ') << "t in V  t^2 in V  colength  stratum  claims\n";
    for (const auto& pt : run.points) {
      out << std::left << std::setw(17) << pt.point.to_string() << std::setw(8) << (pt.t_in_v ? "yes" : "no")
          << std::setw(10) << (pt.t2_in_v ? "yes" : "no") << std::setw(10) << pt.colength << std::setw(9)
          << to_string(pt.label) << pass_fail(pt.claims.all()) << "\n";
    }
    out << "census: Psi2 " << run.census.at(PolygonLabel::Psi2) << ", Psi3 " << run.census.at(PolygonLabel::Psi3)
        << ", Psi4 " << run.census.at(PolygonLabel::Psi4) << " (expected " << q * q << ", " << q << ", 1): "
        << pass_fail(counts_ok) << "\n";
    out << "claims (a)-(d) on all " << run.points.size() << " points: " << pass_fail(run.claims_ok) << "\n";
    out << "colength/stratum consistency: " << pass_fail(run.consistent) << "\n";
    out << "tau^3 = 0: " << pass_fail(tau_ok) << "\n";
    if (o.verify) out << "verify (recomputed at M = " << o.M + 1 << "): " << pass_fail(verified) << "\n";
  }
  return ok ? kOk : kCheckFailed;
}

bool verify_strata(const StrataTable& table) {
  bool ok = true;
  for (int q : {3, 9}) {
    const auto census = stratum_census(ModelSpec(field_of_order(q), 3));
    for (const auto& rec : table.records) {
      if (!rec.fiber_dim) continue;
      long long expected = 1;
      for (int i = 0; i < *rec.fiber_dim; ++i) expected *= q;
      ok = ok && census.at(rec.label) == expected;
      ok = ok && *rec.quot_dim - *rec.fiber_dim == 3;
    }
  }
  const StrataTable dual = strata_table(-table.d);
  for (std::size_t k = 0; k < table.records.size(); ++k) {
    const auto& rec = table.records[k];
    const LatticePolygon image = dualize_polygon(rec.polygon);
    const PolygonLabel image_label = name_polygon(image, {3, 2, 3, -table.d});
    auto it = std::find_if(dual.records.begin(), dual.records.end(),
                           [&](const StratumRecord& r) { return r.label == image_label; });
    ok = ok && it != dual.records.end() && it->stratum_dim == rec.stratum_dim;
  }
  return ok;
}

int cmd_strata(const Options& o, std::ostream& out) {
  const StrataTable table = strata_table(o.d);
  bool verified = true;
  if (o.verify) verified = verify_strata(table);
  if (o.json()) {
    json doc = to_json(table);
    if (o.verify) doc["verify"] = verified;
    out << doc.dump(2) << "\n";
  } else {
    out << "Frobenius strata of M^s(3," << o.d << "), p = 3, g = 2\n";
    out << "stratum  polygon                     fiber  quot  dim  closure\n";
    auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
    for (const auto& rec : table.records) {
      out << std::left << std::setw(9) << to_string(rec.label) << std::setw(28) << rec.polygon.to_string()
          << std::setw(7) << opt(rec.fiber_dim) << std::setw(6) << opt(rec.quot_dim) << std::setw(5)
          << rec.stratum_dim << (rec.stratum_dim == rec.closed_stratum_dim ? "equal" : "differs") << "\n";
    }
    out << "dim M^s = " << table.moduli_dim << ", destabilized locus codimension " << table.codimension << ", "
        << table.top_components << " top-dimensional components\n";
    if (o.verify) out << "verify (census exponents, duality): " << pass_fail(verified) << "\n";
  }
  return verified ? kOk : kCheckFailed;
}

void print_certificate(std::ostream& out, const std::string& name, const Certificate& c) {
  out << name << ": " << pass_fail(c.holds) << "\n";
  for (const auto& w : c.witnesses) {
    out << "  subrank " << w.subrank << ": bound " << to_string(w.bound) << " <= " << to_string(w.threshold) << "  "
        << pass_fail(w.verdict) << "\n";
  }
}

int cmd_certify(const Options& o, std::ostream& out) {
  const long long t = o.line_degree();
  const Certificate stable = stability_certificate(o.p, o.g, o.r, o.d, t);
  const Certificate embed = embedding_certificate(o.p, o.g, o.r, o.d, t);
  bool verified = true;
  if (o.verify) {
    for (const auto* c : {&stable, &embed}) {
      for (const auto& w : c->witnesses) {
        verified = verified && w.verdict == oracle::bound_within_slope(o.p, o.g, o.r, o.d, t, w.subrank);
      }
    }
  }
  const bool ok = stable.holds && embed.holds && verified;
  if (o.json()) {
    json doc = {{"params", {{"p", o.p}, {"g", o.g}, {"r", o.r}, {"d", o.d}, {"t", t}}},
                {"pushforward_degree", pushforward_degree({1, t}, o.p, o.g)},
                {"stability", to_json(stable)},
                {"embedding", to_json(embed)}};
    if (o.verify) doc["verify"] = verified;
    out << doc.dump(2) << "\n";
  } else {
    const BundleData push = pushforward({1, t}, o.p, o.g);
    out << "(p,g,r,d) = (" << o.p << "," << o.g << "," << o.r << "," << o.d << "), deg L = " << t
        << ", F_*L has rank " << push.rank << " and degree " << push.degree << "\n";
    print_certificate(out, "embedding E -> F_*L", embed);
    print_certificate(out, "stability of E", stable);
    if (o.verify) out << "verify (integer inequalities): " << pass_fail(verified) << "\n";
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_dual(const Options& o, std::ostream& out) {
  const CurveParams c = o.params();
  const CurveParams dual_params{c.p, c.g, c.r, -c.d};
  std::vector<LatticePolygon> sources;
  if (!o.polygon.empty()) {
    json parsed;
    try {
      parsed = json::parse(o.polygon);
    } catch (const json::parse_error& e) {
      throw std::invalid_argument(std::string("--polygon is not valid JSON: ") + e.what());
    }
    sources.push_back(polygon_from_json(parsed));
  } else {
    sources = enumerate_destabilized_polygons(c);
  }

  std::vector<LatticePolygon> images;
  bool involution = true;
  for (const auto& P : sources) {
    images.push_back(dualize_polygon(P));
    involution = involution && dualize_polygon(images.back()) == P;
  }
  bool verified = true;
  if (o.verify && o.polygon.empty()) {
    auto sorted = images;
    std::sort(sorted.begin(), sorted.end());
    verified = sorted == enumerate_destabilized_polygons(dual_params);
  }
  const bool ok = involution && verified;

  if (o.json()) {
    json arr = json::array();
    for (std::size_t k = 0; k < sources.size(); ++k) {
      json entry = {{"vertices", to_json(sources[k])}, {"dual", to_json(images[k])}};
      const bool labelled = o.polygon.empty() && in_regime(c);
      entry["label"] = labelled ? json(to_string(name_polygon(sources[k], c))) : json(nullptr);
      entry["dual_label"] = labelled ? json(to_string(name_polygon(images[k], dual_params))) : json(nullptr);
      arr.push_back(entry);
    }
    json doc = {{"pairs", arr}, {"involution", involution}};
    if (o.verify) doc["verify"] = verified;
    out << doc.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < sources.size(); ++k) {
      const bool labelled = o.polygon.empty() && in_regime(c);
      out << std::left << std::setw(6) << (labelled ? to_string(name_polygon(sources[k], c)) : "-") << std::setw(28)
          << sources[k].to_string() << "-> " << std::setw(6)
          << (labelled ? to_string(name_polygon(images[k], dual_params)) : "-") << images[k].to_string() << "\n";
    }
    out << "involution: " << pass_fail(involution) << "\n";
    if (o.verify && o.polygon.empty()) {
      out << "verify (bijection onto d = " << -c.d << " enumeration): " << pass_fail(verified) << "\n";
    }
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Frobenius stratification calculator for rank-3 bundles on a genus-2 curve in characteristic 3",
               "frobstrat"};
  app.require_subcommand(1);

  auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--verify", o.verify, "Re-run the independent cross-check");
  };
  auto add_curve = [&o](CLI::App* sub) {
    sub->add_option("--p", o.p, "Characteristic");
    sub->add_option("--g", o.g, "Genus");
    sub->add_option("--r", o.r, "Rank");
    sub->add_option("--d", o.d, "Degree");
  };

  auto* enumerate = app.add_subcommand("enumerate", "List admissible destabilized HN polygons");
  add_curve(enumerate);
  add_format(enumerate);

  auto* localmodel = app.add_subcommand("localmodel", "Classify colength-1 submodules over F_q");
  localmodel->add_option("--q", o.q, "Field order (power of 3)");
  localmodel->add_option("--M", o.M, "Truncation level");
  add_format(localmodel);

  auto* strata = app.add_subcommand("strata", "Print the strata dimension table");
  strata->add_option("--d", o.d, "Degree");
  add_format(strata);

  auto* certify = app.add_subcommand("certify", "Embedding and stability certificates");
  add_curve(certify);
  certify->add_option("--t", o.t, "Degree of L (default d - 1)");
  add_format(certify);

  auto* dual = app.add_subcommand("dual", "Dualize HN polygons");
  add_curve(dual);
  dual->add_option("--polygon", o.polygon, "Polygon as JSON [[rank, degree], ...]");
  add_format(dual);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  o.t_given = certify->count("--t") > 0;

  try {
    if (*enumerate) return cmd_enumerate(o, out);
    if (*localmodel) return cmd_localmodel(o, out);
    if (*strata) return cmd_strata(o, out);
    if (*certify) return cmd_certify(o, out);
    if (*dual) return cmd_dual(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace frobstrat::cli
