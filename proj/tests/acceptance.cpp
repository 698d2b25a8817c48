// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "frobstrat/cli.hpp"
#include "frobstrat/localmodel.hpp"
#include "frobstrat/slopecalc.hpp"
#include "frobstrat/strata.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace frobstrat;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) o.require(false, "time limit exceeded");
  if (!o.ok) ++failures;
  std::printf("[%s] %s %s (%.3f s%s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs,
              limit_seconds > 0 ? (", limit " + std::to_string(static_cast<int>(limit_seconds)) + " s").c_str() : "",
              o.detail.empty() ? "" : ": ", o.detail.c_str());
}

std::vector<LatticePolygon> expected_four(long long d) {
  return {LatticePolygon::make({{0, 0}, {1, d + 1}, {3, 3 * d}}),
          LatticePolygon::make({{0, 0}, {2, 2 * d + 1}, {3, 3 * d}}),
          LatticePolygon::make({{0, 0}, {1, d + 1}, {2, 2 * d + 1}, {3, 3 * d}}),
          LatticePolygon::make({{0, 0}, {1, d + 2}, {2, 2 * d + 2}, {3, 3 * d}})};
}

TensorElement tensor(const ModelSpec& m, std::initializer_list<std::tuple<int, int, int>> terms) {
  TensorElement e = TensorElement::zero(m);
  for (auto [c, i, j] : terms) e = e + TensorElement::monomial(m, i, j, m.field().from_int(c));
  return e;
}

std::string cli_output(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  cli::run(args, out, err);
  return out.str() + "\x1f" + err.str();
}

}  // namespace

int main() {
  criterion("AC01", "four HN polygons for (3,2,3,d), d in -10..10", 1.0, [](Outcome& o) {
    for (long long d = -10; d <= 10; ++d) {
      auto got = enumerate_destabilized_polygons({3, 2, 3, d});
      auto want = expected_four(d);
      std::sort(want.begin(), want.end());
      o.require(got == want, "mismatch at d = " + std::to_string(d));
      for (const auto& P : got) o.require(name_polygon(P, {3, 2, 3, d}) != PolygonLabel::Other, "unlabelled polygon");
    }
  });

  criterion("AC02", "slope gap <= 2g-2 for p in {2,3,5}, g in {2,3}, r <= 4, |d| <= 3", 5.0, [](Outcome& o) {
    long long checked = 0;
    for (int p : {2, 3, 5})
      for (int g : {2, 3})
        for (int r = 1; r <= 4; ++r)
          for (long long d = -3; d <= 3; ++d)
            for (const auto& P : enumerate_destabilized_polygons({p, g, r, d})) {
              ++checked;
              o.require(max_slope_gap(P) <= Rational(2 * g - 2), "violation " + P.to_string());
            }
    o.require(checked > 0, "nothing enumerated");
  });

  criterion("AC03", "local claims (a)-(d) on P^2(F_3) and P^2(F_9) at M = 3 and M = 4", 5.0, [](Outcome& o) {
    for (int m : {1, 2}) {
      const FieldSpec k = FieldSpec::make(3, m);
      for (const auto& h : projective_plane(k)) {
        const ClaimReport r3 = verify_claims(SubmoduleV(ModelSpec(k, 3), h));
        const ClaimReport r4 = verify_claims(SubmoduleV(ModelSpec(k, 4), h));
        o.require(r3.all() && r4.all(), "claim fails at " + h.to_string());
        o.require(r3 == r4, "M = 3 and M = 4 disagree at " + h.to_string());
      }
    }
  });

  criterion("AC04", "stratum census {q^2, q, 1} for q in {3, 9}", 5.0, [](Outcome& o) {
    for (int m : {1, 2}) {
      const FieldSpec k = FieldSpec::make(3, m);
      const long long q = k.order();
      const auto c = stratum_census(ModelSpec(k, 3));
      o.require(c.at(PolygonLabel::Psi2) == q * q, "Psi2 count");
      o.require(c.at(PolygonLabel::Psi3) == q, "Psi3 count");
      o.require(c.at(PolygonLabel::Psi4) == 1, "Psi4 count");
      o.require(c.at(PolygonLabel::Psi2) + c.at(PolygonLabel::Psi3) + c.at(PolygonLabel::Psi4) == q * q + q + 1,
                "total");
    }
  });

  criterion("AC05", "colength <-> degree <-> polygon on P^2(F_3)", 0, [](Outcome& o) {
    const FieldSpec k = FieldSpec::make(3);
    const long long d = 0;
    for (const auto& h : projective_plane(k)) {
      const SubmoduleV V(ModelSpec(k, 3), h);
      const int c = intersection_colength(V);
      const long long deg = degree_from_colength(d, c);
      const PolygonLabel l = classify_stratum(V);
      const bool eq1 = (c == 1) == (deg == d + 2) && (deg == d + 2) == (l == PolygonLabel::Psi4);
      const bool eq2 = (c == 2) == (deg == d + 1) && (deg == d + 1) == (l == PolygonLabel::Psi3);
      const bool eq3 = (c == 3) == (deg == d) && (deg == d) == (l == PolygonLabel::Psi2);
      o.require(eq1 && eq2 && eq3, "inconsistent at " + h.to_string());
    }
  });

  criterion("AC06", "tau^3 = 0 and the tau^2 t^j expansions in characteristic 3", 0, [](Outcome& o) {
    const ModelSpec m(FieldSpec::make(3), 3);
    const auto tau2 = tau_power(m, 2);
    o.require(tau_power(m, 3).is_zero(), "tau^3 != 0");
    o.require(times_t_right(tau2, 1) == tensor(m, {{1, 2, 1}, {-2, 1, 2}, {1, 3, 0}}), "tau^2 t");
    o.require(times_t_right(tau2, 2) == tensor(m, {{1, 2, 2}, {-2, 4, 0}, {1, 3, 1}}), "tau^2 t^2");
    o.require(times_t_right(tau2, 3) == tensor(m, {{1, 5, 0}, {-2, 4, 1}, {1, 3, 2}}), "tau^2 t^3");
  });

  criterion("AC07", "push-forward degree and Euler characteristic conservation", 0, [](Outcome& o) {
    for (long long d = -10; d <= 10; ++d) o.require(pushforward_degree({1, d - 1}, 3, 2) == d + 1, "d + 1");
    for (int p : {2, 3, 5, 7})
      for (int g = 0; g <= 5; ++g)
        for (long long r = 1; r <= 4; ++r)
          for (long long d = -5; d <= 5; ++d) {
            const BundleData b{r, d};
            o.require(euler_characteristic(pushforward(b, p, g), g) == euler_characteristic(b, g), "chi");
          }
  });

  criterion("AC08", "embedding and stability certificates for (3,2,3,d,d-1), d in -10..10", 0, [](Outcome& o) {
    for (long long d = -10; d <= 10; ++d) {
      for (const auto& c : {embedding_certificate(3, 2, 3, d, d - 1), stability_certificate(3, 2, 3, d, d - 1)}) {
        o.require(c.holds, "certificate fails at d = " + std::to_string(d));
        o.require(c.witnesses.size() == 2 && c.witnesses[0].bound == Rational(d - 1, 3) &&
                      c.witnesses[1].bound == Rational(d, 3),
                  "bounds at d = " + std::to_string(d));
      }
    }
  });

  criterion("AC09", "dimension ledger", 0, [](Outcome& o) {
    o.require(quot_stratum_dimension(PolygonLabel::Psi2, 2) == 5 && quot_stratum_dimension(PolygonLabel::Psi3, 2) == 4 &&
                  quot_stratum_dimension(PolygonLabel::Psi4, 2) == 3,
              "quot dims");
    const auto t = strata_table(0);
    std::vector<int> dims;
    for (const auto& r : t.records) dims.push_back(r.stratum_dim);
    o.require(dims == std::vector<int>{5, 5, 4, 2}, "stratum dims");
    o.require(moduli_dimension(3, 2) == 10 && t.moduli_dim == 10, "moduli dim");
    o.require(t.codimension == 5, "codimension");
    o.require(t.top_components == 2, "top components");
  });

  criterion("AC10", "duality d -> -d with Psi1 <-> Psi2, involution", 0, [](Outcome& o) {
    for (long long d = -10; d <= 10; ++d) {
      const auto src = enumerate_destabilized_polygons({3, 2, 3, d});
      std::vector<LatticePolygon> img;
      for (const auto& P : src) {
        const auto D = dualize_polygon(P);
        o.require(dualize_polygon(D) == P, "not an involution");
        const auto l = name_polygon(P, {3, 2, 3, d});
        const auto dl = name_polygon(D, {3, 2, 3, -d});
        const auto want = l == PolygonLabel::Psi1 ? PolygonLabel::Psi2 : l == PolygonLabel::Psi2 ? PolygonLabel::Psi1 : l;
        o.require(dl == want, "label swap at d = " + std::to_string(d));
        img.push_back(D);
      }
      std::sort(img.begin(), img.end());
      o.require(img == enumerate_destabilized_polygons({3, 2, 3, -d}), "not onto at d = " + std::to_string(d));
    }
  });

  criterion("AC11", "partial order laws, field axioms q <= 9, deterministic output", 0, [](Outcome& o) {
    for (long long d = -10; d <= 10; ++d) {
      const auto polys = enumerate_destabilized_polygons({3, 2, 3, d});
      for (const auto& a : polys)
        for (const auto& b : polys) {
          const auto ab = dominates(a, b);
          o.require((ab == Dominance::Equal) == (a == b), "antisymmetry");
          for (const auto& c : polys) {
            const auto ge = [](Dominance x) { return x == Dominance::GreaterOrEqual || x == Dominance::Equal; };
            if (ge(ab) && ge(dominates(b, c))) o.require(ge(dominates(a, c)), "transitivity");
          }
        }
    }
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
      const FieldSpec k = FieldSpec::make(p, m);
      const auto els = k.elements();
      for (const auto& a : els) {
        if (!a.is_zero()) o.require((a * a.inverse()).is_one(), "inverse");
        for (const auto& b : els) {
          o.require(a + b == b + a && a * b == b * a, "commutativity");
          o.require((a + b).pow(p) == a.pow(p) + b.pow(p), "Frobenius");
          for (const auto& c : els) {
            o.require((a * b) * c == a * (b * c) && (a + b) + c == a + (b + c), "associativity");
            o.require(a * (b + c) == a * b + a * c, "distributivity");
          }
        }
      }
    }
    for (const auto& args : std::vector<std::vector<std::string>>{{"enumerate", "--d", "0", "--format", "json"},
                                                                  {"localmodel", "--q", "9", "--format", "json"},
                                                                  {"strata", "--d", "0"},
                                                                  {"certify", "--d", "0", "--t", "-1"},
                                                                  {"dual", "--d", "3", "--format", "json"}}) {
      o.require(cli_output(args) == cli_output(args), "nondeterministic output for " + args[0]);
    }
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
