#include "doctest.h"
#include "frobstrat/localmodel.hpp"
#include "frobstrat/oracle.hpp"
#include "frobstrat/slopecalc.hpp"

#include <numeric>
#include <stdexcept>

using namespace frobstrat;

TEST_CASE("pushforward_degree") {
  for (long long d = -4; d <= 4; ++d) CHECK(pushforward_degree({1, d - 1}, 3, 2) == d + 1);
  CHECK(pushforward_degree({1, 0}, 2, 2) == 1);
  CHECK(pushforward({2, 5}, 3, 2) == BundleData{6, 9});
  for (int p : {2, 3, 5}) CHECK(pushforward_degree({3, 7}, p, 1) == 7);
  CHECK_THROWS_AS(pushforward({1, 0}, 1, 2), std::invalid_argument);
}

TEST_CASE("Euler characteristic is preserved by push-forward") {
  for (int p : {2, 3, 5, 7})
    for (int g = 0; g <= 5; ++g)
      for (long long rank = 1; rank <= 4; ++rank)
        for (long long deg = -5; deg <= 5; ++deg) {
          const BundleData b{rank, deg};
          CHECK(euler_characteristic(pushforward(b, p, g), g) == euler_characteristic(b, g));
        }
}

TEST_CASE("pullback_degree") {
  CHECK(pullback_degree({3, 4}, 3) == BundleData{3, 12});
  CHECK(pullback_degree({1, 0}, 5) == BundleData{1, 0});
  CHECK(pullback_degree({2, -1}, 2) == BundleData{2, -2});
}

TEST_CASE("sun_upper_bound") {
  for (long long d = -3; d <= 3; ++d) {
    const Slope mu(d + 1, 3);
    CHECK(sun_upper_bound(1, 3, 2, mu) == Slope(d - 1, 3));
    CHECK(sun_upper_bound(2, 3, 2, mu) == Slope(d, 3));
    CHECK(sun_upper_bound(3, 3, 2, mu) == mu);
  }
  CHECK_THROWS_AS(sun_upper_bound(0, 3, 2, Slope(0)), std::invalid_argument);
  CHECK_THROWS_AS(sun_upper_bound(4, 3, 2, Slope(0)), std::invalid_argument);
}

TEST_CASE("sun_upper_bound increases strictly with the subrank") {
  for (int p : {2, 3, 5, 7})
    for (int g = 2; g <= 5; ++g)
      for (int s = 1; s < p; ++s) CHECK(sun_upper_bound(s, p, g, Slope(1, 2)) < sun_upper_bound(s + 1, p, g, Slope(1, 2)));
}

TEST_CASE("stability_certificate") {
  for (long long d = -10; d <= 10; ++d) {
    CAPTURE(d);
    const auto c = stability_certificate(3, 2, 3, d, d - 1);
    CHECK(c.holds);
    REQUIRE(c.witnesses.size() == 2);
    CHECK(c.witnesses[0].bound == Slope(d - 1, 3));
    CHECK(c.witnesses[1].bound == Slope(d, 3));
    CHECK(c.witnesses[0].threshold == Slope(d, 3));

    const auto c2 = stability_certificate(3, 2, 3, d, d - 2);
    CHECK(c2.holds);
    CHECK(c2.witnesses[0].bound == Slope(d - 2, 3));
    CHECK(c2.witnesses[1].bound == Slope(d - 1, 3));
  }
  CHECK_THROWS_AS(stability_certificate(3, 1, 3, 0, -1), std::domain_error);
  CHECK_THROWS_AS(stability_certificate(3, 2, 2, 0, -1), std::domain_error);
  CHECK_THROWS_AS(stability_certificate(3, 2, 3, 5, 0), std::invalid_argument);
  // deg L too large: bounds exceed d/3
  CHECK_FALSE(stability_certificate(3, 2, 3, 0, 1).holds);
}

TEST_CASE("embedding_certificate") {
  for (long long d = -10; d <= 10; ++d) {
    const auto c = embedding_certificate(3, 2, 3, d, d - 1);
    CHECK(c.holds);
    REQUIRE(c.witnesses.size() == 2);
    CHECK(c.witnesses[0].bound == Slope(d - 1, 3));
    CHECK(c.witnesses[1].bound == Slope(d, 3));
  }
  CHECK(embedding_certificate(3, 2, 3, 0, -1).holds);
  const auto vacuous = embedding_certificate(3, 2, 1, 0, -1);
  CHECK(vacuous.holds);
  CHECK(vacuous.witnesses.empty());
  CHECK_THROWS_AS(embedding_certificate(3, 1, 3, 0, -1), std::domain_error);
  CHECK_THROWS_AS(embedding_certificate(3, 2, 4, 0, -1), std::domain_error);
}

TEST_CASE("certificate verdicts agree with the integer restatement") {
  for (int p : {2, 3, 5})
    for (int g = 2; g <= 4; ++g)
      for (long long d = -6; d <= 6; ++d)
        for (long long t = d - 4; t <= d + 2; ++t) {
          const auto c = embedding_certificate(p, g, p, d, t);
          for (const auto& w : c.witnesses) CHECK(w.verdict == oracle::bound_within_slope(p, g, p, d, t, w.subrank));
        }
}

TEST_CASE("canonical_filtration_degrees") {
  for (long long d = -3; d <= 3; ++d) {
    CHECK(canonical_filtration_degrees(3, 2, d - 1) == std::vector<long long>{d + 3, d + 1, d - 1});
  }
  CHECK(canonical_filtration_degrees(2, 2, 0) == std::vector<long long>{2, 0});
  CHECK(canonical_filtration_degrees(5, 1, 4) == std::vector<long long>(5, 4));
  CHECK_THROWS_AS(canonical_filtration_degrees(3, 0, 0), std::invalid_argument);
}

TEST_CASE("canonical filtration degrees sum to deg F^*F_*(L)") {
  for (int p : {2, 3, 5, 7})
    for (int g = 1; g <= 5; ++g)
      for (long long t = -5; t <= 5; ++t) {
        const auto degs = canonical_filtration_degrees(p, g, t);
        const long long sum = std::accumulate(degs.begin(), degs.end(), 0LL);
        CHECK(sum == p * t + p * (p - 1LL) * (g - 1LL));
        CHECK(sum == pullback_degree(pushforward({1, t}, p, g), p).degree);
      }
}

TEST_CASE("nonsplit_predicate is the literal divisibility test") {
  CHECK(nonsplit_predicate(3, 4));
  CHECK_FALSE(nonsplit_predicate(3, 3));
  CHECK_FALSE(nonsplit_predicate(3, 2));
  CHECK(nonsplit_predicate(5, 6));
}

TEST_CASE("degree_from_colength") {
  for (long long d = -2; d <= 2; ++d) {
    CHECK(degree_from_colength(d, 1) == d + 2);
    CHECK(degree_from_colength(d, 2) == d + 1);
    CHECK(degree_from_colength(d, 3) == d);
    // top canonical piece is E_2
    CHECK(degree_from_colength(d, 1) + 1 == canonical_filtration_degrees(3, 2, d - 1).front());
  }
  CHECK_THROWS_AS(degree_from_colength(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(degree_from_colength(0, 4), std::invalid_argument);
}

TEST_CASE("colength, degree and stratum agree on every point of P^2(F_3)") {
  const FieldSpec k = FieldSpec::make(3);
  const ModelSpec m(k, 3);
  for (long long d : {-2LL, 0LL, 5LL}) {
    for (const auto& h : projective_plane(k)) {
      const SubmoduleV V(m, h);
      const long long deg = degree_from_colength(d, intersection_colength(V));
      const PolygonLabel l = classify_stratum(V);
      if (deg == d + 2) CHECK(l == PolygonLabel::Psi4);
      if (deg == d + 1) CHECK(l == PolygonLabel::Psi3);
      if (deg == d) CHECK(l == PolygonLabel::Psi2);
    }
  }
}
