#include "frobstrat/slopecalc.hpp"

#include <stdexcept>
#include <string>

namespace frobstrat {

long long euler_characteristic(const BundleData& b, int g) { return b.degree + b.rank * (1LL - g); }

BundleData pushforward(const BundleData& b, int p, int g) {
  if (p < 2) throw std::invalid_argument("characteristic must be >= 2");
  if (g < 0) throw std::invalid_argument("genus must be >= 0");
  return {b.rank * p, b.degree + b.rank * (p - 1LL) * (g - 1LL)};
}

long long pushforward_degree(const BundleData& b, int p, int g) { return pushforward(b, p, g).degree; }

BundleData pullback_degree(const BundleData& b, int p) { return {b.rank, b.degree * p}; }

Slope sun_upper_bound(int subrank, int p, int g, const Slope& pushforward_slope) {
  if (subrank < 1 || subrank > p) {
    throw std::invalid_argument("subrank " + std::to_string(subrank) + " outside 1.." + std::to_string(p));
  }
  return pushforward_slope - Slope(static_cast<long long>(p - subrank) * (g - 1), p);
}

namespace {

void require_sun_regime(int p, int g) {
  if (g < 2) throw std::domain_error("slope bound needs genus >= 2");
  if (p < 2) throw std::invalid_argument("characteristic must be >= 2");
}

Certificate run_bounds(int p, int g, int r, long long d, long long t) {
  const BundleData push = pushforward({1, t}, p, g);
  const Slope threshold(d, r);
  Certificate c{true, {}};
  for (int s = 1; s < r; ++s) {
    const Slope bound = sun_upper_bound(s, p, g, push.slope());
    const bool ok = bound <= threshold;
    c.witnesses.push_back({s, bound, threshold, ok});
    c.holds = c.holds && ok;
  }
  return c;
}

}  // namespace

Certificate stability_certificate(int p, int g, int r, long long d, long long t) {
  require_sun_regime(p, g);
  if (r != p) throw std::domain_error("stability certificate needs rank equal to the characteristic");
  if (pushforward_degree({1, t}, p, g) < d) {
    throw std::invalid_argument("deg F_*(L) is smaller than deg E");
  }
  return run_bounds(p, g, r, d, t);
}

Certificate embedding_certificate(int p, int g, int r, long long d, long long t) {
  require_sun_regime(p, g);
  if (r < 1 || r > p) throw std::domain_error("embedding certificate needs 1 <= rank <= characteristic");
  return run_bounds(p, g, r, d, t);
}

std::vector<long long> canonical_filtration_degrees(int p, int g, long long t) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  std::vector<long long> out;
  for (int i = p - 1; i >= 0; --i) out.push_back(t + i * (2LL * g - 2));
  return out;
}

bool nonsplit_predicate(int p, int g) { return (g - 1) % p == 0; }

long long degree_from_colength(long long d, int colength) {
  if (colength < 1 || colength > 3) throw std::invalid_argument("colength must be 1, 2 or 3");
  return d + 3 - colength;
}

}  // namespace frobstrat
