#include "frobstrat/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace frobstrat::oracle {

std::vector<LatticePolygon> brute_force_destabilized_polygons(const CurveParams& params) {
  params.validate();
  if (params.g < 2) throw std::domain_error("slope-gap bound needs genus >= 2");
  const long long r = params.r;
  const long long end = params.pullback_degree();
  const long long spread = (r - 1) * (2LL * params.g - 2);
  const long long gap = 2LL * params.g - 2;

  std::vector<LatticePolygon> out;
  for (unsigned mask = 1; mask < (1u << (r - 1)); ++mask) {
    std::vector<long long> xs{0};
    for (long long x = 1; x < r; ++x) {
      if (mask & (1u << (x - 1))) xs.push_back(x);
    }
    xs.push_back(r);
    const std::size_t n_inner = xs.size() - 2;

    // Height at rank x lies within x * (end/r +- spread); scan integer values.
    std::vector<long long> lo(n_inner), hi(n_inner), h(n_inner);
    for (std::size_t k = 0; k < n_inner; ++k) {
      const long long x = xs[k + 1];
      lo[k] = ceil_div(x * end - x * spread * r, r);
      hi[k] = floor_div(x * end + x * spread * r, r);
      h[k] = lo[k];
    }
    while (true) {
      std::vector<long long> ys{0};
      ys.insert(ys.end(), h.begin(), h.end());
      ys.push_back(end);
      // slopes as fractions (dy, dx); compare by cross-multiplication
      bool ok = true;
      for (std::size_t k = 1; k + 1 < xs.size() && ok; ++k) {
        const long long dy1 = ys[k] - ys[k - 1], dx1 = xs[k] - xs[k - 1];
        const long long dy2 = ys[k + 1] - ys[k], dx2 = xs[k + 1] - xs[k];
        // strictly decreasing: dy2/dx2 < dy1/dx1
        if (!(dy2 * dx1 < dy1 * dx2)) ok = false;
        // drop <= gap: dy1/dx1 - dy2/dx2 <= gap
        if (dy1 * dx2 - dy2 * dx1 > gap * dx1 * dx2) ok = false;
      }
      for (std::size_t k = 1; k < xs.size() && ok; ++k) {
        // each slope within end/r +- spread
        const long long dy = ys[k] - ys[k - 1], dx = xs[k] - xs[k - 1];
        if (dy * r < (end - spread * r) * dx || dy * r > (end + spread * r) * dx) ok = false;
      }
      if (ok) {
        std::vector<Vertex> v;
        for (std::size_t k = 0; k < xs.size(); ++k) v.push_back({xs[k], ys[k]});
        out.push_back(LatticePolygon::make(std::move(v)));
      }
      std::size_t k = 0;
      while (k < n_inner && h[k] == hi[k]) h[k] = lo[k], ++k;
      if (k == n_inner) break;
      ++h[k];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool bound_within_slope(int p, int g, int r, long long d, long long t, int subrank) {
  const long long push_degree = t + (p - 1LL) * (g - 1LL);
  return static_cast<long long>(r) * (push_degree - (p - subrank) * (g - 1LL)) <= static_cast<long long>(p) * d;
}

}  // namespace frobstrat::oracle
