#include "frobstrat/polygon.hpp"

#include "frobstrat/gfield.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace frobstrat {

LatticePolygon LatticePolygon::make(std::vector<Vertex> vertices) {
  if (vertices.size() < 2) throw std::invalid_argument("polygon needs at least two vertices");
  if (vertices.front() != Vertex{0, 0}) throw std::invalid_argument("polygon must start at (0,0)");
  std::optional<Rational> previous;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    const long long dx = vertices[i].rank - vertices[i - 1].rank;
    if (dx <= 0) throw std::invalid_argument("polygon ranks must strictly increase");
    const Rational s(vertices[i].degree - vertices[i - 1].degree, dx);
    if (previous && !(s < *previous)) {
      throw std::invalid_argument("polygon slopes must strictly decrease (convexity violated at vertex " +
                                  std::to_string(i) + ")");
    }
    previous = s;
  }
  return LatticePolygon(std::move(vertices));
}

LatticePolygon LatticePolygon::straight(long long rank, long long degree) {
  return make({{0, 0}, {rank, degree}});
}

Rational LatticePolygon::height_at(const Rational& rank) const {
  if (rank < 0 || rank > endpoint().rank) throw std::invalid_argument("rank outside polygon domain");
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    const auto& a = vertices_[i - 1];
    const auto& b = vertices_[i];
    if (rank <= b.rank) {
      const Rational slope(b.degree - a.degree, b.rank - a.rank);
      return Rational(a.degree) + slope * (rank - Rational(a.rank));
    }
  }
  return Rational(endpoint().degree);
}

std::string LatticePolygon::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) os << "-";
    os << "(" << vertices_[i].rank << "," << vertices_[i].degree << ")";
  }
  return os.str();
}

void CurveParams::validate() const {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  if (r < 1) throw std::invalid_argument("rank must be >= 1");
}

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::GreaterOrEqual: return "greater-or-equal";
    case Dominance::LessOrEqual: return "less-or-equal";
    case Dominance::Equal: return "equal";
    case Dominance::Incomparable: return "incomparable";
  }
  return "?";
}

std::string to_string(PolygonLabel l) {
  switch (l) {
    case PolygonLabel::Psi1: return "Psi1";
    case PolygonLabel::Psi2: return "Psi2";
    case PolygonLabel::Psi3: return "Psi3";
    case PolygonLabel::Psi4: return "Psi4";
    case PolygonLabel::Semistable: return "semistable";
    case PolygonLabel::Other: return "other";
  }
  return "?";
}

PolygonLabel parse_label(const std::string& s) {
  if (s == "Psi1") return PolygonLabel::Psi1;
  if (s == "Psi2") return PolygonLabel::Psi2;
  if (s == "Psi3") return PolygonLabel::Psi3;
  if (s == "Psi4") return PolygonLabel::Psi4;
  throw std::invalid_argument("unknown stratum label '" + s + "'");
}

LatticePolygon make_polygon(std::vector<Vertex> vertices) { return LatticePolygon::make(std::move(vertices)); }

std::vector<Rational> slopes(const LatticePolygon& P) {
  const auto& v = P.vertices();
  std::vector<Rational> out;
  out.reserve(v.size() - 1);
  for (std::size_t i = 1; i < v.size(); ++i) {
    out.emplace_back(v[i].degree - v[i - 1].degree, v[i].rank - v[i - 1].rank);
  }
  return out;
}

Rational max_slope_gap(const LatticePolygon& P) {
  const auto s = slopes(P);
  if (s.size() < 2) throw std::invalid_argument("slope gap needs at least two segments");
  Rational best = s[0] - s[1];
  for (std::size_t i = 2; i < s.size(); ++i) best = std::max(best, s[i - 1] - s[i]);
  return best;
}

Dominance dominates(const LatticePolygon& P, const LatticePolygon& Q) {
  if (P.endpoint() != Q.endpoint()) throw std::invalid_argument("dominance requires polygons with equal endpoints");
  bool above = false;
  bool below = false;
  for (long long x = 0; x <= P.endpoint().rank; ++x) {
    const Rational hp = P.height_at(x);
    const Rational hq = Q.height_at(x);
    if (hp > hq) above = true;
    if (hp < hq) below = true;
  }
  if (above && below) return Dominance::Incomparable;
  if (above) return Dominance::GreaterOrEqual;
  if (below) return Dominance::LessOrEqual;
  return Dominance::Equal;
}

namespace {

struct Enumerator {
  long long rank;
  long long end_degree;
  Rational lo;
  Rational hi;
  Rational max_gap;
  std::vector<Vertex> path;
  std::vector<LatticePolygon> found;

  void extend(const std::optional<Rational>& previous) {
    const Vertex last = path.back();
    for (long long x = last.rank + 1; x <= rank; ++x) {
      const long long dx = x - last.rank;
      const long long y_min = ceil(Rational(last.degree) + lo * dx);
      const long long y_max = floor(Rational(last.degree) + hi * dx);
      for (long long y = y_min; y <= y_max; ++y) {
        if (x == rank && y != end_degree) continue;
        const Rational s(y - last.degree, dx);
        if (previous && (s >= *previous || *previous - s > max_gap)) continue;
        path.push_back({x, y});
        if (x == rank) {
          if (path.size() >= 3) found.push_back(LatticePolygon::make(path));
        } else {
          extend(s);
        }
        path.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<LatticePolygon> enumerate_destabilized_polygons(const CurveParams& params) {
  params.validate();
  if (params.g < 2) throw std::domain_error("slope-gap bound needs genus >= 2");
  const Rational average(params.pullback_degree(), params.r);
  const Rational spread(static_cast<long long>(params.r - 1) * (2LL * params.g - 2));
  Enumerator e{params.r, params.pullback_degree(), average - spread, average + spread,
               Rational(2LL * params.g - 2), {{0, 0}}, {}};
  e.extend(std::nullopt);
  std::sort(e.found.begin(), e.found.end());
  return std::move(e.found);
}

LatticePolygon polygon_of_filtration(const FiltrationData& f) {
  if (f.empty()) throw std::invalid_argument("empty filtration");
  std::vector<Vertex> v{{0, 0}};
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].rank <= 0) throw std::invalid_argument("graded piece ranks must be positive");
    if (i > 0 && !(f[i].slope() < f[i - 1].slope())) {
      throw std::invalid_argument("graded piece slopes must strictly decrease");
    }
    v.push_back({v.back().rank + f[i].rank, v.back().degree + f[i].degree});
  }
  return LatticePolygon::make(std::move(v));
}

FiltrationData filtration_of_polygon(const LatticePolygon& P) {
  const auto& v = P.vertices();
  FiltrationData f;
  for (std::size_t i = 1; i < v.size(); ++i) {
    f.push_back({v[i].rank - v[i - 1].rank, v[i].degree - v[i - 1].degree});
  }
  return f;
}

LatticePolygon psi_template(PolygonLabel label, long long d) {
  switch (label) {
    case PolygonLabel::Psi1: return LatticePolygon::make({{0, 0}, {1, d + 1}, {3, 3 * d}});
    case PolygonLabel::Psi2: return LatticePolygon::make({{0, 0}, {2, 2 * d + 1}, {3, 3 * d}});
    case PolygonLabel::Psi3: return LatticePolygon::make({{0, 0}, {1, d + 1}, {2, 2 * d + 1}, {3, 3 * d}});
    case PolygonLabel::Psi4: return LatticePolygon::make({{0, 0}, {1, d + 2}, {2, 2 * d + 2}, {3, 3 * d}});
    default: throw std::invalid_argument("no template for label " + to_string(label));
  }
}

PolygonLabel name_polygon(const LatticePolygon& P, const CurveParams& params) {
  if (params.p != 3 || params.g != 2 || params.r != 3) throw std::domain_error("unclassified regime");
  if (P == LatticePolygon::straight(3, 3 * params.d)) return PolygonLabel::Semistable;
  for (auto l : {PolygonLabel::Psi1, PolygonLabel::Psi2, PolygonLabel::Psi3, PolygonLabel::Psi4}) {
    if (P == psi_template(l, params.d)) return l;
  }
  return PolygonLabel::Other;
}

}  // namespace frobstrat
