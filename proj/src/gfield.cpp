#include "frobstrat/gfield.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace frobstrat {
namespace {

using Poly = std::vector<int>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int mod(long long a, int p) {
  long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inverse_mod(int a, int p) {
  // p is prime and small; Fermat.
  long long result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

// Remainder of a modulo the nonzero polynomial b over F_p.
Poly poly_rem(Poly a, const Poly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int lead_inv = inverse_mod(b.back(), p);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int factor = static_cast<int>(1LL * a.back() * lead_inv % p);
    for (int i = 0; i <= db; ++i) {
      a[shift + i] = mod(a[shift + i] - 1LL * factor * b[i], p);
    }
    trim(a);
  }
  return a;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of `index`, constant term least significant.
Poly monic_from_index(long long index, int degree, int p) {
  Poly f(degree + 1, 0);
  for (int i = 0; i < degree; ++i) {
    f[i] = static_cast<int>(index % p);
    index /= p;
  }
  f[degree] = 1;
  return f;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Exhaustive trial division by every monic polynomial of degree 1..m/2.
bool is_irreducible(const Poly& f, int p) {
  const int m = static_cast<int>(f.size()) - 1;
  for (int k = 1; 2 * k <= m; ++k) {
    const long long count = ipow(p, k);
    for (long long idx = 0; idx < count; ++idx) {
      if (poly_rem(f, monic_from_index(idx, k, p), p).empty()) return false;
    }
  }
  return true;
}

// Lexicographic order on coefficient lists compares the constant term first,
// which is the most significant digit; enumerate in that order.
Poly smallest_irreducible(int m, int p) {
  const long long count = ipow(p, m);
  for (long long idx = 0; idx < count; ++idx) {
    Poly f(m + 1, 0);
    long long rest = idx;
    for (int i = m - 1; i >= 0; --i) {
      f[i] = static_cast<int>(rest % p);
      rest /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::vector<int> decode(std::uint32_t code, int p, int m) {
  std::vector<int> c(m);
  for (int i = 0; i < m; ++i) {
    c[i] = static_cast<int>(code % p);
    code /= p;
  }
  return c;
}

std::uint32_t encode(const std::vector<int>& c, int p) {
  std::uint32_t code = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) code = code * p + *it;
  return code;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::make(int p, int m, std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("field extension degree must be >= 1");
  const long long q = ipow(p, m);
  if (q > kMaxOrder) throw std::invalid_argument("field order " + std::to_string(q) + " exceeds supported maximum");

  Poly f;
  if (m == 1) {
    f = {0, 1};
  } else if (modulus) {
    if (static_cast<int>(modulus->size()) != m + 1) {
      throw std::invalid_argument("modulus must have m + 1 coefficients");
    }
    f.reserve(m + 1);
    for (int c : *modulus) f.push_back(mod(c, p));
    if (f.back() == 0) throw std::invalid_argument("modulus leading coefficient vanishes mod p");
    const int lead_inv = inverse_mod(f.back(), p);
    for (int& c : f) c = static_cast<int>(1LL * c * lead_inv % p);
    if (!is_irreducible(f, p)) throw std::invalid_argument("modulus is reducible over F_" + std::to_string(p));
  } else {
    f = smallest_irreducible(m, p);
  }

  auto d = std::make_shared<Data>();
  d->p = p;
  d->m = m;
  d->q = static_cast<std::uint32_t>(q);
  d->modulus = f;
  const std::uint32_t n = d->q;
  d->add.resize(std::size_t{n} * n);
  d->mul.resize(std::size_t{n} * n);
  d->neg.resize(n);
  d->inv.resize(n, 0);

  for (std::uint32_t a = 0; a < n; ++a) {
    const auto ca = decode(a, p, m);
    std::vector<int> cn(m);
    for (int i = 0; i < m; ++i) cn[i] = mod(-ca[i], p);
    d->neg[a] = static_cast<std::uint16_t>(encode(cn, p));
    for (std::uint32_t b = 0; b < n; ++b) {
      const auto cb = decode(b, p, m);
      std::vector<int> sum(m);
      for (int i = 0; i < m; ++i) sum[i] = (ca[i] + cb[i]) % p;
      d->add[a * n + b] = static_cast<std::uint16_t>(encode(sum, p));

      Poly prod(2 * m - 1, 0);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) prod[i + j] = mod(prod[i + j] + 1LL * ca[i] * cb[j], p);
      }
      Poly r = poly_rem(prod, f, p);
      r.resize(m, 0);
      d->mul[a * n + b] = static_cast<std::uint16_t>(encode(r, p));
    }
  }
  for (std::uint32_t a = 1; a < n; ++a) {
    for (std::uint32_t b = 1; b < n; ++b) {
      if (d->mul[a * n + b] == 1) {
        d->inv[a] = static_cast<std::uint16_t>(b);
        break;
      }
    }
  }
  return FieldSpec(std::move(d));
}

bool operator==(const FieldSpec& a, const FieldSpec& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->p == b.data_->p && a.data_->modulus == b.data_->modulus;
}

FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }

FieldElement FieldSpec::from_int(long long n) const {
  return FieldElement(*this, static_cast<std::uint32_t>(mod(n, data_->p)));
}

FieldElement FieldSpec::element(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != data_->m) {
    throw std::invalid_argument("field element needs exactly " + std::to_string(data_->m) + " coefficients");
  }
  for (int c : coeffs) {
    if (c < 0 || c >= data_->p) throw std::invalid_argument("field element coefficient out of range");
  }
  return FieldElement(*this, encode(coeffs, data_->p));
}

FieldElement FieldSpec::from_code(std::uint32_t code) const {
  if (code >= data_->q) throw std::invalid_argument("field element code out of range");
  return FieldElement(*this, code);
}

std::vector<FieldElement> FieldSpec::elements() const {
  std::vector<FieldElement> out;
  out.reserve(data_->q);
  for (std::uint32_t c = 0; c < data_->q; ++c) out.push_back(FieldElement(*this, c));
  return out;
}

std::string FieldSpec::describe() const {
  std::ostringstream os;
  os << "F_" << data_->q;
  if (data_->m > 1) {
    os << " = F_" << data_->p << "[x]/(";
    bool first = true;
    for (int i = data_->m; i >= 0; --i) {
      const int c = data_->modulus[i];
      if (c == 0) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0 || c != 1) os << c;
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
    }
    os << ")";
  }
  return os.str();
}

std::vector<int> FieldElement::coeffs() const {
  return decode(code_, spec_.characteristic(), spec_.degree());
}

void FieldElement::require_same_field(const FieldElement& o) const {
  if (!(spec_ == o.spec_)) throw std::invalid_argument("arithmetic between elements of different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(o);
  return FieldElement(spec_, spec_.data_->add[code_ * spec_.data_->q + o.code_]);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(o);
  return FieldElement(spec_, spec_.data_->add[code_ * spec_.data_->q + spec_.data_->neg[o.code_]]);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(o);
  return FieldElement(spec_, spec_.data_->mul[code_ * spec_.data_->q + o.code_]);
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::operator-() const { return FieldElement(spec_, spec_.data_->neg[code_]); }

FieldElement FieldElement::inverse() const {
  if (code_ == 0) throw std::domain_error("inverse of zero field element");
  return FieldElement(spec_, spec_.data_->inv[code_]);
}

FieldElement FieldElement::pow(unsigned long long e) const {
  FieldElement result = spec_.one();
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string FieldElement::to_string() const {
  const auto c = coeffs();
  if (c.size() == 1) return std::to_string(c[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

FieldElement field_inverse(const FieldElement& a) { return a.inverse(); }

ProjectivePoint::ProjectivePoint(std::array<FieldElement, 3> coords) : coords_(std::move(coords)) {
  if (!(coords_[0].field() == coords_[1].field()) || !(coords_[0].field() == coords_[2].field())) {
    throw std::invalid_argument("projective coordinates from different fields");
  }
  auto lead = std::find_if(coords_.begin(), coords_.end(), [](const FieldElement& c) { return !c.is_zero(); });
  if (lead == coords_.end()) throw std::invalid_argument("projective point with all coordinates zero");
  const FieldElement scale = lead->inverse();
  for (auto& c : coords_) c = c * scale;
}

std::string ProjectivePoint::to_string() const {
  return "[" + coords_[0].to_string() + ":" + coords_[1].to_string() + ":" + coords_[2].to_string() + "]";
}

std::vector<ProjectivePoint> projective_plane(const FieldSpec& spec) {
  const auto elems = spec.elements();
  const auto zero = spec.zero();
  const auto one = spec.one();
  std::vector<ProjectivePoint> out;
  out.reserve(std::size_t{spec.order()} * spec.order() + spec.order() + 1);
  out.emplace_back(std::array{zero, zero, one});
  for (const auto& c : elems) out.emplace_back(std::array{zero, one, c});
  for (const auto& b : elems) {
    for (const auto& c : elems) out.emplace_back(std::array{one, b, c});
  }
  return out;
}

}  // namespace frobstrat
