#pragma once

// Finite fields F_{p^m} with table-driven arithmetic, and projective planes
// over them.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace frobstrat {

class FieldElement;

/// Immutable handle to a finite field F_{p^m} = F_p[x]/(modulus).
///
/// Elements are encoded as integers in [0, q): the coefficient vector
/// (c_0, ..., c_{m-1}) of c_0 + c_1 x + ... is read as base-p digits, c_0
/// least significant. Addition and multiplication go through precomputed
/// tables, so q is capped at kMaxOrder.
class FieldSpec {
public:
  static constexpr std::uint32_t kMaxOrder = 1024;

  /// Builds F_{p^m}. When `modulus` is absent and m > 1 the lexicographically
  /// smallest monic irreducible polynomial is chosen. Coefficient lists run
  /// from the constant term upwards and must have length m + 1.
  /// Throws std::invalid_argument on a non-prime p, m < 1, a malformed or
  /// reducible modulus, or q > kMaxOrder.
  static FieldSpec make(int p, int m = 1,
                        std::optional<std::vector<int>> modulus = std::nullopt);

  int characteristic() const { return data_->p; }
  int degree() const { return data_->m; }
  std::uint32_t order() const { return data_->q; }
  /// Monic modulus, constant term first, length m + 1 (for m = 1 this is x).
  const std::vector<int>& modulus() const { return data_->modulus; }

  FieldElement zero() const;
  FieldElement one() const;
  /// Image of an integer under Z -> F_p -> F_q.
  FieldElement from_int(long long n) const;
  /// Throws std::invalid_argument unless coeffs has length m with entries in [0, p).
  FieldElement element(const std::vector<int>& coeffs) const;
  FieldElement from_code(std::uint32_t code) const;
  /// All q elements in code order (0, 1, ..., q - 1).
  std::vector<FieldElement> elements() const;

  std::string describe() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b);

private:
  friend class FieldElement;

  struct Data {
    int p = 0;
    int m = 0;
    std::uint32_t q = 0;
    std::vector<int> modulus;
    std::vector<std::uint16_t> add;  // q*q
    std::vector<std::uint16_t> mul;  // q*q
    std::vector<std::uint16_t> neg;  // q
    std::vector<std::uint16_t> inv;  // q, inv[0] unused
  };

  explicit FieldSpec(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

/// An element of a finite field. Arithmetic between elements of different
/// fields throws std::invalid_argument.
class FieldElement {
public:
  const FieldSpec& field() const { return spec_; }
  std::uint32_t code() const { return code_; }
  std::vector<int> coeffs() const;

  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  /// Throws std::domain_error on zero.
  FieldElement inverse() const;
  FieldElement pow(unsigned long long e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.code_ == b.code_ && a.spec_ == b.spec_;
  }

  std::string to_string() const;

private:
  friend class FieldSpec;
  FieldElement(FieldSpec spec, std::uint32_t code) : spec_(std::move(spec)), code_(code) {}
  void require_same_field(const FieldElement& o) const;

  FieldSpec spec_;
  std::uint32_t code_;
};

FieldElement field_inverse(const FieldElement& a);

/// A point of P^2, normalized so that the first nonzero coordinate is 1.
class ProjectivePoint {
public:
  /// Throws std::invalid_argument if all coordinates vanish or fields differ.
  explicit ProjectivePoint(std::array<FieldElement, 3> coords);

  const std::array<FieldElement, 3>& coords() const { return coords_; }
  const FieldElement& operator[](std::size_t i) const { return coords_[i]; }
  const FieldSpec& field() const { return coords_[0].field(); }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.coords_ == b.coords_;
  }

  /// "[a:b:c]" with each coordinate in FieldElement::to_string form.
  std::string to_string() const;

private:
  std::array<FieldElement, 3> coords_;
};

/// All q^2 + q + 1 points of P^2(F_q), ordered lexicographically by the
/// codes of their normalized coordinates: [0:0:1], [0:1:*], [1:*:*].
std::vector<ProjectivePoint> projective_plane(const FieldSpec& spec);

bool is_prime(long long n);

}  // namespace frobstrat
