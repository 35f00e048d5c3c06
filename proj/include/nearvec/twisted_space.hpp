#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nearvec/error.hpp"
#include "nearvec/finite_field.hpp"
#include "nearvec/limits.hpp"

namespace nearvec {

/// Position of a vector in the lexicographic enumeration of F^n.
using VectorCode = std::uint32_t;

struct Vector {
  std::vector<FieldElement> coords;

  friend bool operator==(const Vector&, const Vector&) = default;
  friend auto operator<=>(const Vector&, const Vector&) = default;
};

/// Raised when an exponent is not coprime to |F*|. Carries the concrete
/// failure of fixed-point-freeness: alpha and beta act identically on
/// the basis vector e_coordinate.
class NotCoprimeError : public Error {
 public:
  NotCoprimeError(std::size_t coordinate, std::uint64_t exponent, std::uint64_t mult_order,
                  std::uint64_t gcd, FieldElement alpha, FieldElement beta, Vector witness,
                  const std::string& what)
      : Error(ErrorKind::NotCoprime, what),
        coordinate(coordinate),
        exponent(exponent),
        mult_order(mult_order),
        gcd(gcd),
        alpha(alpha),
        beta(beta),
        witness(std::move(witness)) {}

  std::size_t coordinate;
  std::uint64_t exponent;
  std::uint64_t mult_order;
  std::uint64_t gcd;
  FieldElement alpha;
  FieldElement beta;
  Vector witness;
};

/// V = F^n with the twisted action alpha (x_1..x_n) = (alpha^{q_1} x_1, ..., alpha^{q_n} x_n).
/// Every exponent is coprime to |F*| so each psi_i is an automorphism of F*.
class TwistedSpace {
 public:
  static TwistedSpace make(Field field, const std::vector<std::uint64_t>& exponents,
                           const Limits& limits = {});

  const Field& field() const { return field_; }
  std::size_t dimension() const { return exponents_.size(); }
  /// Exponents reduced into [1, |F*|].
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  /// Coordinates grouped by Frobenius-equivalent exponents, ordered by first index.
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
  std::size_t class_of(std::size_t coordinate) const { return class_of_[coordinate]; }
  std::uint32_t size() const { return size_; }
  std::uint32_t scalar_count() const { return field_.order(); }
  std::string describe() const;

  VectorCode encode(const Vector& v) const;
  Vector decode(VectorCode code) const;
  std::uint32_t coord(VectorCode code, std::size_t i) const {
    return (code / stride_[i]) % field_.order();
  }

  VectorCode add(VectorCode a, VectorCode b) const;
  VectorCode neg(VectorCode a) const;
  VectorCode sub(VectorCode a, VectorCode b) const { return add(a, neg(b)); }
  VectorCode scale(FieldElement alpha, VectorCode v) const;
  VectorCode unit(std::size_t i) const { return stride_[i]; }
  /// Coordinates with a nonzero entry.
  std::vector<std::size_t> support(VectorCode v) const;
  /// Keep only the coordinates in `coords`.
  VectorCode restrict(VectorCode v, const std::vector<std::size_t>& coords) const;

  Vector scalar_mul(FieldElement alpha, const Vector& v) const;
  Vector vec_add(const Vector& a, const Vector& b) const;
  Vector vec_neg(const Vector& v) const;

  /// psi_i(alpha) = alpha^{q_i}.
  FieldElement psi(std::size_t i, FieldElement alpha) const {
    return {psi_[i][alpha.index]};
  }

 private:
  TwistedSpace() = default;

  Field field_ = Field::make(2, 1);
  std::vector<std::uint32_t> exponents_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::uint32_t> stride_;
  std::vector<std::vector<std::uint32_t>> psi_;
  std::uint32_t size_ = 0;
};

/// Partition of coordinates: i ~ j iff q_j = p^l q_i (mod p^r - 1) for some 0 <= l < r.
std::vector<std::vector<std::size_t>> exponent_classes(const TwistedSpace& space);

}  // namespace nearvec
