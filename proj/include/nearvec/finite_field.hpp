#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nearvec/limits.hpp"

namespace nearvec {

/// An element of GF(p^r). The coefficient vector (c_0, ..., c_{r-1}) of the
/// polynomial representative is packed base p as c_0 + c_1 p + ... so the
/// packing is canonical and `index` doubles as the enumeration position.
struct FieldElement {
  std::uint32_t index = 0;

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Exact arithmetic in GF(p^r), p^r <= 2^20. Copies share immutable tables.
class Field {
 public:
  /// Builds GF(p^r). For r > 1 the modulus is a monic degree-r polynomial,
  /// constant term first. When omitted, the first monic irreducible
  /// polynomial in packed order is used.
  static Field make(std::uint32_t p, std::uint32_t r,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                    const Limits& limits = {});

  std::uint32_t characteristic() const { return t_->p; }
  std::uint32_t degree() const { return t_->r; }
  std::uint32_t order() const { return t_->order; }
  std::uint32_t mult_order() const { return t_->order - 1; }
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }
  std::string name() const;

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }

  FieldElement add(FieldElement a, FieldElement b) const { return {add_raw(a.index, b.index)}; }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return {add_raw(a.index, t_->neg[b.index])};
  }
  FieldElement neg(FieldElement a) const { return {t_->neg[a.index]}; }
  FieldElement mul(FieldElement a, FieldElement b) const { return {mul_raw(a.index, b.index)}; }
  /// Throws Error(DivisionByZero) for a = 0.
  FieldElement inv(FieldElement a) const;
  /// a^k; negative k requires a != 0. 0^0 = 1.
  FieldElement pow(FieldElement a, std::int64_t k) const;

  /// All p^r elements in packed (lexicographic) order.
  std::vector<FieldElement> elements() const;

  std::vector<std::uint32_t> coeffs(FieldElement a) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// Image of an integer in the prime subfield.
  FieldElement from_int(std::int64_t value) const;
  bool contains(FieldElement a) const { return a.index < t_->order; }

  /// Generator of the multiplicative group (smallest by index).
  FieldElement primitive_element() const { return {t_->exp[1]}; }
  /// Discrete log base primitive_element(); a must be nonzero.
  std::uint32_t log(FieldElement a) const { return t_->log[a.index]; }
  FieldElement exp(std::uint64_t k) const { return {t_->exp[k % mult_order()]}; }
  bool is_square(FieldElement a) const;

  std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const {
    if (!t_->add_table.empty()) return t_->add_table[a * t_->order + b];
    return add_digits(a, b);
  }
  std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return t_->exp[t_->log[a] + t_->log[b]];
  }
  std::uint32_t neg_raw(std::uint32_t a) const { return t_->neg[a]; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.t_->p == b.t_->p && a.t_->r == b.t_->r && a.t_->modulus == b.t_->modulus;
  }

 private:
  struct Tables {
    std::uint32_t p = 0;
    std::uint32_t r = 0;
    std::uint32_t order = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> add_table;  // only for small orders
    std::vector<std::uint32_t> neg;
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> exp;  // length 2 * mult_order
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const;

  std::shared_ptr<const Tables> t_;
};

bool is_prime(std::uint64_t n);

/// Exhaustive test: no monic factor of degree 1..deg/2 divides `poly`.
/// `poly` is constant term first and must be monic of degree >= 1.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

}  // namespace nearvec

template <>
struct std::hash<nearvec::FieldElement> {
  std::size_t operator()(nearvec::FieldElement e) const noexcept { return e.index; }
};
