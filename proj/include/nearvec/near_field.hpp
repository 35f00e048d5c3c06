#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nearvec/finite_field.hpp"
#include "nearvec/limits.hpp"

namespace nearvec {

enum class NearFieldOrigin { FromField, Dickson9, Induced, Table };

/// A finite scalar structure given by dense operation tables on the carrier
/// {0, ..., order-1}. For field-backed structures carrier element i is the
/// field element with index i.
struct NearField {
  std::uint32_t order = 0;
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> mul_table;
  std::uint32_t zero = 0;
  std::uint32_t one = 1;
  NearFieldOrigin origin = NearFieldOrigin::Table;
  std::string description;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_table[a * order + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_table[a * order + b]; }
};

/// Outcome of one exhaustively checked law; the counterexample lists the
/// offending arguments (carrier elements or vector codes).
struct Verdict {
  bool pass = true;
  std::vector<std::uint64_t> counterexample;
  std::string detail;
};

/// Ordered law name -> verdict.
class AxiomReport {
 public:
  void set(std::string name, Verdict verdict);
  const Verdict& at(std::string_view name) const;
  bool contains(std::string_view name) const;
  const std::vector<std::pair<std::string, Verdict>>& entries() const { return entries_; }

  /// True if every listed law passes.
  bool all_of(std::span<const std::string_view> names) const;
  /// First failing law among `names`, if any.
  std::optional<std::string> first_failure(std::span<const std::string_view> names) const;
  std::optional<std::string> first_failure() const;

 private:
  std::vector<std::pair<std::string, Verdict>> entries_;
};

/// Left near-field laws checked by `nf_check_axioms`. Right distributivity is
/// reported too but is not one of them.
inline constexpr std::array<std::string_view, 11> kNearFieldLaws = {
    "add_closed",    "add_associative", "add_identity",  "add_inverse",
    "add_commutative", "mul_closed",    "mul_associative", "mul_identity",
    "mul_inverse",   "left_distributive", "zero_symmetric"};

bool is_near_field(const AxiomReport& report);
bool is_division_ring(const AxiomReport& report);

NearField nf_from_field(const Field& field);

/// The left Dickson near-field of order 9 on the carrier GF(9) = Z_3[x]/(x^2+1).
NearField nf_dickson9();

AxiomReport nf_check_axioms(const NearField& nf);

/// Elements k with (a + b) k = a k + b k for all a, b.
std::vector<std::uint32_t> nf_distributive_elements(const NearField& nf);

/// A bijection f with f(a+b) = f(a)+f(b) and f(ab) = f(a)f(b), or nullopt
/// when none exists. Backtracking with propagation; order <= 64.
std::optional<std::vector<std::uint32_t>> nf_isomorphic(const NearField& a, const NearField& b,
                                                        const Limits& limits = {});

/// True if `map` is an isomorphism from `a` to `b` (checked exhaustively).
bool nf_is_isomorphism(const NearField& a, const NearField& b,
                       const std::vector<std::uint32_t>& map);

/// Multiplicative elements x != one with x*x = one.
std::vector<std::uint32_t> nf_involutions(const NearField& nf);

}  // namespace nearvec
