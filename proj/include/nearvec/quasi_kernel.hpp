#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nearvec/limits.hpp"
#include "nearvec/near_field.hpp"
#include "nearvec/twisted_space.hpp"
#include "nearvec/vector_set.hpp"

namespace nearvec {

/// Q(V) together with the coordinate supports whose subspaces make it up.
struct QuasiKernel {
  VectorSet members;
  /// Sorted coordinate sets S_j; Q(V) is the union of {v : supp(v) within S_j}.
  std::vector<std::vector<std::size_t>> supports;

  bool contains(VectorCode v) const { return members.contains(v); }
};

/// v is in Q(V) iff for every alpha, beta some gamma has alpha v + beta v = gamma v.
/// The gamma search looks the sum up among the precomputed multiples {gamma v}.
QuasiKernel quasi_kernel_bruteforce(const TwistedSpace& space, const Limits& limits = {});

/// Union of the coordinate subspaces of the exponent classes.
QuasiKernel quasi_kernel_closed_form(const TwistedSpace& space);

/// A finite group given by its operation table together with a list of maps
/// on it, the candidate scalar set A.
struct RawSpace {
  std::uint32_t order = 0;
  std::vector<std::uint32_t> add_table;
  std::vector<std::vector<std::uint32_t>> scalars;
  std::string description;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_table[a * order + b]; }
};

/// The five conditions of a near-vector space, in order.
inline constexpr std::array<std::string_view, 5> kSpaceAxioms = {
    "1_group_of_endomorphisms", "2_zero_id_negid", "3_units_are_automorphism_group",
    "4_fixed_point_free", "5_quasi_kernel_generates"};

/// Exhaustive verdicts for the five conditions plus an "abelian" entry.
/// Counterexamples are vector codes (or carrier elements) and scalar indices.
AxiomReport axiom_check(const TwistedSpace& space, const Limits& limits = {});
AxiomReport axiom_check(const RawSpace& space, const Limits& limits = {});

/// Q(V) of an explicit-table space, by the literal definition.
std::vector<std::uint32_t> raw_quasi_kernel(const RawSpace& space);

inline bool certified(const AxiomReport& report) { return report.all_of(kSpaceAxioms); }

/// (N, +) with N acting on itself by left multiplication.
RawSpace raw_from_near_field(const NearField& nf);

}  // namespace nearvec
