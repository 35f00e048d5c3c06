#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nearvec/near_field.hpp"
#include "nearvec/quasi_kernel.hpp"
#include "nearvec/twisted_space.hpp"
#include "nearvec/vector_set.hpp"

namespace nearvec {

/// +_v on A, as a dense table over field element indices.
struct InducedAddition {
  VectorCode base = 0;
  std::size_t class_id = 0;
  std::uint32_t order = 0;
  std::vector<std::uint32_t> table;

  std::uint32_t operator()(std::uint32_t a, std::uint32_t b) const { return table[a * order + b]; }
};

/// Caches Q(V) (brute force) and the induced addition of every Q(V)* vector,
/// interning equal tables under one id. Holds a reference to `space`.
class AdditionAtlas {
 public:
  explicit AdditionAtlas(const TwistedSpace& space, const Limits& limits = {});

  const TwistedSpace& space() const { return *space_; }
  const QuasiKernel& quasi_kernel() const { return q_; }

  /// Table id of +_v by gamma-scan. Throws ZeroVector / NotInQuasiKernel.
  std::uint32_t id_of(VectorCode v);
  const std::vector<std::uint32_t>& table(std::uint32_t id) const { return tables_[id]; }
  std::size_t table_count() const { return tables_.size(); }
  /// Some vector carrying table `id`.
  VectorCode representative(std::uint32_t id) const { return reps_[id]; }

 private:
  struct TableHash {
    std::size_t operator()(const std::vector<std::uint32_t>& t) const noexcept;
  };

  const TwistedSpace* space_;
  QuasiKernel q_;
  std::vector<std::uint32_t> ids_;
  std::vector<std::vector<std::uint32_t>> tables_;
  std::vector<VectorCode> reps_;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, TableHash> index_;
  std::vector<std::uint32_t> owner_;
  std::vector<VectorCode> stamp_;
};

/// gamma-scan table, cross-checked against (a^q + b^q)^(1/q) for the class exponent q.
InducedAddition induced_addition(const TwistedSpace& space, VectorCode v);
NearField induced_nearfield(const TwistedSpace& space, VectorCode v);

/// {w : (a +_u b) w = a w + b w for all a, b}.
VectorSet kernel_Ru(const TwistedSpace& space, VectorCode u, const Limits& limits = {});
VectorSet kernel_of_table(const TwistedSpace& space, const std::vector<std::uint32_t>& table,
                          const Limits& limits = {});

/// Some nonzero lambda with u + lambda v in Q(V), or nullopt after scanning all of A*.
std::optional<FieldElement> are_compatible(const TwistedSpace& space, VectorCode u, VectorCode v);
std::optional<FieldElement> are_compatible(const TwistedSpace& space, const QuasiKernel& q,
                                           VectorCode u, VectorCode v);

struct RegularityCertificate {
  bool regular = true;
  /// An incompatible pair when not regular.
  std::optional<std::pair<VectorCode, VectorCode>> witness;
  std::size_t pairs_checked = 0;
};

/// Pairwise compatibility over Q(V)*. Compatibility is invariant under
/// rescaling either argument, so one vector per line A*v is enough.
RegularityCertificate is_regular(const TwistedSpace& space, const QuasiKernel& q);
RegularityCertificate is_regular(const TwistedSpace& space, const Limits& limits = {});

/// Checks the conclusion +_v = +_v' = +_{theta_i b_i} for an expansion of v, v'
/// over `basis`. Throws HypothesisUnmet when v, v' or the basis are not
/// quasi-kernel vectors, the basis is dependent, or no matching pair
/// (i0 != j0) exists.
bool key_lemma_verify(const TwistedSpace& space, const std::vector<VectorCode>& basis,
                      VectorCode v, VectorCode v_prime);

/// Reusable form of key_lemma_verify for sweeping many pairs over one basis.
class KeyLemmaChecker {
 public:
  enum class Outcome { Holds, Fails, HypothesisUnmet };

  /// Throws HypothesisUnmet if the basis is not an independent subset of Q(V).
  KeyLemmaChecker(AdditionAtlas& atlas, std::vector<VectorCode> basis,
                  const Limits& limits = {});

  Outcome check(VectorCode v, VectorCode v_prime, std::string* why = nullptr);
  /// Coefficients of v over the basis, if v lies in their span.
  std::optional<std::vector<std::uint32_t>> expand(VectorCode v) const;

 private:
  AdditionAtlas* atlas_;
  std::vector<VectorCode> basis_;
  std::vector<std::uint64_t> slot_;  // code -> tuple index + 1, 0 when outside the span
};

struct ConditionVerdict {
  bool holds = false;
  std::vector<std::uint64_t> witness;
  std::string detail;
};

/// Labels "1", "2", "1'", "2'", "3".."7"; each computed separately.
struct EquivalenceReport {
  std::vector<std::pair<std::string, ConditionVerdict>> conditions;
  std::size_t distinct_additions = 0;

  const ConditionVerdict& at(std::string_view label) const;
  /// All nine verdicts agree.
  bool consistent() const;
};

EquivalenceReport vstheorem_check(const TwistedSpace& space, const Limits& limits = {});
EquivalenceReport vstheorem_check(AdditionAtlas& atlas, const Limits& limits = {});

struct RegularComponent {
  std::size_t class_id = 0;
  std::vector<std::size_t> support;
  VectorSet members;
  InducedAddition addition;
};

struct Decomposition {
  std::vector<RegularComponent> components;
  /// component index for each standard basis vector e_i
  std::vector<std::size_t> basis_assignment;

  /// v -> (v_j)_j with v_j in component j and v = sum of the parts.
  std::vector<VectorCode> split(const TwistedSpace& space, VectorCode v) const;
  std::size_t component_of(const TwistedSpace& space, VectorCode q_vector) const;
};

Decomposition decompose(const TwistedSpace& space, const Limits& limits = {});

/// Exhaustive invariant checks: direct sum, Q(V)* partition, uniqueness under
/// reversed basis order, grouping by induced addition, maximality witnesses,
/// component bases.
AxiomReport verify_decomposition(const TwistedSpace& space, const Decomposition& d,
                                 AdditionAtlas& atlas);

struct MaximalityWitness {
  VectorCode outside = 0;
  /// Either +_inside fails to distribute over `probe` at (alpha, beta), or
  /// probe is not in Q(V) and alpha probe + beta probe is no multiple of it.
  VectorCode inside = 0;
  VectorCode probe = 0;
  bool probe_outside_q = false;
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;
};

MaximalityWitness maximality_witness(const TwistedSpace& space, const Decomposition& d,
                                     std::size_t component, VectorCode outside,
                                     AdditionAtlas& atlas);
bool check_maximality_witness(const TwistedSpace& space, AdditionAtlas& atlas,
                              const MaximalityWitness& w);

}  // namespace nearvec
