#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nearvec/quasi_kernel.hpp"
#include "nearvec/structure.hpp"
#include "nearvec/twisted_space.hpp"
#include "nearvec/vector_set.hpp"

namespace nearvec {

/// {a_1 v + ... + a_t v : t >= 1}: the additive closure of A v.
VectorSet linear_combinations(const TwistedSpace& space, VectorCode v, const Limits& limits = {});

struct SubspaceDescriptor {
  /// Independent quasi-kernel vectors, grouped by component.
  std::vector<VectorCode> generators;
  std::vector<std::vector<std::size_t>> component_supports;
  std::size_t dim = 0;
  std::size_t member_count = 0;
  /// Empty when the space exceeds the materialization bound.
  VectorSet members;
};

/// Splits each generator across the exponent classes, keeps a maximal
/// independent subset of the nonzero parts and returns the sum of their lines.
SubspaceDescriptor span_of(const TwistedSpace& space, const std::vector<VectorCode>& generators,
                           const Limits& limits = {});
/// Same, reusing a precomputed decomposition.
SubspaceDescriptor span_of(const TwistedSpace& space, const Decomposition& decomposition,
                           const std::vector<VectorCode>& generators);

struct DimResult {
  std::size_t value = 0;
  /// v = sum of (alpha_i, u_i) with u_i in Q(V)* and alpha_i nonzero.
  std::vector<std::pair<FieldElement, VectorCode>> witness;
};

/// Number of classes on which v is nonzero.
std::size_t dim_by_components(const TwistedSpace& space, VectorCode v);

/// Shortest representation of every vector as a sum of Q(V)* elements, by
/// breadth-first search from 0. Entry v is the length; parents give witnesses.
struct RepresentationTable {
  std::vector<std::uint8_t> length;
  std::vector<VectorCode> parent;  // v - last term
};
RepresentationTable minimal_representations(const TwistedSpace& space, const QuasiKernel& q);

/// Both routes; throws ConstructionFailed if they disagree.
DimResult dim_of_vector(const TwistedSpace& space, VectorCode v, const Limits& limits = {});

struct Independence {
  bool independent = true;
  /// Nonzero coefficient tuple with sum a_i v_i = 0 when dependent.
  std::vector<FieldElement> dependency;
};

/// Brute force over all coefficient tuples. Vectors must lie in Q(V).
Independence is_linearly_independent(const TwistedSpace& space,
                                     const std::vector<VectorCode>& vectors,
                                     const Limits& limits = {});

/// Greedy basis of Q(V) in enumeration order (or reversed).
std::vector<VectorCode> extract_basis(const TwistedSpace& space, bool reversed = false,
                                      const Limits& limits = {});

struct SubspaceVerdict {
  bool closed = false;          // nonempty, closed under + and scalars
  bool equals_span_of_q = false;  // W = span(W n Q(V))
};

SubspaceVerdict subspace_verdict(const TwistedSpace& space, const VectorSet& w,
                                 const Limits& limits = {});
/// Throws ConstructionFailed when the two characterizations disagree.
bool is_subspace(const TwistedSpace& space, const VectorSet& w, const Limits& limits = {});

/// v <-> (a_1..a_k) with v = sum a_i b_i over a basis (or independent subset)
/// of quasi-kernel vectors.
class CoordinateMap {
 public:
  CoordinateMap(const TwistedSpace& space, std::vector<VectorCode> basis,
                const Limits& limits = {});

  const std::vector<VectorCode>& basis() const { return basis_; }
  bool spans() const { return spans_; }
  std::optional<std::vector<FieldElement>> coordinates(VectorCode v) const;
  VectorCode vector(const std::vector<FieldElement>& coords) const;

  /// eta_i(a) = a^q for the exponent q of b_i's leading coordinate.
  std::vector<std::uint32_t> eta(std::size_t i) const;

 private:
  const TwistedSpace* space_;
  std::vector<VectorCode> basis_;
  std::vector<std::uint64_t> slot_;
  bool spans_ = false;
};

/// Throws NotABasis unless `basis` is an independent spanning set in Q(V).
CoordinateMap canonical_coordinates(const TwistedSpace& space, const std::vector<VectorCode>& basis,
                                    const Limits& limits = {});

/// Round trip, component-wise pushforward addition, eta_i isomorphisms.
AxiomReport verify_coordinates(const TwistedSpace& space, const CoordinateMap& map);

/// v != w outside Q(V) with span(v) = span(w). HypothesisUnmet when regular.
std::pair<VectorCode, VectorCode> distinct_span_witness(const TwistedSpace& space);
/// v, w outside Q(V), neither in the other's span, spans meeting nontrivially.
std::pair<VectorCode, VectorCode> intersecting_span_witness(const TwistedSpace& space);

}  // namespace nearvec
