#pragma once

#include <algorithm>
#include <cstdint>

namespace nearvec {

/// Enumeration bounds shared by the exhaustive routines. Callers may only
/// tighten them (see `capped`).
struct Limits {
  std::uint64_t max_field_order = 1ull << 20;
  std::uint64_t max_vectors = 1ull << 21;     // materialized vector sets
  std::uint64_t max_tuples = 1ull << 22;      // coefficient-tuple searches
  std::uint64_t max_raw_carrier = 1ull << 12; // explicit-table spaces
  std::uint64_t max_axiom_vectors = 1ull << 13;
  std::uint64_t max_isomorphism_order = 64;

  Limits capped(std::uint64_t bound) const {
    Limits out = *this;
    out.max_vectors = std::min(max_vectors, bound);
    out.max_tuples = std::min(max_tuples, bound);
    out.max_raw_carrier = std::min(max_raw_carrier, bound);
    out.max_axiom_vectors = std::min(max_axiom_vectors, bound);
    return out;
  }
};

}  // namespace nearvec
