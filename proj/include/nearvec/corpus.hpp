#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nearvec/finite_field.hpp"

namespace nearvec {

struct CorpusEntry {
  std::uint32_t p = 0;
  std::uint32_t r = 0;
  std::vector<std::uint64_t> exponents;
  std::uint64_t size = 0;

  std::string label() const;
};

/// One exponent tuple per isomorphism type reachable by the obvious
/// symmetries: permuting coordinates, a Frobenius twist on one coordinate
/// (q -> p q), and reparametrizing A by a -> a^u for a unit u (same set of maps).
std::vector<std::vector<std::uint64_t>> canonical_exponent_tuples(const Field& field, std::size_t n);

/// p in {2,3,5,7,11,13}, r in {1,2} plus GF(8), n <= 3, |V| <= max_size.
std::vector<CorpusEntry> standard_corpus(std::uint64_t max_size = 4096);

}  // namespace nearvec
