#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nearvec/limits.hpp"
#include "nearvec/near_field.hpp"
#include "nearvec/quasi_kernel.hpp"
#include "nearvec/twisted_space.hpp"

namespace nearvec {

struct VerifyOptions {
  std::uint64_t seed = 20240917;
  Limits limits;
  /// Key Lemma pairs are exhaustive up to this many Q(V)* vectors, sampled above.
  std::size_t exhaustive_quasi_kernel = 500;
  std::size_t sampled_pairs = 10000;
  /// Span checks cover every vector up to this size, a seeded sample above.
  std::uint64_t exhaustive_vectors = 2000;
  std::size_t sampled_vectors = 200;
};

struct SuiteResult {
  std::string name;
  AxiomReport checks;

  bool passed() const { return !checks.first_failure(); }
};

inline constexpr std::array<std::string_view, 5> kSuites = {
    "axioms", "vstheorem", "keylemma", "span-oracle", "decomposition"};

SuiteResult suite_axioms(const TwistedSpace& space, const VerifyOptions& opts);
SuiteResult suite_vstheorem(const TwistedSpace& space, const VerifyOptions& opts);
SuiteResult suite_keylemma(const TwistedSpace& space, const VerifyOptions& opts);
SuiteResult suite_span(const TwistedSpace& space, const VerifyOptions& opts);
SuiteResult suite_decomposition(const TwistedSpace& space, const VerifyOptions& opts);

/// `suite` is one of kSuites or "all". Throws InvalidArgument otherwise.
std::vector<SuiteResult> run_verify(const TwistedSpace& space, std::string_view suite,
                                    const VerifyOptions& opts);
/// Explicit-table spaces only support the axiom suite.
std::vector<SuiteResult> run_verify(const RawSpace& space, std::string_view suite,
                                    const VerifyOptions& opts);

/// Exactly one element of order 2 in A* acting as -id when p is odd, none when p = 2.
Verdict order_two_remark(const TwistedSpace& space);

}  // namespace nearvec
