#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "nearvec/hom.hpp"
#include "nearvec/quasi_kernel.hpp"
#include "nearvec/span.hpp"
#include "nearvec/structure.hpp"
#include "nearvec/verify.hpp"

namespace nearvec {

using Json = nlohmann::ordered_json;

/// Member lists longer than this are replaced by "members_elided": true.
inline constexpr std::size_t kMemberThreshold = 256;

struct SpaceConfig {
  std::uint32_t p = 0;
  std::uint32_t r = 1;
  std::optional<std::vector<std::uint32_t>> modulus;
  std::vector<std::uint64_t> exponents;
};

/// {"p", "r", "modulus_poly": [..] | null, "exponents": [..]}. InvalidArgument on schema errors.
SpaceConfig parse_space_config(const Json& j);
Json to_json(const SpaceConfig& c);
TwistedSpace make_space(const SpaceConfig& c, const Limits& limits = {});

/// {"raw": {"order", "add_table", "scalars", "description"?}}.
bool is_raw_config(const Json& j);
RawSpace parse_raw_space(const Json& j);
Json to_json(const RawSpace& raw);

/// Plain ints when r = 1, otherwise coefficient arrays (constant term first).
Json vector_to_json(const TwistedSpace& space, VectorCode v);
VectorCode vector_from_json(const TwistedSpace& space, const Json& j);

Json to_json(const Verdict& v);
Json to_json(const AxiomReport& report);
AxiomReport axiom_report_from_json(const Json& j);

Json to_json(const TwistedSpace& space, const QuasiKernel& q,
             std::size_t threshold = kMemberThreshold);
Json to_json(const TwistedSpace& space, const SubspaceDescriptor& d,
             std::size_t threshold = kMemberThreshold);
Json to_json(const TwistedSpace& space, const Decomposition& d,
             std::size_t threshold = kMemberThreshold);
Json to_json(const TwistedSpace& space, const DimResult& d);

Json to_json(const EquivalenceReport& report);
EquivalenceReport equivalence_report_from_json(const Json& j);

Json to_json(const std::vector<SuiteResult>& results);
std::vector<SuiteResult> suite_results_from_json(const Json& j);

/// {"theta": "identity" | [vector, ...], "eta": "identity" | {"power": k} | [element, ...]}.
/// Table forms list images in enumeration order; eta lists A1* only.
HomomorphismSpec parse_hom_spec(const Json& j, const TwistedSpace& from, const TwistedSpace& to);

bool operator==(const Verdict& a, const Verdict& b);
bool operator==(const AxiomReport& a, const AxiomReport& b);
bool operator==(const ConditionVerdict& a, const ConditionVerdict& b);
bool operator==(const EquivalenceReport& a, const EquivalenceReport& b);

}  // namespace nearvec
