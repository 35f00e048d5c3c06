#pragma once

#include <cstdint>
#include <vector>

#include "nearvec/near_field.hpp"
#include "nearvec/twisted_space.hpp"

namespace nearvec {

/// theta: V1 -> V2 on vector codes; eta: A1* -> A2* on field element indices
/// (entry 0 is ignored).
struct HomomorphismSpec {
  std::vector<VectorCode> theta;
  std::vector<std::uint32_t> eta;
};

HomomorphismSpec identity_theta_power_eta(const TwistedSpace& from, const TwistedSpace& to,
                                          std::int64_t eta_power);

/// theta additive, eta multiplicative into A2*, theta(a x) = eta(a) theta(x)
/// for every x and nonzero a. Throws ShapeMismatch on malformed tables.
AxiomReport hom_check(const TwistedSpace& from, const TwistedSpace& to,
                      const HomomorphismSpec& spec);

inline bool is_homomorphism(const AxiomReport& report) { return !report.first_failure(); }

}  // namespace nearvec
