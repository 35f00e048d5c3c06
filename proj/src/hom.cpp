#include "nearvec/hom.hpp"

#include "nearvec/error.hpp"

namespace nearvec {

HomomorphismSpec identity_theta_power_eta(const TwistedSpace& from, const TwistedSpace& to,
                                          std::int64_t eta_power) {
  if (from.size() != to.size()) {
    throw Error(ErrorKind::ShapeMismatch, "identity theta needs spaces of equal size");
  }
  HomomorphismSpec spec;
  spec.theta.resize(from.size());
  for (VectorCode v = 0; v < from.size(); ++v) spec.theta[v] = v;
  const Field& f = from.field();
  spec.eta.resize(f.order(), 0);
  for (std::uint32_t a = 1; a < f.order(); ++a) spec.eta[a] = f.pow({a}, eta_power).index;
  return spec;
}

AxiomReport hom_check(const TwistedSpace& from, const TwistedSpace& to,
                      const HomomorphismSpec& spec) {
  if (spec.theta.size() != from.size()) {
    throw Error(ErrorKind::ShapeMismatch, "theta must list one image per vector of the source");
  }
  if (spec.eta.size() != from.scalar_count()) {
    throw Error(ErrorKind::ShapeMismatch, "eta must list one image per scalar of the source");
  }
  for (auto y : spec.theta) {
    if (y >= to.size()) throw Error(ErrorKind::ShapeMismatch, "theta leaves the target space");
  }
  const std::uint32_t k1 = from.scalar_count();
  AxiomReport report;

  Verdict into_units;
  for (std::uint32_t a = 1; a < k1; ++a) {
    if (spec.eta[a] == 0 || spec.eta[a] >= to.scalar_count()) {
      into_units = {false, {a}, "eta does not map into A2*"};
      break;
    }
  }
  report.set("eta_into_units", into_units);
  if (!into_units.pass) return report;

  // Additivity on generators x^j e_i is enough for a map between finite groups.
  Verdict additive;
  const Field& f = from.field();
  for (std::size_t i = 0; i < from.dimension() && additive.pass; ++i) {
    std::uint32_t place = 1;
    for (std::uint32_t j = 0; j < f.degree() && additive.pass; ++j, place *= f.characteristic()) {
      const VectorCode g = place * from.unit(i);
      for (VectorCode x = 0; x < from.size(); ++x) {
        if (spec.theta[from.add(x, g)] != to.add(spec.theta[x], spec.theta[g])) {
          additive = {false, {x, g}, "theta(x + g) != theta(x) + theta(g)"};
          break;
        }
      }
    }
  }
  report.set("theta_additive", additive);

  Verdict multiplicative;
  const Field& f2 = to.field();
  for (std::uint32_t a = 1; a < k1 && multiplicative.pass; ++a) {
    for (std::uint32_t b = 1; b < k1; ++b) {
      const auto ab = f.mul({a}, {b}).index;
      if (spec.eta[ab] != f2.mul({spec.eta[a]}, {spec.eta[b]}).index) {
        multiplicative = {false, {a, b}, "eta(ab) != eta(a) eta(b)"};
        break;
      }
    }
  }
  report.set("eta_multiplicative", multiplicative);

  Verdict intertwining;
  for (std::uint32_t a = 1; a < k1 && intertwining.pass; ++a) {
    for (VectorCode x = 0; x < from.size(); ++x) {
      if (spec.theta[from.scale({a}, x)] != to.scale({spec.eta[a]}, spec.theta[x])) {
        intertwining = {false, {a, x}, "theta(a x) != eta(a) theta(x)"};
        break;
      }
    }
  }
  report.set("intertwining", intertwining);
  return report;
}

}  // namespace nearvec
