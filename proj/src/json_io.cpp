#include "nearvec/json_io.hpp"

#include <string>

#include "nearvec/error.hpp"

namespace nearvec {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

template <class F>
auto schema(const char* where, F&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    bad(std::string(where) + ": " + e.what());
  }
}

std::uint64_t nat(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) bad(std::string(what) + " must be a natural number");
  return j.get<std::uint64_t>();
}

Json codes_json(const TwistedSpace& s, const std::vector<VectorCode>& codes) {
  Json out = Json::array();
  for (auto c : codes) out.push_back(vector_to_json(s, c));
  return out;
}

Json members_json(const TwistedSpace& s, const VectorSet& set, std::size_t threshold, Json& into) {
  into["member_count"] = set.size();
  if (set.size() <= threshold) {
    into["members"] = codes_json(s, set.codes());
  } else {
    into["members_elided"] = true;
  }
  return into;
}

std::vector<std::uint64_t> u64s(const Json& j) {
  std::vector<std::uint64_t> out;
  for (const auto& x : j) out.push_back(nat(x, "counterexample entry"));
  return out;
}

}  // namespace

SpaceConfig parse_space_config(const Json& j) {
  return schema("space config", [&] {
    if (!j.is_object()) bad("space config must be a JSON object");
    for (const char* key : {"p", "exponents"}) {
      if (!j.contains(key)) bad(std::string("space config lacks \"") + key + "\"");
    }
    SpaceConfig c;
    c.p = static_cast<std::uint32_t>(nat(j.at("p"), "p"));
    c.r = j.contains("r") ? static_cast<std::uint32_t>(nat(j.at("r"), "r")) : 1;
    if (j.contains("modulus_poly") && !j.at("modulus_poly").is_null()) {
      std::vector<std::uint32_t> m;
      for (const auto& x : j.at("modulus_poly")) m.push_back(static_cast<std::uint32_t>(nat(x, "modulus coefficient")));
      c.modulus = m;
    }
    if (!j.at("exponents").is_array() || j.at("exponents").empty()) bad("exponents must be a nonempty array");
    for (const auto& x : j.at("exponents")) c.exponents.push_back(nat(x, "exponent"));
    return c;
  });
}

Json to_json(const SpaceConfig& c) {
  Json j;
  j["p"] = c.p;
  j["r"] = c.r;
  j["modulus_poly"] = c.modulus ? Json(*c.modulus) : Json(nullptr);
  j["exponents"] = c.exponents;
  return j;
}

TwistedSpace make_space(const SpaceConfig& c, const Limits& limits) {
  return TwistedSpace::make(Field::make(c.p, c.r, c.modulus, limits), c.exponents, limits);
}

bool is_raw_config(const Json& j) { return j.is_object() && j.contains("raw"); }

RawSpace parse_raw_space(const Json& j) {
  return schema("raw space", [&] {
    const Json& r = j.contains("raw") ? j.at("raw") : j;
    RawSpace raw;
    raw.order = static_cast<std::uint32_t>(nat(r.at("order"), "order"));
    if (raw.order == 0) bad("raw carrier must be nonempty");
    if (raw.order > (1u << 16)) throw Error(ErrorKind::TooLarge, "raw carrier too large");
    for (const auto& x : r.at("add_table")) raw.add_table.push_back(static_cast<std::uint32_t>(nat(x, "table entry")));
    for (const auto& map : r.at("scalars")) {
      std::vector<std::uint32_t> m;
      for (const auto& x : map) m.push_back(static_cast<std::uint32_t>(nat(x, "scalar image")));
      raw.scalars.push_back(std::move(m));
    }
    raw.description = r.value("description", std::string("explicit table"));
    if (raw.add_table.size() != static_cast<std::size_t>(raw.order) * raw.order) {
      throw Error(ErrorKind::ShapeMismatch, "add_table must have order^2 entries");
    }
    return raw;
  });
}

Json to_json(const RawSpace& raw) {
  Json r;
  r["order"] = raw.order;
  r["add_table"] = raw.add_table;
  r["scalars"] = raw.scalars;
  r["description"] = raw.description;
  return Json{{"raw", r}};
}

Json vector_to_json(const TwistedSpace& space, VectorCode v) {
  Json out = Json::array();
  const Field& f = space.field();
  for (std::size_t i = 0; i < space.dimension(); ++i) {
    const FieldElement c{space.coord(v, i)};
    if (f.degree() == 1) {
      out.push_back(c.index);
    } else {
      out.push_back(f.coeffs(c));
    }
  }
  return out;
}

VectorCode vector_from_json(const TwistedSpace& space, const Json& j) {
  return schema("vector", [&] {
    if (!j.is_array()) bad("vector must be a JSON array");
    if (j.size() != space.dimension()) {
      throw Error(ErrorKind::ShapeMismatch, "vector has " + std::to_string(j.size()) +
                                                " coordinates, expected " +
                                                std::to_string(space.dimension()));
    }
    const Field& f = space.field();
    Vector v;
    for (const auto& c : j) {
      std::vector<std::uint32_t> coeffs;
      if (c.is_array()) {
        for (const auto& x : c) coeffs.push_back(static_cast<std::uint32_t>(nat(x, "coefficient")));
      } else if (f.degree() == 1) {
        coeffs.push_back(static_cast<std::uint32_t>(nat(c, "coordinate")));
      } else {
        bad("coordinates over GF(p^r), r > 1, are coefficient arrays");
      }
      if (coeffs.size() > f.degree()) throw Error(ErrorKind::ShapeMismatch, "too many coefficients");
      for (auto x : coeffs) {
        if (x >= f.characteristic()) bad("coefficient " + std::to_string(x) + " is not below p");
      }
      v.coords.push_back(f.from_coeffs(coeffs));
    }
    return space.encode(v);
  });
}

Json to_json(const Verdict& v) {
  Json j;
  j["pass"] = v.pass;
  j["counterexample"] = v.counterexample.empty() ? Json(nullptr) : Json(v.counterexample);
  j["detail"] = v.detail;
  return j;
}

Json to_json(const AxiomReport& report) {
  Json j = Json::object();
  for (const auto& [name, v] : report.entries()) j[name] = to_json(v);
  return j;
}

AxiomReport axiom_report_from_json(const Json& j) {
  return schema("axiom report", [&] {
    AxiomReport report;
    for (const auto& [name, v] : j.items()) {
      Verdict verdict;
      verdict.pass = v.at("pass").get<bool>();
      if (!v.at("counterexample").is_null()) verdict.counterexample = u64s(v.at("counterexample"));
      verdict.detail = v.value("detail", std::string());
      report.set(name, verdict);
    }
    return report;
  });
}

Json to_json(const TwistedSpace& space, const QuasiKernel& q, std::size_t threshold) {
  Json j;
  j["supports"] = q.supports;
  members_json(space, q.members, threshold, j);
  return j;
}

Json to_json(const TwistedSpace& space, const SubspaceDescriptor& d, std::size_t threshold) {
  Json j;
  j["generators"] = codes_json(space, d.generators);
  j["dim"] = d.dim;
  j["component_supports"] = d.component_supports;
  j["member_count"] = d.member_count;
  if (d.members.universe() != 0 && d.members.size() <= threshold) {
    j["members"] = codes_json(space, d.members.codes());
  } else {
    j["members_elided"] = true;
  }
  return j;
}

Json to_json(const TwistedSpace& space, const Decomposition& d, std::size_t threshold) {
  Json comps = Json::array();
  for (const auto& c : d.components) {
    Json cj;
    cj["class_id"] = c.class_id;
    cj["support"] = c.support;
    cj["base_vector"] = vector_to_json(space, c.addition.base);
    members_json(space, c.members, threshold, cj);
    comps.push_back(cj);
  }
  Json j;
  j["components"] = comps;
  j["component_count"] = d.components.size();
  j["basis_assignment"] = d.basis_assignment;
  return j;
}

Json to_json(const TwistedSpace& space, const DimResult& d) {
  const Field& f = space.field();
  Json terms = Json::array();
  for (const auto& [a, u] : d.witness) {
    terms.push_back(Json{{"scalar", f.degree() == 1 ? Json(a.index) : Json(f.coeffs(a))},
                         {"vector", vector_to_json(space, u)}});
  }
  return Json{{"dim", d.value}, {"witness", terms}};
}

Json to_json(const EquivalenceReport& report) {
  Json conds = Json::object();
  for (const auto& [label, c] : report.conditions) {
    conds[label] = Json{{"holds", c.holds}, {"witness", c.witness}, {"detail", c.detail}};
  }
  return Json{{"conditions", conds},
              {"consistent", report.consistent()},
              {"distinct_additions", report.distinct_additions}};
}

EquivalenceReport equivalence_report_from_json(const Json& j) {
  return schema("equivalence report", [&] {
    EquivalenceReport r;
    r.distinct_additions = j.at("distinct_additions").get<std::size_t>();
    for (const auto& [label, c] : j.at("conditions").items()) {
      r.conditions.emplace_back(label, ConditionVerdict{c.at("holds").get<bool>(), u64s(c.at("witness")),
                                                        c.at("detail").get<std::string>()});
    }
    return r;
  });
}

Json to_json(const std::vector<SuiteResult>& results) {
  Json suites = Json::object();
  bool all = true;
  for (const auto& r : results) {
    suites[r.name] = Json{{"passed", r.passed()}, {"checks", to_json(r.checks)}};
    all = all && r.passed();
  }
  return Json{{"passed", all}, {"suites", suites}};
}

std::vector<SuiteResult> suite_results_from_json(const Json& j) {
  return schema("suite results", [&] {
    std::vector<SuiteResult> out;
    for (const auto& [name, s] : j.at("suites").items()) {
      out.push_back({name, axiom_report_from_json(s.at("checks"))});
    }
    return out;
  });
}

HomomorphismSpec parse_hom_spec(const Json& j, const TwistedSpace& from, const TwistedSpace& to) {
  return schema("homomorphism spec", [&] {
    HomomorphismSpec spec;
    const Json& theta = j.at("theta");
    if (theta == "identity") {
      if (from.size() != to.size() || from.dimension() != to.dimension()) {
        throw Error(ErrorKind::ShapeMismatch, "identity theta needs matching spaces");
      }
      for (VectorCode v = 0; v < from.size(); ++v) spec.theta.push_back(v);
    } else {
      for (const auto& x : theta) spec.theta.push_back(vector_from_json(to, x));
    }
    const Json& eta = j.at("eta");
    const Field& f = from.field();
    spec.eta.assign(f.order(), 0);
    if (eta == "identity") {
      for (std::uint32_t a = 1; a < f.order(); ++a) spec.eta[a] = a;
    } else if (eta.is_object()) {
      const auto k = eta.at("power").get<std::int64_t>();
      for (std::uint32_t a = 1; a < f.order(); ++a) spec.eta[a] = f.pow({a}, k).index;
    } else {
      if (eta.size() + 1 != f.order()) {
        throw Error(ErrorKind::ShapeMismatch, "eta must list one image per nonzero scalar");
      }
      const Field& f2 = to.field();
      for (std::uint32_t a = 1; a < f.order(); ++a) {
        const Json& x = eta.at(a - 1);
        std::vector<std::uint32_t> coeffs;
        if (x.is_array()) {
          for (const auto& c : x) coeffs.push_back(static_cast<std::uint32_t>(nat(c, "coefficient")));
        } else {
          coeffs.push_back(static_cast<std::uint32_t>(nat(x, "scalar")));
        }
        for (auto c : coeffs) {
          if (c >= f2.characteristic()) bad("eta image outside the target field");
        }
        if (coeffs.size() > f2.degree()) bad("eta image outside the target field");
        spec.eta[a] = f2.from_coeffs(coeffs).index;
      }
    }
    return spec;
  });
}

bool operator==(const Verdict& a, const Verdict& b) {
  return a.pass == b.pass && a.counterexample == b.counterexample && a.detail == b.detail;
}

bool operator==(const AxiomReport& a, const AxiomReport& b) { return a.entries() == b.entries(); }

bool operator==(const ConditionVerdict& a, const ConditionVerdict& b) {
  return a.holds == b.holds && a.witness == b.witness && a.detail == b.detail;
}

bool operator==(const EquivalenceReport& a, const EquivalenceReport& b) {
  return a.distinct_additions == b.distinct_additions && a.conditions == b.conditions;
}

}  // namespace nearvec
