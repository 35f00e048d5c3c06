#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "nearvec/json_io.hpp"

using namespace nearvec;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;

struct Options {
  std::string config;
  std::vector<std::string> args;
  bool json = false;
  std::uint64_t seed = VerifyOptions{}.seed;
  std::uint64_t max_size = 0;

  Limits limits() const { return max_size ? Limits{}.capped(max_size) : Limits{}; }
};

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, path + ": " + e.what());
  }
}

Json parse_inline(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, "cannot parse '" + text + "' as JSON");
  }
}

std::string join(const std::vector<std::size_t>& xs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << "}";
  return os.str();
}

std::string text(const TwistedSpace& s, VectorCode v) { return vector_to_json(s, v).dump(); }

void emit(const Options& o, const Json& j, const std::string& plain) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << plain;
  }
}

TwistedSpace load_space(const Options& o) {
  const Json j = load_json(o.config);
  if (is_raw_config(j)) {
    throw Error(ErrorKind::InvalidArgument, "this command needs a twisted-space config");
  }
  return make_space(parse_space_config(j), o.limits());
}

bool classical(const TwistedSpace& s) {
  if (s.classes().size() != 1) return false;
  const Field& f = s.field();
  std::uint64_t t = 1;
  for (std::uint32_t l = 0; l < f.degree(); ++l) {
    if (s.exponents()[0] % f.mult_order() == t % f.mult_order()) return true;
    t *= f.characteristic();
  }
  return false;
}

int cmd_info(const Options& o) {
  const Json cfg = load_json(o.config);
  if (is_raw_config(cfg)) {
    const RawSpace raw = parse_raw_space(cfg);
    const auto report = axiom_check(raw, o.limits());
    const bool ok = certified(report);
    std::ostringstream os;
    os << "explicit table: " << raw.description << "\n"
       << "carrier size: " << raw.order << ", scalars: " << raw.scalars.size() << "\n"
       << "near-vector space: " << (ok ? "yes" : "no, " + *report.first_failure(kSpaceAxioms)) << "\n";
    emit(o, Json{{"description", raw.description}, {"order", raw.order},
                 {"scalar_count", raw.scalars.size()}, {"certified", ok}, {"axioms", to_json(report)}},
         os.str());
    return kOk;
  }
  const TwistedSpace s = make_space(parse_space_config(cfg), o.limits());
  const Field& f = s.field();
  const auto cert = is_regular(s, o.limits());
  const std::size_t comps = s.classes().size();
  std::string summary;
  if (cert.regular) {
    summary = classical(s) ? "regular (classical vector space)" : "regular";
  } else {
    summary = "non-regular, " + std::to_string(comps) + " components";
  }
  std::ostringstream os;
  os << "space: " << s.describe() << "\n"
     << "field: " << f.name() << " (order " << f.order() << ", modulus";
  for (auto c : f.modulus()) os << " " << c;
  os << ", primitive element " << f.primitive_element().index << ")\n"
     << "size: " << s.size() << "\n"
     << "exponent classes:";
  for (const auto& c : s.classes()) os << " " << join(c);
  os << "\n";
  if (cert.witness) {
    os << "incompatible pair: " << text(s, cert.witness->first) << " " << text(s, cert.witness->second) << "\n";
  }
  os << summary << "\n";

  Json j;
  j["config"] = to_json(parse_space_config(cfg));
  j["field"] = Json{{"name", f.name()}, {"order", f.order()}, {"modulus", f.modulus()},
                    {"primitive_element", f.coeffs(f.primitive_element())}};
  j["size"] = s.size();
  j["exponents"] = s.exponents();
  j["classes"] = s.classes();
  j["regular"] = cert.regular;
  j["regularity_witness"] = cert.witness ? Json::array({vector_to_json(s, cert.witness->first),
                                                       vector_to_json(s, cert.witness->second)})
                                         : Json(nullptr);
  j["component_count"] = comps;
  j["summary"] = summary;
  emit(o, j, os.str());
  return kOk;
}

int cmd_qk(const Options& o) {
  const TwistedSpace s = load_space(o);
  const auto brute = quasi_kernel_bruteforce(s, o.limits());
  const auto closed = quasi_kernel_closed_form(s);
  const bool agree = brute.members == closed.members && brute.supports == closed.supports;
  std::ostringstream os;
  os << "Q(V) of " << s.describe() << ": " << brute.members.size() << " members\n"
     << "supports:";
  for (const auto& c : brute.supports) os << " " << join(c);
  os << "\nbrute force and closed form agree: " << (agree ? "yes" : "NO") << "\n";
  if (brute.members.size() <= kMemberThreshold) {
    for (auto v : brute.members.codes()) os << "  " << text(s, v) << "\n";
  }
  Json j = to_json(s, brute);
  j["oracles_agree"] = agree;
  emit(o, j, os.str());
  return agree ? kOk : kFailed;
}

int cmd_decompose(const Options& o) {
  const TwistedSpace s = load_space(o);
  const auto d = decompose(s, o.limits());
  AdditionAtlas atlas(s, o.limits());
  const auto checks = verify_decomposition(s, d, atlas);
  std::ostringstream os;
  os << s.describe() << ": " << d.components.size() << " regular component"
     << (d.components.size() == 1 ? "" : "s") << "\n";
  for (std::size_t j = 0; j < d.components.size(); ++j) {
    const auto& c = d.components[j];
    os << "  component " << j << ": support " << join(c.support) << ", " << c.members.size()
       << " members, 1 +_v 1 = " << c.addition(1, 1) << " for v = " << text(s, c.addition.base) << "\n";
  }
  for (const auto& [name, v] : checks.entries()) {
    os << "  " << (v.pass ? "ok   " : "FAIL ") << name << (v.detail.empty() ? "" : ": " + v.detail) << "\n";
  }
  Json j = to_json(s, d);
  j["checks"] = to_json(checks);
  emit(o, j, os.str());
  return checks.first_failure() ? kFailed : kOk;
}

int cmd_span(const Options& o) {
  const TwistedSpace s = load_space(o);
  std::vector<VectorCode> gens;
  for (const auto& a : o.args) gens.push_back(vector_from_json(s, parse_inline(a)));
  const auto d = span_of(s, gens, o.limits());
  std::ostringstream os;
  os << "span of " << gens.size() << " vector" << (gens.size() == 1 ? "" : "s") << ": dim " << d.dim
     << ", " << d.member_count << " members\n"
     << "generators:";
  for (auto g : d.generators) os << " " << text(s, g);
  os << "\ncomponent supports:";
  for (const auto& c : d.component_supports) os << " " << join(c);
  os << "\n";
  emit(o, to_json(s, d), os.str());
  return kOk;
}

int cmd_dim(const Options& o) {
  const TwistedSpace s = load_space(o);
  if (o.args.size() != 1) throw Error(ErrorKind::InvalidArgument, "dim takes exactly one vector");
  const VectorCode v = vector_from_json(s, parse_inline(o.args[0]));
  const auto r = dim_of_vector(s, v, o.limits());
  std::ostringstream os;
  os << "dim " << text(s, v) << " = " << r.value << "\n";
  for (const auto& [a, u] : r.witness) os << "  + " << a.index << " * " << text(s, u) << "\n";
  emit(o, to_json(s, r), os.str());
  return kOk;
}

int report_suites(const Options& o, const std::vector<SuiteResult>& results,
                  const std::string& header) {
  std::ostringstream os;
  os << header << "\n";
  std::string first_failure;
  for (const auto& r : results) {
    for (const auto& [name, v] : r.checks.entries()) {
      os << (v.pass ? "  ok   " : "  FAIL ") << r.name << "/" << name
         << (v.detail.empty() ? "" : ": " + v.detail) << "\n";
      if (!v.pass && first_failure.empty()) first_failure = r.name + "/" + name;
    }
  }
  os << (first_failure.empty() ? "all checks passed" : "first failure: " + first_failure) << "\n";
  Json j = to_json(results);
  j["seed"] = o.seed;
  j["first_failure"] = first_failure.empty() ? Json(nullptr) : Json(first_failure);
  emit(o, j, os.str());
  return first_failure.empty() ? kOk : kFailed;
}

int cmd_verify(const Options& o) {
  if (o.args.size() > 1) throw Error(ErrorKind::InvalidArgument, "verify takes at most one suite");
  const std::string suite = o.args.empty() ? "all" : o.args[0];
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.limits = o.limits();
  const Json cfg = load_json(o.config);
  if (is_raw_config(cfg)) {
    const RawSpace raw = parse_raw_space(cfg);
    return report_suites(o, run_verify(raw, suite, vo), "verify " + suite + ": " + raw.description);
  }
  const TwistedSpace s = make_space(parse_space_config(cfg), vo.limits);
  return report_suites(o, run_verify(s, suite, vo), "verify " + suite + ": " + s.describe());
}

int cmd_hom(const Options& o) {
  if (o.args.size() != 2) {
    throw Error(ErrorKind::InvalidArgument, "hom takes a target config and a map spec");
  }
  const TwistedSpace from = load_space(o);
  Options target = o;
  target.config = o.args[0];
  const TwistedSpace to = load_space(target);
  const auto spec = parse_hom_spec(load_json(o.args[1]), from, to);
  const auto report = hom_check(from, to, spec);
  const bool ok = is_homomorphism(report);
  std::ostringstream os;
  os << from.describe() << " -> " << to.describe() << ": "
     << (ok ? "homomorphism" : "not a homomorphism") << "\n";
  for (const auto& [name, v] : report.entries()) {
    os << (v.pass ? "  ok   " : "  FAIL ") << name << (v.detail.empty() ? "" : ": " + v.detail) << "\n";
  }
  Json j{{"homomorphism", ok}, {"checks", to_json(report)}};
  emit(o, j, os.str());
  return ok ? kOk : kFailed;
}

int report_error(const Options& o, const Error& e) {
  Json j{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (const auto* nc = dynamic_cast<const NotCoprimeError*>(&e)) {
    Json w;
    w["coordinate"] = nc->coordinate;
    w["exponent"] = nc->exponent;
    w["mult_order"] = nc->mult_order;
    w["gcd"] = nc->gcd;
    w["alpha"] = nc->alpha.index;
    w["beta"] = nc->beta.index;
    Json x = Json::array();
    for (auto c : nc->witness.coords) x.push_back(c.index);
    w["vector"] = x;
    j["witness"] = w;
  }
  if (o.json) {
    std::cout << Json{{"error", j}}.dump(2) << "\n";
  } else {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
  }
  return e.kind() == ErrorKind::ConstructionFailed ? kFailed : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite near-vector spaces over GF(p^r) with twisted scalar action"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&);
    const char* args_help;
  };
  const Command commands[] = {
      {"info", "field, size, exponent classes, regularity", cmd_info, nullptr},
      {"qk", "quasi-kernel by brute force and closed form", cmd_qk, nullptr},
      {"decompose", "regular decomposition with invariant checks", cmd_decompose, nullptr},
      {"span", "span of vectors given as JSON arrays", cmd_span, "vectors, e.g. [2,5,6]"},
      {"dim", "dimension of one vector", cmd_dim, "vector, e.g. [2,5,6]"},
      {"verify", "run verification suites (axioms, vstheorem, keylemma, span-oracle, decomposition, all)",
       cmd_verify, "suite (default all)"},
      {"hom", "check a homomorphism (theta, eta) between two spaces", cmd_hom,
       "target config, map spec"},
  };
  int (*selected)(const Options&) = nullptr;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("config", o.config, "space config JSON file")->required();
    if (c.args_help) {
      sub->allow_extras();
      sub->footer(std::string("arguments: ") + c.args_help);
    }
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_option("--seed", o.seed, "seed for sampled checks");
    sub->add_option("--max-size", o.max_size, "lower the enumeration bounds");
    sub->callback([&selected, &o, sub, run = c.run] {
      selected = run;
      o.args = sub->remaining();
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    return selected(o);
  } catch (const Error& e) {
    return report_error(o, e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
