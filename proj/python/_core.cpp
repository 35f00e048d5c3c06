// Thin pybind11 layer. Everything crosses the boundary as JSON text so the
// Python side sees the same schemas as the CLI's --json output.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "nearvec/json_io.hpp"

namespace py = pybind11;
using namespace nearvec;

namespace {

Limits limits_for(std::uint64_t max_size) { return max_size ? Limits{}.capped(max_size) : Limits{}; }

TwistedSpace space_of(const std::string& config, std::uint64_t max_size) {
  return make_space(parse_space_config(Json::parse(config)), limits_for(max_size));
}

std::string info(const std::string& config, std::uint64_t max_size) {
  const Json cfg = Json::parse(config);
  const Limits limits = limits_for(max_size);
  if (is_raw_config(cfg)) {
    const RawSpace raw = parse_raw_space(cfg);
    const auto report = axiom_check(raw, limits);
    return Json{{"description", raw.description}, {"order", raw.order},
                {"certified", certified(report)}, {"axioms", to_json(report)}}
        .dump();
  }
  const TwistedSpace s = make_space(parse_space_config(cfg), limits);
  const auto cert = is_regular(s, limits);
  Json j;
  j["field"] = s.field().name();
  j["size"] = s.size();
  j["exponents"] = s.exponents();
  j["classes"] = s.classes();
  j["regular"] = cert.regular;
  j["regularity_witness"] = cert.witness ? Json::array({vector_to_json(s, cert.witness->first),
                                                       vector_to_json(s, cert.witness->second)})
                                         : Json(nullptr);
  j["component_count"] = s.classes().size();
  return j.dump();
}

std::string quasi_kernel(const std::string& config, std::uint64_t max_size) {
  const TwistedSpace s = space_of(config, max_size);
  const auto brute = quasi_kernel_bruteforce(s, limits_for(max_size));
  Json j = to_json(s, brute);
  j["oracles_agree"] = brute.members == quasi_kernel_closed_form(s).members;
  return j.dump();
}

std::string decomposition(const std::string& config, std::uint64_t max_size) {
  const TwistedSpace s = space_of(config, max_size);
  return to_json(s, decompose(s, limits_for(max_size))).dump();
}

std::string span(const std::string& config, const std::string& vectors, std::uint64_t max_size) {
  const TwistedSpace s = space_of(config, max_size);
  std::vector<VectorCode> gens;
  for (const auto& v : Json::parse(vectors)) gens.push_back(vector_from_json(s, v));
  return to_json(s, span_of(s, gens, limits_for(max_size))).dump();
}

std::string dim(const std::string& config, const std::string& vector, std::uint64_t max_size) {
  const TwistedSpace s = space_of(config, max_size);
  return to_json(s, dim_of_vector(s, vector_from_json(s, Json::parse(vector)), limits_for(max_size))).dump();
}

std::string verify(const std::string& config, const std::string& suite, std::uint64_t seed,
                   std::uint64_t max_size) {
  VerifyOptions opts;
  opts.seed = seed;
  opts.limits = limits_for(max_size);
  const Json cfg = Json::parse(config);
  Json j = is_raw_config(cfg) ? to_json(run_verify(parse_raw_space(cfg), suite, opts))
                              : to_json(run_verify(make_space(parse_space_config(cfg), opts.limits), suite, opts));
  j["seed"] = seed;
  return j.dump();
}

std::string hom(const std::string& from, const std::string& to, const std::string& spec) {
  const TwistedSpace a = space_of(from, 0);
  const TwistedSpace b = space_of(to, 0);
  const auto report = hom_check(a, b, parse_hom_spec(Json::parse(spec), a, b));
  return Json{{"homomorphism", is_homomorphism(report)}, {"checks", to_json(report)}}.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "near-vector spaces over finite fields";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    } catch (const Json::exception& e) {
      PyErr_SetString(error.ptr(), (std::string("InvalidArgument: ") + e.what()).c_str());
    }
  });

  m.def("info", &info, py::arg("config"), py::arg("max_size") = 0);
  m.def("quasi_kernel", &quasi_kernel, py::arg("config"), py::arg("max_size") = 0);
  m.def("decompose", &decomposition, py::arg("config"), py::arg("max_size") = 0);
  m.def("span", &span, py::arg("config"), py::arg("vectors"), py::arg("max_size") = 0);
  m.def("dim", &dim, py::arg("config"), py::arg("vector"), py::arg("max_size") = 0);
  m.def("verify", &verify, py::arg("config"), py::arg("suite") = "all",
        py::arg("seed") = VerifyOptions{}.seed, py::arg("max_size") = 0);
  m.def("hom", &hom, py::arg("source"), py::arg("target"), py::arg("spec"));
  m.attr("suites") = std::vector<std::string>(kSuites.begin(), kSuites.end());
}
