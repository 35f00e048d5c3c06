#include "nearvec/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "nearvec/error.hpp"
#include "nearvec/span.hpp"
#include "nearvec/structure.hpp"

namespace nearvec {

namespace {

std::vector<VectorCode> nonzero(const VectorSet& s) {
  auto codes = s.codes();
  codes.erase(std::remove(codes.begin(), codes.end(), VectorCode{0}), codes.end());
  return codes;
}

std::vector<VectorCode> standard_basis(const TwistedSpace& s) {
  std::vector<VectorCode> out;
  for (std::size_t i = 0; i < s.dimension(); ++i) out.push_back(s.unit(i));
  return out;
}

// Runs `body`, turning a library error into a failed verdict.
template <class F>
Verdict guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return {false, {}, std::string(to_string(e.kind())) + ": " + e.what()};
  }
}

}  // namespace

Verdict order_two_remark(const TwistedSpace& space) {
  const Field& f = space.field();
  const auto involutions = nf_involutions(nf_from_field(f));
  if (f.characteristic() == 2) {
    if (!involutions.empty()) return {false, {involutions.front()}, "element of order 2 in char 2"};
    return {true, {}, "no element of order 2 (characteristic 2)"};
  }
  if (involutions.size() != 1) {
    return {false, {involutions.size()}, "expected exactly one element of order 2"};
  }
  const FieldElement t{involutions.front()};
  for (VectorCode v = 0; v < space.size(); ++v) {
    if (space.scale(t, v) != space.neg(v)) return {false, {t.index, v}, "order-2 element is not -id"};
  }
  return {true, {t.index}, "unique element of order 2 acts as -id"};
}

SuiteResult suite_axioms(const TwistedSpace& space, const VerifyOptions& opts) {
  SuiteResult out{"axioms", {}};
  const auto report = axiom_check(space, opts.limits);
  for (const auto& [name, verdict] : report.entries()) out.checks.set(name, verdict);
  out.checks.set("quasi_kernel_oracles", guarded([&]() -> Verdict {
    const auto brute = quasi_kernel_bruteforce(space, opts.limits);
    const auto closed = quasi_kernel_closed_form(space);
    if (!(brute.members == closed.members)) {
      for (VectorCode v = 0; v < space.size(); ++v) {
        if (brute.contains(v) != closed.contains(v)) return {false, {v}, "oracles disagree"};
      }
    }
    if (brute.supports != closed.supports) return {false, {}, "supports disagree"};
    return {true, {brute.members.size()}, "|Q(V)| = " + std::to_string(brute.members.size())};
  }));
  out.checks.set("order_two_remark", order_two_remark(space));
  return out;
}

SuiteResult suite_vstheorem(const TwistedSpace& space, const VerifyOptions& opts) {
  SuiteResult out{"vstheorem", {}};
  AdditionAtlas atlas(space, opts.limits);
  const auto qstar = nonzero(atlas.quasi_kernel().members);

  out.checks.set("conditions_agree", guarded([&]() -> Verdict {
    const auto rep = vstheorem_check(atlas, opts.limits);
    std::ostringstream os;
    for (const auto& [label, c] : rep.conditions) os << label << "=" << (c.holds ? "T" : "F") << " ";
    return {rep.consistent(), {}, os.str()};
  }));
  out.checks.set("regular_iff_one_class", guarded([&]() -> Verdict {
    const auto cert = is_regular(space, atlas.quasi_kernel());
    if (cert.regular != (space.classes().size() == 1)) {
      return {false, {}, "regularity disagrees with the class count"};
    }
    if (cert.witness && are_compatible(space, atlas.quasi_kernel(), cert.witness->first,
                                       cert.witness->second)) {
      return {false, {cert.witness->first, cert.witness->second}, "witness pair is compatible"};
    }
    return {true, {}, cert.regular ? "regular" : "not regular"};
  }));
  out.checks.set("induced_closed_form", guarded([&]() -> Verdict {
    for (const auto& c : space.classes()) {
      const auto add = induced_addition(space, space.unit(c.front()));
      const auto nf = induced_nearfield(space, space.unit(c.front()));
      if (!is_division_ring(nf_check_axioms(nf))) {
        return {false, {space.unit(c.front())}, "induced structure is not a division ring"};
      }
      if (add.table != atlas.table(atlas.id_of(space.unit(c.front())))) {
        return {false, {space.unit(c.front())}, "tables differ"};
      }
    }
    return {true, {}, ""};
  }));
  out.checks.set("plus_multiples", guarded([&]() -> Verdict {
    for (auto v : qstar) {
      for (std::uint32_t t = 1; t < space.scalar_count(); ++t) {
        if (atlas.id_of(space.scale({t}, v)) != atlas.id_of(v)) return {false, {v, t}, "+_v != +_(tv)"};
      }
    }
    return {true, {}, ""};
  }));
  out.checks.set("addition_iff_same_class", guarded([&]() -> Verdict {
    std::map<std::size_t, std::uint32_t> by_class;
    std::map<std::uint32_t, std::size_t> by_table;
    for (auto v : qstar) {
      const std::size_t c = space.class_of(space.support(v).front());
      const std::uint32_t id = atlas.id_of(v);
      auto [a, fa] = by_class.emplace(c, id);
      auto [b, fb] = by_table.emplace(id, c);
      if (a->second != id || b->second != c) return {false, {v}, "class and induced addition disagree"};
    }
    return {true, {by_table.size()}, std::to_string(by_table.size()) + " distinct additions"};
  }));
  out.checks.set("kernel_is_component", guarded([&]() -> Verdict {
    for (const auto& c : space.classes()) {
      const VectorCode u = space.unit(c.front());
      const auto kernel = kernel_Ru(space, u, opts.limits);
      const bool full = kernel.size() == space.size();
      if (!(kernel == coordinate_subspace(space, c)) && !full) {
        return {false, {u}, "R_u is not the component of u"};
      }
      if (full != (space.classes().size() == 1)) return {false, {u}, "R_u = V mismatch"};
    }
    return {true, {}, ""};
  }));
  return out;
}

SuiteResult suite_keylemma(const TwistedSpace& space, const VerifyOptions& opts) {
  SuiteResult out{"keylemma", {}};
  out.checks.set("key_lemma", guarded([&]() -> Verdict {
    AdditionAtlas atlas(space, opts.limits);
    KeyLemmaChecker checker(atlas, standard_basis(space), opts.limits);
    const auto qstar = nonzero(atlas.quasi_kernel().members);
    std::size_t checked = 0, applicable = 0;
    auto visit = [&](VectorCode v, VectorCode w) -> std::optional<Verdict> {
      ++checked;
      const auto o = checker.check(v, w);
      if (o == KeyLemmaChecker::Outcome::HypothesisUnmet) return std::nullopt;
      ++applicable;
      if (o == KeyLemmaChecker::Outcome::Fails) return Verdict{false, {v, w}, "conclusion fails"};
      return std::nullopt;
    };
    std::ostringstream os;
    if (qstar.size() <= opts.exhaustive_quasi_kernel) {
      for (auto v : qstar) {
        for (auto w : qstar) {
          if (auto bad = visit(v, w)) return *bad;
        }
      }
      os << "exhaustive: ";
    } else {
      std::mt19937_64 rng(opts.seed);
      std::uniform_int_distribution<std::size_t> pick(0, qstar.size() - 1);
      for (std::size_t t = 0; t < opts.sampled_pairs; ++t) {
        if (auto bad = visit(qstar[pick(rng)], qstar[pick(rng)])) return *bad;
      }
      os << "sampled with seed " << opts.seed << ": ";
    }
    os << checked << " pairs, " << applicable << " meet the hypothesis";
    return {true, {checked, applicable}, os.str()};
  }));
  return out;
}

SuiteResult suite_span(const TwistedSpace& space, const VerifyOptions& opts) {
  SuiteResult out{"span-oracle", {}};
  std::vector<VectorCode> vectors;
  std::string coverage;
  if (space.size() <= opts.exhaustive_vectors) {
    for (VectorCode v = 0; v < space.size(); ++v) vectors.push_back(v);
    coverage = "all " + std::to_string(space.size()) + " vectors";
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<VectorCode> pick(0, space.size() - 1);
    for (std::size_t t = 0; t < opts.sampled_vectors; ++t) vectors.push_back(pick(rng));
    coverage = std::to_string(vectors.size()) + " vectors sampled with seed " + std::to_string(opts.seed);
  }
  const auto d = decompose(space, opts.limits);
  const auto q = quasi_kernel_bruteforce(space, opts.limits);

  out.checks.set("span_equals_closures", guarded([&]() -> Verdict {
    for (auto v : vectors) {
      const auto combos = linear_combinations(space, v, opts.limits);
      const auto span = span_of(space, d, {v});
      const auto closure = naive_closure(space, {v});
      if (!(span.members == combos)) return {false, {v}, "span(v) != L(v)"};
      if (!(span.members == closure)) return {false, {v}, "span(v) != closure oracle"};
    }
    return {true, {vectors.size()}, coverage};
  }));
  out.checks.set("dimension_routes", guarded([&]() -> Verdict {
    const auto table = minimal_representations(space, q);
    for (auto v : vectors) {
      if (table.length[v] != dim_by_components(space, v)) {
        return {false, {v, table.length[v]}, "minimal representation length differs"};
      }
      if (span_of(space, d, {v}).dim != table.length[v]) return {false, {v}, "span dim differs"};
    }
    return {true, {vectors.size()}, coverage};
  }));
  out.checks.set("basis_size", guarded([&]() -> Verdict {
    const auto fwd = extract_basis(space, false, opts.limits);
    const auto rev = extract_basis(space, true, opts.limits);
    if (fwd.size() != space.dimension() || rev.size() != space.dimension()) {
      return {false, {fwd.size(), rev.size()}, "basis size differs from n"};
    }
    return {true, {fwd.size()}, ""};
  }));
  out.checks.set("canonical_coordinates", guarded([&]() -> Verdict {
    for (bool reversed : {false, true}) {
      const auto basis = reversed ? extract_basis(space, true, opts.limits) : standard_basis(space);
      const auto map = canonical_coordinates(space, basis, opts.limits);
      const auto report = verify_coordinates(space, map);
      if (auto bad = report.first_failure()) return report.at(*bad);
    }
    return {true, {}, "standard and extracted bases"};
  }));
  out.checks.set("span_witnesses", guarded([&]() -> Verdict {
    const bool regular = space.classes().size() == 1;
    bool triple = false;
    for (std::size_t j = 0; j < space.dimension(); ++j) {
      std::size_t others = 0;
      for (std::size_t i = 0; i < space.dimension(); ++i) others += space.class_of(i) != space.class_of(j);
      triple = triple || others >= 2;
    }
    try {
      distinct_span_witness(space);
      if (regular) return {false, {}, "distinct-span witness on a regular space"};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::HypothesisUnmet || !regular) throw;
    }
    try {
      intersecting_span_witness(space);
      if (!triple) return {false, {}, "unexpected intersecting-span witness"};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::HypothesisUnmet || triple) throw;
    }
    return {true, {}, regular ? "regular: no witnesses" : "witnesses verified"};
  }));
  return out;
}

SuiteResult suite_decomposition(const TwistedSpace& space, const VerifyOptions& opts) {
  SuiteResult out{"decomposition", {}};
  try {
    AdditionAtlas atlas(space, opts.limits);
    const auto d = decompose(space, opts.limits);
    const auto report = verify_decomposition(space, d, atlas);
    for (const auto& [name, verdict] : report.entries()) out.checks.set(name, verdict);
  } catch (const Error& e) {
    out.checks.set("decompose", {false, {}, std::string(to_string(e.kind())) + ": " + e.what()});
  }
  return out;
}

std::vector<SuiteResult> run_verify(const TwistedSpace& space, std::string_view suite,
                                    const VerifyOptions& opts) {
  using Fn = SuiteResult (*)(const TwistedSpace&, const VerifyOptions&);
  const std::array<Fn, kSuites.size()> fns = {suite_axioms, suite_vstheorem, suite_keylemma,
                                              suite_span, suite_decomposition};
  std::vector<SuiteResult> out;
  for (std::size_t i = 0; i < kSuites.size(); ++i) {
    if (suite == "all" || suite == kSuites[i]) out.push_back(fns[i](space, opts));
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "unknown suite " + std::string(suite));
  return out;
}

std::vector<SuiteResult> run_verify(const RawSpace& space, std::string_view suite,
                                    const VerifyOptions& opts) {
  if (suite != "all" && suite != "axioms") {
    throw Error(ErrorKind::InvalidArgument, "explicit-table spaces support the axioms suite only");
  }
  SuiteResult out{"axioms", {}};
  const auto report = axiom_check(space, opts.limits);
  for (const auto& [name, verdict] : report.entries()) out.checks.set(name, verdict);
  return {out};
}

}  // namespace nearvec
