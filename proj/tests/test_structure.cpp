#include <doctest.h>

#include <string>

#include "nearvec/structure.hpp"
#include "nearvec/span.hpp"
#include "nearvec/vector_set.hpp"
#include "oracle.hpp"

using namespace nearvec;
using oracle::code;

namespace {

TwistedSpace space(std::uint32_t p, std::vector<std::uint64_t> q) {
  return TwistedSpace::make(Field::make(p, 1), q);
}

// +_v by the definition: gamma with gamma v = alpha v + beta v, found by scan.
std::uint32_t induced_sum(const TwistedSpace& s, VectorCode v, std::uint32_t a, std::uint32_t b) {
  const VectorCode target = s.add(s.scale({a}, v), s.scale({b}, v));
  for (std::uint32_t g = 0; g < s.scalar_count(); ++g)
    if (s.scale({g}, v) == target) return g;
  return ~0u;
}

}  // namespace

TEST_CASE("induced additions") {
  const TwistedSpace s = space(11, {3, 7, 3});
  const InducedAddition a = induced_addition(s, code(s, {3, 0, 4}));
  const InducedAddition b = induced_addition(s, code(s, {0, 5, 0}));
  CHECK(a(1, 1) == 7);
  CHECK(b(1, 1) == 8);
  for (std::uint32_t x = 0; x < 11; ++x) {
    CHECK(a(x, 0) == x);
    for (std::uint32_t y = 0; y < 11; ++y) {
      CHECK(a(x, y) == induced_sum(s, code(s, {3, 0, 4}), x, y));
      CHECK(b(x, y) == induced_sum(s, code(s, {0, 5, 0}), x, y));
    }
  }
  CHECK_THROWS_AS(induced_addition(s, code(s, {1, 1, 0})), Error);
  CHECK_THROWS_AS(induced_addition(s, 0), Error);

  const TwistedSpace plain = space(7, {1, 1});
  const InducedAddition c = induced_addition(plain, code(plain, {2, 3}));
  for (std::uint32_t x = 0; x < 7; ++x)
    for (std::uint32_t y = 0; y < 7; ++y) CHECK(c(x, y) == (x + y) % 7);
}

TEST_CASE("kernels") {
  const TwistedSpace s = space(11, {3, 7, 3});
  const VectorSet r = kernel_Ru(s, code(s, {3, 0, 4}));
  CHECK(r == coordinate_subspace(s, {0, 2}));
  CHECK(r.contains(code(s, {3, 0, 4})));
  CHECK(kernel_Ru(s, code(s, {0, 1, 0})) == coordinate_subspace(s, {1}));
  const TwistedSpace plain = space(5, {1, 1});
  CHECK(kernel_Ru(plain, code(plain, {1, 2})).size() == 25);
}

TEST_CASE("compatibility and regularity") {
  const TwistedSpace s = space(11, {3, 7, 3});
  const auto lam = are_compatible(s, code(s, {1, 0, 0}), code(s, {0, 0, 1}));
  REQUIRE(lam.has_value());
  const auto q = quasi_kernel_closed_form(s);
  CHECK(q.contains(s.add(code(s, {1, 0, 0}), s.scale(*lam, code(s, {0, 0, 1})))));
  CHECK_FALSE(are_compatible(s, code(s, {1, 0, 0}), code(s, {0, 1, 0})).has_value());
  CHECK(are_compatible(s, code(s, {2, 0, 5}), code(s, {2, 0, 5})).has_value());

  const auto cert = is_regular(s);
  CHECK_FALSE(cert.regular);
  REQUIRE(cert.witness.has_value());
  CHECK_FALSE(are_compatible(s, cert.witness->first, cert.witness->second).has_value());
  // the pair straddles the two classes
  CHECK(s.class_of(s.support(cert.witness->first)[0]) != s.class_of(s.support(cert.witness->second)[0]));

  CHECK_FALSE(is_regular(space(5, {1, 3})).regular);
  CHECK(is_regular(space(11, {3})).regular);
  CHECK(is_regular(space(11, {3, 3})).regular);
  CHECK(is_regular(TwistedSpace::make(Field::make(3, 2), {1, 3})).regular);
}

TEST_CASE("key lemma") {
  const TwistedSpace plain = space(5, {1, 1});
  CHECK(key_lemma_verify(plain, {plain.unit(0), plain.unit(1)}, code(plain, {1, 1}), code(plain, {2, 1})));

  const TwistedSpace s = space(11, {3, 7, 3});
  const std::vector<VectorCode> basis{s.unit(0), s.unit(2)};
  CHECK(key_lemma_verify(s, basis, code(s, {1, 0, 1}), code(s, {2, 0, 5})));
  const auto a = induced_addition(s, code(s, {1, 0, 1}));
  CHECK(a.table == induced_addition(s, s.unit(0)).table);
  CHECK(a.table == induced_addition(s, s.unit(2)).table);

  try {
    key_lemma_verify(s, {s.unit(0), s.unit(1)}, code(s, {1, 1, 0}), code(s, {1, 1, 0}));
    FAIL("hypothesis accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisUnmet);
  }

  AdditionAtlas atlas(s);
  KeyLemmaChecker checker(atlas, {s.unit(0), s.unit(1), s.unit(2)});
  std::size_t holds = 0;
  for (auto v : atlas.quasi_kernel().members.codes()) {
    if (!v) continue;
    std::string why;
    const auto out = checker.check(v, code(s, {1, 0, 1}), &why);
    CHECK(out != KeyLemmaChecker::Outcome::Fails);
    holds += out == KeyLemmaChecker::Outcome::Holds;
  }
  CHECK(holds > 0);
}

TEST_CASE("equivalence theorem") {
  const char* labels[] = {"1", "2", "1'", "2'", "3", "4", "5", "6", "7"};
  SUBCASE("classical GF(7)^3") {
    const auto r = vstheorem_check(space(7, {1, 1, 1}));
    for (auto l : labels) CHECK(r.at(l).holds);
    CHECK(r.consistent());
    CHECK(r.distinct_additions == 1);
  }
  SUBCASE("twisted single class") {
    const auto r = vstheorem_check(space(11, {3, 3}));
    for (auto l : labels) CHECK(r.at(l).holds);
    CHECK(r.consistent());
  }
  SUBCASE("two classes") {
    const auto r = vstheorem_check(space(11, {3, 7, 3}));
    for (auto l : labels) {
      CAPTURE(l);
      CHECK_FALSE(r.at(l).holds);
      CHECK((!r.at(l).witness.empty() || !r.at(l).detail.empty()));
    }
    CHECK(r.consistent());
    CHECK(r.distinct_additions == 2);
  }
}

TEST_CASE("decomposition") {
  const TwistedSpace s = space(11, {3, 7, 3});
  const Decomposition d = decompose(s);
  REQUIRE(d.components.size() == 2);
  CHECK(d.components[0].members == coordinate_subspace(s, {0, 2}));
  CHECK(d.components[1].members == coordinate_subspace(s, {1}));
  CHECK(d.components[0].members.size() == 121);
  CHECK(d.components[1].members.size() == 11);
  CHECK(d.basis_assignment == std::vector<std::size_t>{0, 1, 0});

  const auto parts = d.split(s, code(s, {2, 5, 6}));
  CHECK(parts == std::vector<VectorCode>{code(s, {2, 0, 6}), code(s, {0, 5, 0})});

  AdditionAtlas atlas(s);
  const AxiomReport checks = verify_decomposition(s, d, atlas);
  CHECK_FALSE(checks.first_failure().has_value());
  CHECK(checks.contains("maximality"));

  const auto w = maximality_witness(s, d, 0, code(s, {0, 1, 0}), atlas);
  CHECK(check_maximality_witness(s, atlas, w));
  const auto w2 = maximality_witness(s, d, 1, code(s, {1, 1, 0}), atlas);
  CHECK(check_maximality_witness(s, atlas, w2));

  const Decomposition one = decompose(space(5, {1, 1}));
  REQUIRE(one.components.size() == 1);
  CHECK(one.components[0].members.size() == 25);

  // Q(V)* is split disjointly
  std::size_t total = 0;
  for (const auto& c : d.components) total += c.members.size() - 1;
  CHECK(total == atlas.quasi_kernel().members.size() - 1);
}

TEST_CASE("atlas") {
  const TwistedSpace s = space(11, {1, 3, 7});
  AdditionAtlas atlas(s);
  CHECK(atlas.id_of(s.unit(0)) != atlas.id_of(s.unit(1)));
  CHECK(atlas.id_of(s.unit(1)) != atlas.id_of(s.unit(2)));
  CHECK(atlas.table_count() == 3);
  CHECK_THROWS_AS(atlas.id_of(0), Error);
  CHECK_THROWS_AS(atlas.id_of(code(s, {1, 1, 0})), Error);
}
