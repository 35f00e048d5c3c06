#include <doctest.h>

#include "nearvec/near_field.hpp"
#include "nearvec/structure.hpp"
#include "oracle.hpp"

using namespace nearvec;

TEST_CASE("fields are near-fields") {
  for (auto [p, r] : {std::pair{2u, 1u}, {5u, 1u}, {7u, 1u}, {3u, 2u}, {2u, 3u}}) {
    const NearField nf = nf_from_field(Field::make(p, r));
    const AxiomReport report = nf_check_axioms(nf);
    CAPTURE(nf.description);
    CHECK(is_near_field(report));
    CHECK(is_division_ring(report));
    CHECK(nf_distributive_elements(nf).size() == nf.order);
  }
  CHECK(nf_from_field(Field::make(3, 2)).order == 9);
}

TEST_CASE("Dickson near-field of order 9") {
  const NearField d = nf_dickson9();
  const AxiomReport report = nf_check_axioms(d);
  CHECK(is_near_field(report));
  CHECK_FALSE(is_division_ring(report));
  CHECK_FALSE(report.at("right_distributive").pass);

  // independent witness scan for (a + b) c != a c + b c
  bool found = false;
  for (std::uint32_t a = 0; a < 9 && !found; ++a)
    for (std::uint32_t b = 0; b < 9 && !found; ++b)
      for (std::uint32_t c = 0; c < 9 && !found; ++c)
        found = d.mul(d.add(a, b), c) != d.add(d.mul(a, c), d.mul(b, c));
  CHECK(found);

  CHECK(nf_distributive_elements(d) == std::vector<std::uint32_t>{0, 1, 2});
  CHECK_FALSE(nf_isomorphic(nf_from_field(Field::make(3, 2)), d).has_value());
  const auto self = nf_isomorphic(d, d);
  REQUIRE(self.has_value());
  CHECK(nf_is_isomorphism(d, d, *self));
}

TEST_CASE("a table without inverses is rejected") {
  NearField n;
  n.order = 3;
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b) {
      n.add_table.push_back(std::max(a, b));
      n.mul_table.push_back((a * b) % 3);
    }
  const AxiomReport report = nf_check_axioms(n);
  CHECK_FALSE(report.at("add_inverse").pass);
  CHECK_FALSE(report.at("add_inverse").counterexample.empty());
  CHECK_FALSE(is_near_field(report));
}

TEST_CASE("involutions") {
  CHECK(nf_involutions(nf_from_field(Field::make(7, 1))) == std::vector<std::uint32_t>{6});
  CHECK(nf_involutions(nf_from_field(Field::make(2, 3))).empty());
  CHECK(nf_involutions(nf_dickson9()).size() == 1);
}

TEST_CASE("induced near-field is GF(11) via the cube map") {
  const TwistedSpace s = TwistedSpace::make(Field::make(11, 1), {3, 7, 3});
  const NearField induced = induced_nearfield(s, oracle::code(s, {3, 0, 4}));
  const NearField f = nf_from_field(Field::make(11, 1));
  CHECK(is_division_ring(nf_check_axioms(induced)));
  CHECK(nf_isomorphic(induced, f).has_value());
  std::vector<std::uint32_t> cube(11);
  for (std::uint32_t a = 0; a < 11; ++a) cube[a] = (a * a * a) % 11;
  CHECK(nf_is_isomorphism(induced, f, cube));
  std::vector<std::uint32_t> id(11);
  for (std::uint32_t a = 0; a < 11; ++a) id[a] = a;
  CHECK_FALSE(nf_is_isomorphism(induced, f, id));
}
