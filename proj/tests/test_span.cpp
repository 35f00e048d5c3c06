#include <doctest.h>

#include "nearvec/span.hpp"
#include "nearvec/structure.hpp"
#include "nearvec/vector_set.hpp"
#include "oracle.hpp"

using namespace nearvec;
using oracle::code;

namespace {

TwistedSpace space(std::uint32_t p, std::vector<std::uint64_t> q) {
  return TwistedSpace::make(Field::make(p, 1), q);
}

VectorSet line(const TwistedSpace& s, VectorCode v) {
  VectorSet out(s.size());
  for (std::uint32_t a = 0; a < s.scalar_count(); ++a) out.insert(s.scale({a}, v));
  return out;
}

VectorSet sum(const TwistedSpace& s, const VectorSet& a, const VectorSet& b) {
  VectorSet out(s.size());
  for (auto x : a.codes())
    for (auto y : b.codes()) out.insert(s.add(x, y));
  return out;
}

}  // namespace

TEST_CASE("linear combinations") {
  const TwistedSpace s = space(11, {3, 7, 3});
  const VectorCode v = code(s, {3, 0, 4});
  CHECK(linear_combinations(s, v) == line(s, v));
  CHECK(linear_combinations(s, v).size() == 11);
  CHECK(linear_combinations(s, 0).size() == 1);
  const VectorCode w = code(s, {2, 5, 6});
  CHECK(linear_combinations(s, w).size() == 121);
  CHECK(linear_combinations(s, w) == oracle::closure(s, {w}));
}

TEST_CASE("span") {
  const TwistedSpace s = space(11, {3, 7, 3});
  const auto d = span_of(s, {code(s, {2, 5, 6})});
  CHECK(d.generators == std::vector<VectorCode>{code(s, {2, 0, 6}), code(s, {0, 5, 0})});
  CHECK(d.dim == 2);
  CHECK(d.member_count == 121);
  CHECK(d.members == sum(s, line(s, code(s, {2, 0, 6})), line(s, code(s, {0, 5, 0}))));

  const auto one = span_of(s, {code(s, {3, 0, 4})});
  CHECK(one.dim == 1);
  CHECK(one.members == line(s, code(s, {3, 0, 4})));

  const auto empty = span_of(s, {});
  CHECK(empty.member_count == 1);
  CHECK(empty.dim == 0);

  CHECK(span_of(s, {s.unit(0), s.unit(2)}).members == coordinate_subspace(s, {0, 2}));
  CHECK(span_of(s, {s.unit(0), s.unit(1), s.unit(2)}).member_count == 1331);

  const Decomposition dec = decompose(s);
  CHECK(span_of(s, dec, {code(s, {2, 5, 6})}).members == d.members);
}

TEST_CASE("dimension") {
  const TwistedSpace s = space(11, {3, 7, 3});
  CHECK(dim_of_vector(s, code(s, {2, 5, 6})).value == 2);
  CHECK(dim_of_vector(s, 0).value == 0);
  CHECK(dim_of_vector(s, 0).witness.empty());
  CHECK(dim_of_vector(s, code(s, {3, 0, 4})).value == 1);
  const auto r = dim_of_vector(s, code(s, {2, 5, 6}));
  VectorCode total = 0;
  for (const auto& [a, u] : r.witness) total = s.add(total, s.scale(a, u));
  CHECK(total == code(s, {2, 5, 6}));

  const auto q = quasi_kernel_bruteforce(s);
  const auto table = minimal_representations(s, q);
  for (VectorCode v = 0; v < s.size(); ++v) REQUIRE(table.length[v] == dim_by_components(s, v));
}

TEST_CASE("independence and bases") {
  const TwistedSpace s = space(11, {3, 7, 3});
  CHECK(is_linearly_independent(s, {s.unit(0), s.unit(1), s.unit(2)}).independent);
  const auto dep = is_linearly_independent(s, {code(s, {1, 0, 0}), code(s, {2, 0, 0})});
  CHECK_FALSE(dep.independent);
  REQUIRE(dep.dependency.size() == 2);
  CHECK(s.add(s.scale(dep.dependency[0], code(s, {1, 0, 0})), s.scale(dep.dependency[1], code(s, {2, 0, 0}))) == 0);
  const VectorCode w = code(s, {3, 0, 4});
  CHECK_FALSE(is_linearly_independent(s, {s.scale({2}, w), w}).independent);
  CHECK(is_linearly_independent(s, {w, code(s, {0, 1, 0})}).independent);
  CHECK_THROWS_AS(is_linearly_independent(s, {code(s, {1, 1, 0})}), Error);

  CHECK(extract_basis(s) == std::vector<VectorCode>{s.unit(2), s.unit(1), s.unit(0)});
  CHECK(extract_basis(s, true).size() == 3);
  const TwistedSpace line1 = space(11, {3});
  CHECK(extract_basis(line1) == std::vector<VectorCode>{1});
}

TEST_CASE("subspaces") {
  const TwistedSpace s = space(11, {3, 7, 3});
  CHECK(is_subspace(s, coordinate_subspace(s, {0, 2})));
  VectorSet w(s.size());
  w.insert(0);
  w.insert(code(s, {1, 1, 0}));
  CHECK_FALSE(is_subspace(s, w));
  VectorSet zero(s.size());
  zero.insert(0);
  CHECK(is_subspace(s, zero));
  // closed but not a union of lines through Q: impossible, so verdicts agree
  const auto span = span_of(s, {code(s, {2, 5, 6})});
  const auto verdict = subspace_verdict(s, span.members);
  CHECK(verdict.closed);
  CHECK(verdict.equals_span_of_q);
}

TEST_CASE("coordinates") {
  const TwistedSpace s = space(11, {3, 7, 3});
  const auto standard = canonical_coordinates(s, {s.unit(0), s.unit(1), s.unit(2)});
  const auto c = standard.coordinates(code(s, {2, 5, 6}));
  REQUIRE(c.has_value());
  // a e_i = a^{q_i} e_i, so the coordinates are q_i-th roots of the entries
  const Field& f = s.field();
  CHECK(f.pow((*c)[0], 3) == FieldElement{2});
  CHECK(f.pow((*c)[1], 7) == FieldElement{5});
  CHECK(f.pow((*c)[2], 3) == FieldElement{6});
  CHECK((*c)[0] == FieldElement{7});

  const TwistedSpace plain = space(11, {1, 1, 1});
  const auto literal = canonical_coordinates(plain, {plain.unit(0), plain.unit(1), plain.unit(2)});
  CHECK(*literal.coordinates(code(plain, {2, 5, 6})) == std::vector<FieldElement>{{2}, {5}, {6}});

  const auto scaled = canonical_coordinates(s, {code(s, {2, 0, 0}), s.unit(1), s.unit(2)});
  CHECK(*scaled.coordinates(code(s, {2, 0, 0})) == std::vector<FieldElement>{{1}, {0}, {0}});
  for (VectorCode v = 0; v < s.size(); ++v) {
    const auto x = scaled.coordinates(v);
    REQUIRE(x.has_value());
    REQUIRE(scaled.vector(*x) == v);
  }
  CHECK_FALSE(verify_coordinates(s, scaled).first_failure().has_value());
  CHECK_FALSE(verify_coordinates(s, standard).first_failure().has_value());
  // eta for the exponent-3 coordinate is the cube map
  const auto eta = standard.eta(0);
  for (std::uint32_t a = 0; a < 11; ++a) CHECK(eta[a] == (a * a * a) % 11);

  auto not_a_basis = [&](std::vector<VectorCode> b) {
    try {
      canonical_coordinates(s, b);
    } catch (const Error& e) {
      return e.kind() == ErrorKind::NotABasis;
    }
    return false;
  };
  CHECK(not_a_basis({s.unit(0), s.unit(1)}));
  CHECK(not_a_basis({code(s, {1, 1, 0}), s.unit(1), s.unit(2)}));
  CHECK(not_a_basis({s.unit(0), code(s, {2, 0, 0}), s.unit(1), s.unit(2)}));
}

TEST_CASE("exotic spans") {
  const TwistedSpace s = space(11, {3, 7, 3});
  const auto q = quasi_kernel_closed_form(s);
  const auto [v, w] = distinct_span_witness(s);
  CHECK(v != w);
  CHECK_FALSE(q.contains(v));
  CHECK_FALSE(q.contains(w));
  CHECK(span_of(s, {v}).members == span_of(s, {w}).members);

  const TwistedSpace t = space(11, {1, 3, 7});
  const auto q3 = quasi_kernel_closed_form(t);
  const auto [x, y] = intersecting_span_witness(t);
  const auto sx = span_of(t, {x}).members, sy = span_of(t, {y}).members;
  CHECK_FALSE(q3.contains(x));
  CHECK_FALSE(q3.contains(y));
  CHECK_FALSE(sx.contains(y));
  CHECK_FALSE(sy.contains(x));
  std::size_t common = 0;
  for (auto c : sx.codes()) common += sy.contains(c);
  CHECK(common > 1);

  auto unmet = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind() == ErrorKind::HypothesisUnmet;
    }
    return false;
  };
  CHECK(unmet([] { distinct_span_witness(space(5, {1, 1})); }));
  CHECK(unmet([] { intersecting_span_witness(space(11, {3, 7})); }));
}
