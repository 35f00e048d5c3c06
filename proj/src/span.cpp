#include "nearvec/span.hpp"

#include <algorithm>
#include <deque>

#include "nearvec/error.hpp"

namespace nearvec {

namespace {

std::vector<VectorCode> line(const TwistedSpace& s, VectorCode v) {
  std::vector<VectorCode> out;
  for (std::uint32_t a = 1; a < s.scalar_count(); ++a) out.push_back(s.scale({a}, v));
  return out;
}

std::vector<VectorCode> lines(const TwistedSpace& s, const std::vector<VectorCode>& vs) {
  std::vector<VectorCode> out;
  for (auto v : vs) {
    auto l = line(s, v);
    out.insert(out.end(), l.begin(), l.end());
  }
  return out;
}

// Quasi-kernel test from the class partition: nonzero and inside one class.
bool in_class_subspace(const TwistedSpace& s, VectorCode v) {
  if (v == 0) return false;
  for (const auto& c : s.classes()) {
    if (s.restrict(v, c) == v) return true;
  }
  return false;
}

std::uint64_t tuple_count(const TwistedSpace& s, std::size_t k, const Limits& limits) {
  std::uint64_t tuples = 1;
  for (std::size_t i = 0; i < k; ++i) {
    tuples *= s.scalar_count();
    if (tuples > limits.max_tuples) {
      throw Error(ErrorKind::TooLarge, "coefficient search exceeds " +
                                           std::to_string(limits.max_tuples) + " tuples");
    }
  }
  return tuples;
}

void check_size(const TwistedSpace& s, const Limits& limits) {
  if (s.size() > limits.max_vectors) {
    throw Error(ErrorKind::TooLarge, "materialization limited to " +
                                         std::to_string(limits.max_vectors) + " vectors");
  }
}

}  // namespace

VectorSet linear_combinations(const TwistedSpace& space, VectorCode v, const Limits& limits) {
  check_size(space, limits);
  return additive_closure(space, line(space, v));
}

SubspaceDescriptor span_of(const TwistedSpace& space, const Decomposition& d,
                           const std::vector<VectorCode>& generators) {
  SubspaceDescriptor out;
  for (const auto& comp : d.components) {
    std::vector<VectorCode> chosen;
    VectorSet current = additive_closure(space, {});
    for (auto g : generators) {
      const VectorCode part = space.restrict(g, comp.support);
      if (part == 0 || current.contains(part)) continue;
      chosen.push_back(part);
      current = additive_closure(space, lines(space, chosen));
    }
    if (chosen.empty()) continue;
    out.component_supports.push_back(comp.support);
    out.generators.insert(out.generators.end(), chosen.begin(), chosen.end());
  }
  out.dim = out.generators.size();
  out.members = additive_closure(space, lines(space, out.generators));
  out.member_count = out.members.size();
  return out;
}

SubspaceDescriptor span_of(const TwistedSpace& space, const std::vector<VectorCode>& generators,
                           const Limits& limits) {
  check_size(space, limits);
  return span_of(space, decompose(space, limits), generators);
}

std::size_t dim_by_components(const TwistedSpace& space, VectorCode v) {
  std::size_t n = 0;
  for (const auto& c : space.classes()) n += space.restrict(v, c) != 0;
  return n;
}

RepresentationTable minimal_representations(const TwistedSpace& space, const QuasiKernel& q) {
  constexpr std::uint8_t kUnseen = 0xff;
  RepresentationTable t{std::vector<std::uint8_t>(space.size(), kUnseen),
                        std::vector<VectorCode>(space.size(), 0)};
  std::vector<VectorCode> terms;
  for (auto u : q.members.codes()) {
    if (u != 0) terms.push_back(u);
  }
  std::deque<VectorCode> queue{0};
  t.length[0] = 0;
  while (!queue.empty()) {
    const VectorCode x = queue.front();
    queue.pop_front();
    for (auto u : terms) {
      const VectorCode y = space.add(x, u);
      if (t.length[y] == kUnseen) {
        t.length[y] = static_cast<std::uint8_t>(t.length[x] + 1);
        t.parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  return t;
}

DimResult dim_of_vector(const TwistedSpace& space, VectorCode v, const Limits& limits) {
  check_size(space, limits);
  const auto table = minimal_representations(space, quasi_kernel_bruteforce(space, limits));
  DimResult r;
  r.value = table.length[v];
  for (VectorCode x = v; x != 0; x = table.parent[x]) {
    r.witness.emplace_back(space.field().one(), space.sub(x, table.parent[x]));
  }
  std::reverse(r.witness.begin(), r.witness.end());
  if (r.value != dim_by_components(space, v)) {
    throw Error(ErrorKind::ConstructionFailed, "dimension routes disagree");
  }
  return r;
}

Independence is_linearly_independent(const TwistedSpace& space,
                                     const std::vector<VectorCode>& vectors,
                                     const Limits& limits) {
  const auto q = quasi_kernel_bruteforce(space, limits);
  for (auto v : vectors) {
    if (!q.contains(v)) {
      throw Error(ErrorKind::NotInQuasiKernel, "independence is defined for Q(V) vectors only");
    }
  }
  const std::uint64_t tuples = tuple_count(space, vectors.size(), limits);
  const std::uint32_t k = space.scalar_count();
  std::vector<std::uint32_t> digits(vectors.size(), 0);
  for (std::uint64_t t = 1; t < tuples; ++t) {
    for (std::size_t i = vectors.size(); i-- > 0;) {
      if (++digits[i] < k) break;
      digits[i] = 0;
    }
    VectorCode sum = 0;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      sum = space.add(sum, space.scale({digits[i]}, vectors[i]));
    }
    if (sum == 0) {
      Independence out{false, {}};
      for (auto d : digits) out.dependency.push_back({d});
      return out;
    }
  }
  return {};
}

std::vector<VectorCode> extract_basis(const TwistedSpace& space, bool reversed,
                                      const Limits& limits) {
  const auto q = quasi_kernel_bruteforce(space, limits);
  auto order = q.members.codes();
  if (reversed) std::reverse(order.begin(), order.end());
  std::vector<VectorCode> basis;
  VectorSet current = additive_closure(space, {});
  for (auto v : order) {
    if (v == 0 || current.contains(v)) continue;
    basis.push_back(v);
    current = additive_closure(space, lines(space, basis));
    if (current.size() == space.size()) break;
  }
  if (current.size() != space.size()) {
    throw Error(ErrorKind::ConstructionFailed, "Q(V) does not generate V");
  }
  std::uint64_t tuples = 1;
  bool small = true;
  for (std::size_t i = 0; i < basis.size() && small; ++i) {
    tuples *= space.scalar_count();
    small = tuples <= limits.max_tuples;
  }
  if (small && !is_linearly_independent(space, basis, limits).independent) {
    throw Error(ErrorKind::ConstructionFailed, "greedy basis is dependent");
  }
  return basis;
}

SubspaceVerdict subspace_verdict(const TwistedSpace& space, const VectorSet& w,
                                 const Limits& limits) {
  check_size(space, limits);
  SubspaceVerdict out;
  const auto members = w.codes();
  bool closed = !members.empty();
  // Closed under + iff the subgroup generated by a greedy subset equals W.
  std::vector<VectorCode> gens;
  VectorSet generated = additive_closure(space, {});
  for (std::size_t i = 0; i < members.size() && closed; ++i) {
    if (generated.contains(members[i])) continue;
    gens.push_back(members[i]);
    generated = additive_closure(space, gens);
    closed = generated.is_subset_of(w);
  }
  closed = closed && generated == w;
  for (std::size_t i = 0; i < members.size() && closed; ++i) {
    for (std::uint32_t a = 0; a < space.scalar_count(); ++a) {
      if (!w.contains(space.scale({a}, members[i]))) {
        closed = false;
        break;
      }
    }
  }
  out.closed = closed;

  const auto q = quasi_kernel_bruteforce(space, limits);
  std::vector<VectorCode> in_q;
  for (auto v : members) {
    if (q.contains(v)) in_q.push_back(v);
  }
  out.equals_span_of_q = span_of(space, in_q, limits).members == w;
  return out;
}

bool is_subspace(const TwistedSpace& space, const VectorSet& w, const Limits& limits) {
  const auto v = subspace_verdict(space, w, limits);
  if (v.closed != v.equals_span_of_q) {
    throw Error(ErrorKind::ConstructionFailed, "subspace characterizations disagree");
  }
  return v.closed;
}

// ---------------------------------------------------------------- coordinates

CoordinateMap::CoordinateMap(const TwistedSpace& space, std::vector<VectorCode> basis,
                             const Limits& limits)
    : space_(&space), basis_(std::move(basis)) {
  for (auto b : basis_) {
    if (!in_class_subspace(space, b)) {
      throw Error(ErrorKind::NotABasis, "basis vectors must lie in Q(V)*");
    }
  }
  const std::uint64_t tuples = tuple_count(space, basis_.size(), limits);
  const std::uint32_t k = space.scalar_count();
  slot_.assign(space.size(), 0);
  std::vector<std::uint32_t> digits(basis_.size(), 0);
  for (std::uint64_t t = 0; t < tuples; ++t) {
    VectorCode sum = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      sum = space.add(sum, space.scale({digits[i]}, basis_[i]));
    }
    if (slot_[sum] != 0) throw Error(ErrorKind::NotABasis, "basis vectors are dependent");
    slot_[sum] = t + 1;
    for (std::size_t i = basis_.size(); i-- > 0;) {
      if (++digits[i] < k) break;
      digits[i] = 0;
    }
  }
  spans_ = tuples == space.size();
}

std::optional<std::vector<FieldElement>> CoordinateMap::coordinates(VectorCode v) const {
  if (v >= slot_.size() || slot_[v] == 0) return std::nullopt;
  std::uint64_t t = slot_[v] - 1;
  const std::uint32_t k = space_->scalar_count();
  std::vector<FieldElement> out(basis_.size());
  for (std::size_t i = basis_.size(); i-- > 0;) {
    out[i] = {static_cast<std::uint32_t>(t % k)};
    t /= k;
  }
  return out;
}

VectorCode CoordinateMap::vector(const std::vector<FieldElement>& coords) const {
  if (coords.size() != basis_.size()) {
    throw Error(ErrorKind::ShapeMismatch, "wrong number of coordinates");
  }
  VectorCode sum = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (!space_->field().contains(coords[i])) {
      throw Error(ErrorKind::InvalidArgument, "coordinate outside the field");
    }
    sum = space_->add(sum, space_->scale(coords[i], basis_[i]));
  }
  return sum;
}

std::vector<std::uint32_t> CoordinateMap::eta(std::size_t i) const {
  const Field& f = space_->field();
  const std::size_t lead = space_->support(basis_.at(i)).front();
  const std::uint32_t q = space_->exponents()[lead];
  std::vector<std::uint32_t> out(f.order());
  for (std::uint32_t a = 0; a < f.order(); ++a) out[a] = f.pow({a}, q).index;
  return out;
}

CoordinateMap canonical_coordinates(const TwistedSpace& space, const std::vector<VectorCode>& basis,
                                    const Limits& limits) {
  CoordinateMap map(space, basis, limits);
  if (!map.spans()) throw Error(ErrorKind::NotABasis, "basis does not span V");
  return map;
}

AxiomReport verify_coordinates(const TwistedSpace& s, const CoordinateMap& map) {
  AxiomReport report;
  const std::size_t k = map.basis().size();
  const std::uint32_t order = s.scalar_count();
  std::vector<std::uint32_t> coords(static_cast<std::size_t>(s.size()) * k);
  {
    Verdict v;
    for (VectorCode x = 0; x < s.size() && v.pass; ++x) {
      const auto c = map.coordinates(x);
      if (!c) {
        v = {false, {x}, "vector without coordinates"};
        break;
      }
      if (map.vector(*c) != x) v = {false, {x}, "round trip changes the vector"};
      for (std::size_t i = 0; i < k; ++i) coords[x * k + i] = (*c)[i].index;
    }
    // Distinct vectors get distinct tuples: the tuple count matches |V| and
    // every tuple maps back to a vector that reproduces it.
    std::vector<FieldElement> t(k, FieldElement{0});
    for (std::uint64_t idx = 0; idx < s.size() && v.pass; ++idx) {
      if (map.coordinates(map.vector(t)) != t) v = {false, {idx}, "tuple round trip fails"};
      for (std::size_t i = k; i-- > 0;) {
        if (++t[i].index < order) break;
        t[i].index = 0;
      }
    }
    report.set("round_trip", v);
  }
  std::vector<std::vector<std::uint32_t>> tables;
  for (auto b : map.basis()) tables.push_back(induced_addition(s, b).table);
  {
    Verdict v;
    if (report.at("round_trip").pass) {
      for (VectorCode x = 0; x < s.size() && v.pass; ++x) {
        for (VectorCode y = 0; y < s.size(); ++y) {
          const VectorCode z = s.add(x, y);
          for (std::size_t i = 0; i < k; ++i) {
            if (coords[z * k + i] != tables[i][coords[x * k + i] * order + coords[y * k + i]]) {
              v = {false, {x, y, i}, "coordinate of a sum is not the induced sum"};
              break;
            }
          }
          if (!v.pass) break;
        }
      }
    } else {
      v = {false, {}, "requires round_trip"};
    }
    report.set("pushforward_addition", v);
  }
  {
    Verdict v;
    const NearField target = nf_from_field(s.field());
    for (std::size_t i = 0; i < k && v.pass; ++i) {
      if (!nf_is_isomorphism(induced_nearfield(s, map.basis()[i]), target, map.eta(i))) {
        v = {false, {i}, "eta_i is not a near-field isomorphism"};
      }
    }
    report.set("eta_isomorphisms", v);
  }
  return report;
}

// ---------------------------------------------------------------- witnesses

std::pair<VectorCode, VectorCode> distinct_span_witness(const TwistedSpace& space) {
  const auto& classes = space.classes();
  if (classes.size() < 2) {
    throw Error(ErrorKind::HypothesisUnmet, "space is regular: one exponent class");
  }
  const VectorCode v1 = space.unit(classes[0].front());
  const VectorCode v2 = space.unit(classes[1].front());
  const FieldElement theta = space.field().primitive_element();
  const VectorCode v = space.add(v1, v2);
  const VectorCode w = space.add(space.scale(theta, v1), v2);
  const auto d = decompose(space);
  if (v == w || in_class_subspace(space, v) || in_class_subspace(space, w) ||
      !(span_of(space, d, {v}).members == span_of(space, d, {w}).members)) {
    throw Error(ErrorKind::ConstructionFailed, "distinct-span construction failed");
  }
  return {v, w};
}

std::pair<VectorCode, VectorCode> intersecting_span_witness(const TwistedSpace& space) {
  if (space.classes().size() < 2) {
    throw Error(ErrorKind::HypothesisUnmet, "space is regular: one exponent class");
  }
  for (std::size_t j = 0; j < space.dimension(); ++j) {
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < space.dimension(); ++i) {
      if (space.class_of(i) != space.class_of(j)) others.push_back(i);
    }
    if (others.size() < 2) continue;
    const VectorCode v = space.add(space.unit(others[0]), space.unit(j));
    const VectorCode w = space.add(space.unit(j), space.unit(others[1]));
    const auto d = decompose(space);
    const auto sv = span_of(space, d, {v}).members;
    const auto sw = span_of(space, d, {w}).members;
    bool meet = false;
    for (auto x : sv.codes()) meet = meet || (x != 0 && sw.contains(x));
    if (in_class_subspace(space, v) || in_class_subspace(space, w) || sw.contains(v) ||
        sv.contains(w) || !meet || !sv.contains(space.unit(j)) || !sw.contains(space.unit(j))) {
      throw Error(ErrorKind::ConstructionFailed, "intersecting-span construction failed");
    }
    return {v, w};
  }
  throw Error(ErrorKind::HypothesisUnmet,
              "needs a coordinate with two coordinates outside its class (dimension > 2)");
}

}  // namespace nearvec
