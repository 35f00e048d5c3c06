#include "nearvec/structure.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "nearvec/error.hpp"

namespace nearvec {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Table of +_v via the literal definition, or nullopt if some a v + b v is
// not a multiple of v. `owner` and `stamp` are |V|-sized scratch buffers.
std::optional<std::vector<std::uint32_t>> gamma_scan(const TwistedSpace& s, VectorCode v,
                                                     std::vector<std::uint32_t>& owner,
                                                     std::vector<VectorCode>& stamp) {
  const std::uint32_t k = s.scalar_count();
  std::vector<VectorCode> multiples(k);
  for (std::uint32_t g = 0; g < k; ++g) {
    multiples[g] = s.scale(FieldElement{g}, v);
    stamp[multiples[g]] = v;
    owner[multiples[g]] = g;
  }
  std::vector<std::uint32_t> table(static_cast<std::size_t>(k) * k);
  for (std::uint32_t a = 0; a < k; ++a) {
    for (std::uint32_t b = 0; b < k; ++b) {
      const VectorCode sum = s.add(multiples[a], multiples[b]);
      if (stamp[sum] != v) return std::nullopt;
      table[a * k + b] = owner[sum];
    }
  }
  return table;
}

std::uint64_t inverse_mod(std::uint64_t q, std::uint64_t m) {
  if (m == 1) return 1;
  for (std::uint64_t x = 1; x <= m; ++x) {
    if (q * x % m == 1) return x;
  }
  throw Error(ErrorKind::InvalidArgument, "exponent not invertible");
}

NearField table_nearfield(const Field& f, std::vector<std::uint32_t> add_table, std::string desc) {
  NearField nf = nf_from_field(f);
  nf.add_table = std::move(add_table);
  nf.origin = NearFieldOrigin::Induced;
  nf.description = std::move(desc);
  return nf;
}

std::string code_text(const TwistedSpace& s, VectorCode v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < s.dimension(); ++i) os << (i ? "," : "") << s.coord(v, i);
  os << ")";
  return os.str();
}

std::vector<VectorCode> nonzero_members(const QuasiKernel& q) {
  auto codes = q.members.codes();
  codes.erase(std::remove(codes.begin(), codes.end(), VectorCode{0}), codes.end());
  return codes;
}

}  // namespace

// ---------------------------------------------------------------- atlas

std::size_t AdditionAtlas::TableHash::operator()(const std::vector<std::uint32_t>& t) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : t) h = (h ^ x) * 1099511628211ull;
  return h;
}

AdditionAtlas::AdditionAtlas(const TwistedSpace& space, const Limits& limits)
    : space_(&space),
      q_(quasi_kernel_bruteforce(space, limits)),
      ids_(space.size(), kNone),
      owner_(space.size(), 0),
      stamp_(space.size(), kNone) {}

std::uint32_t AdditionAtlas::id_of(VectorCode v) {
  if (v == 0) throw Error(ErrorKind::ZeroVector, "induced addition needs a nonzero vector");
  if (!q_.contains(v)) {
    throw Error(ErrorKind::NotInQuasiKernel, code_text(*space_, v) + " is not in Q(V)");
  }
  if (ids_[v] != kNone) return ids_[v];
  auto table = gamma_scan(*space_, v, owner_, stamp_);
  if (!table) throw Error(ErrorKind::ConstructionFailed, "gamma-scan disagrees with Q(V)");
  auto [it, fresh] = index_.emplace(std::move(*table), static_cast<std::uint32_t>(tables_.size()));
  if (fresh) {
    tables_.push_back(it->first);
    reps_.push_back(v);
  }
  ids_[v] = it->second;
  return it->second;
}

// ---------------------------------------------------------------- induced additions

InducedAddition induced_addition(const TwistedSpace& space, VectorCode v) {
  if (v == 0) throw Error(ErrorKind::ZeroVector, "induced addition needs a nonzero vector");
  std::vector<std::uint32_t> owner(space.size());
  std::vector<VectorCode> stamp(space.size(), kNone);
  auto table = gamma_scan(space, v, owner, stamp);
  if (!table) {
    throw Error(ErrorKind::NotInQuasiKernel, code_text(space, v) + " is not in Q(V)");
  }
  const Field& f = space.field();
  const std::size_t lead = space.support(v).front();
  const std::uint64_t q = space.exponents()[lead];
  const std::uint64_t q_inv = inverse_mod(q, f.mult_order());
  const std::uint32_t k = f.order();
  for (std::uint32_t a = 0; a < k; ++a) {
    for (std::uint32_t b = 0; b < k; ++b) {
      const FieldElement sum = f.add(f.pow({a}, q), f.pow({b}, q));
      if (f.pow(sum, q_inv).index != (*table)[a * k + b]) {
        throw Error(ErrorKind::ConstructionFailed,
                    "gamma-scan and closed form disagree for " + code_text(space, v));
      }
    }
  }
  return InducedAddition{v, space.class_of(lead), k, std::move(*table)};
}

NearField induced_nearfield(const TwistedSpace& space, VectorCode v) {
  auto add = induced_addition(space, v);
  return table_nearfield(space.field(), std::move(add.table),
                         "(A,+_v,.) for v=" + code_text(space, v) + " in " + space.describe());
}

VectorSet kernel_of_table(const TwistedSpace& space, const std::vector<std::uint32_t>& table,
                          const Limits& limits) {
  if (space.size() > limits.max_vectors) throw Error(ErrorKind::TooLarge, "space too large");
  const std::uint32_t k = space.scalar_count();
  VectorSet out(space.size());
  std::vector<VectorCode> m(k);
  for (VectorCode w = 0; w < space.size(); ++w) {
    for (std::uint32_t a = 0; a < k; ++a) m[a] = space.scale(FieldElement{a}, w);
    bool ok = true;
    for (std::uint32_t a = 0; a < k && ok; ++a) {
      for (std::uint32_t b = 0; b < k; ++b) {
        if (m[table[a * k + b]] != space.add(m[a], m[b])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.insert(w);
  }
  return out;
}

VectorSet kernel_Ru(const TwistedSpace& space, VectorCode u, const Limits& limits) {
  return kernel_of_table(space, induced_addition(space, u).table, limits);
}

// ---------------------------------------------------------------- compatibility

std::optional<FieldElement> are_compatible(const TwistedSpace& space, const QuasiKernel& q,
                                           VectorCode u, VectorCode v) {
  for (VectorCode x : {u, v}) {
    if (x == 0) throw Error(ErrorKind::ZeroVector, "compatibility needs nonzero vectors");
    if (!q.contains(x)) {
      throw Error(ErrorKind::NotInQuasiKernel, code_text(space, x) + " is not in Q(V)");
    }
  }
  for (std::uint32_t l = 1; l < space.scalar_count(); ++l) {
    if (q.contains(space.add(u, space.scale(FieldElement{l}, v)))) return FieldElement{l};
  }
  return std::nullopt;
}

std::optional<FieldElement> are_compatible(const TwistedSpace& space, VectorCode u, VectorCode v) {
  return are_compatible(space, quasi_kernel_bruteforce(space), u, v);
}

RegularityCertificate is_regular(const TwistedSpace& space, const QuasiKernel& q) {
  // u + l v in Q implies t u + (t l) v in Q and u + (l/t) (t v) in Q.
  VectorSet seen(space.size());
  std::vector<VectorCode> reps;
  for (auto v : nonzero_members(q)) {
    if (seen.contains(v)) continue;
    reps.push_back(v);
    for (std::uint32_t l = 1; l < space.scalar_count(); ++l) seen.insert(space.scale({l}, v));
  }
  RegularityCertificate cert;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      ++cert.pairs_checked;
      if (!are_compatible(space, q, reps[i], reps[j])) {
        cert.regular = false;
        cert.witness = std::make_pair(reps[i], reps[j]);
        return cert;
      }
    }
  }
  return cert;
}

RegularityCertificate is_regular(const TwistedSpace& space, const Limits& limits) {
  return is_regular(space, quasi_kernel_bruteforce(space, limits));
}

// ---------------------------------------------------------------- Key Lemma

KeyLemmaChecker::KeyLemmaChecker(AdditionAtlas& atlas, std::vector<VectorCode> basis,
                                 const Limits& limits)
    : atlas_(&atlas), basis_(std::move(basis)) {
  const TwistedSpace& s = atlas.space();
  for (auto b : basis_) {
    if (b == 0 || !atlas.quasi_kernel().contains(b)) {
      throw Error(ErrorKind::HypothesisUnmet,
                  "basis vector " + code_text(s, b) + " is not in Q(V)*");
    }
  }
  const std::uint64_t k = s.scalar_count();
  std::uint64_t tuples = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    tuples *= k;
    if (tuples > limits.max_tuples) throw Error(ErrorKind::TooLarge, "too many coefficient tuples");
  }
  slot_.assign(s.size(), 0);
  std::vector<std::uint32_t> digits(basis_.size(), 0);
  for (std::uint64_t t = 0; t < tuples; ++t) {
    VectorCode sum = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      sum = s.add(sum, s.scale({digits[i]}, basis_[i]));
    }
    if (slot_[sum] != 0) throw Error(ErrorKind::HypothesisUnmet, "basis is linearly dependent");
    slot_[sum] = t + 1;
    for (std::size_t i = basis_.size(); i-- > 0;) {
      if (++digits[i] < k) break;
      digits[i] = 0;
    }
  }
}

std::optional<std::vector<std::uint32_t>> KeyLemmaChecker::expand(VectorCode v) const {
  if (slot_[v] == 0) return std::nullopt;
  std::uint64_t t = slot_[v] - 1;
  const std::uint32_t k = atlas_->space().scalar_count();
  std::vector<std::uint32_t> out(basis_.size());
  for (std::size_t i = basis_.size(); i-- > 0;) {
    out[i] = static_cast<std::uint32_t>(t % k);
    t /= k;
  }
  return out;
}

KeyLemmaChecker::Outcome KeyLemmaChecker::check(VectorCode v, VectorCode v_prime,
                                                std::string* why) {
  const TwistedSpace& s = atlas_->space();
  auto unmet = [&](const std::string& reason) {
    if (why) *why = reason;
    return Outcome::HypothesisUnmet;
  };
  for (auto x : {v, v_prime}) {
    if (x == 0 || !atlas_->quasi_kernel().contains(x)) {
      return unmet(code_text(s, x) + " is not in Q(V)*");
    }
  }
  const auto theta = expand(v);
  const auto theta_p = expand(v_prime);
  if (!theta || !theta_p) return unmet("vector outside the span of the basis");
  auto term = [&](std::uint32_t c, std::size_t i) {
    return atlas_->id_of(s.scale({c}, basis_[i]));
  };
  bool linked = false;
  for (std::size_t i = 0; i < basis_.size() && !linked; ++i) {
    if ((*theta)[i] == 0) continue;
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      if (i == j || (*theta_p)[j] == 0) continue;
      if (term((*theta)[i], i) == term((*theta_p)[j], j)) {
        linked = true;
        break;
      }
    }
  }
  if (!linked) return unmet("no i0 != j0 with matching induced additions");

  const std::uint32_t target = atlas_->id_of(v);
  bool ok = atlas_->id_of(v_prime) == target;
  for (std::size_t i = 0; i < basis_.size() && ok; ++i) {
    if ((*theta)[i] != 0 && term((*theta)[i], i) != target) ok = false;
    if ((*theta_p)[i] != 0 && term((*theta_p)[i], i) != target) ok = false;
  }
  if (!ok && why) *why = "induced additions differ";
  return ok ? Outcome::Holds : Outcome::Fails;
}

bool key_lemma_verify(const TwistedSpace& space, const std::vector<VectorCode>& basis,
                      VectorCode v, VectorCode v_prime) {
  AdditionAtlas atlas(space);
  KeyLemmaChecker checker(atlas, basis);
  std::string why;
  const auto outcome = checker.check(v, v_prime, &why);
  if (outcome == KeyLemmaChecker::Outcome::HypothesisUnmet) {
    throw Error(ErrorKind::HypothesisUnmet, why);
  }
  return outcome == KeyLemmaChecker::Outcome::Holds;
}

// ---------------------------------------------------------------- equivalence theorem

const ConditionVerdict& EquivalenceReport::at(std::string_view label) const {
  for (const auto& [name, verdict] : conditions) {
    if (name == label) return verdict;
  }
  throw Error(ErrorKind::InvalidArgument, "no condition " + std::string(label));
}

bool EquivalenceReport::consistent() const {
  return std::all_of(conditions.begin(), conditions.end(), [&](const auto& c) {
    return c.second.holds == conditions.front().second.holds;
  });
}

namespace {

// Both module laws over (A, +_T, .) plus the action laws, directly on V.
ConditionVerdict module_laws(const TwistedSpace& s, const std::vector<std::uint32_t>& table) {
  const std::uint32_t k = s.scalar_count();
  const Field& f = s.field();
  ConditionVerdict out{true, {}, ""};
  for (VectorCode w = 0; w < s.size(); ++w) {
    for (std::uint32_t a = 0; a < k; ++a) {
      const VectorCode aw = s.scale({a}, w);
      for (std::uint32_t b = 0; b < k; ++b) {
        const VectorCode bw = s.scale({b}, w);
        if (s.scale({table[a * k + b]}, w) != s.add(aw, bw)) {
          return {false, {w, a, b}, "(a +_v b) w != a w + b w"};
        }
        if (s.scale(f.mul({a}, {b}), w) != s.scale({a}, bw)) {
          return {false, {w, a, b}, "(a b) w != a (b w)"};
        }
      }
    }
  }
  // a (w + g) = a w + a g over generators g = x^j e_i.
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    std::uint32_t place = 1;
    for (std::uint32_t j = 0; j < f.degree(); ++j, place *= f.characteristic()) {
      const VectorCode g = place * s.unit(i);
      for (std::uint32_t a = 0; a < k; ++a) {
        const VectorCode ag = s.scale({a}, g);
        for (VectorCode w = 0; w < s.size(); ++w) {
          if (s.scale({a}, s.add(w, g)) != s.add(s.scale({a}, w), ag)) {
            return {false, {w, g, a}, "a (w + g) != a w + a g"};
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

EquivalenceReport vstheorem_check(AdditionAtlas& atlas, const Limits& limits) {
  const TwistedSpace& s = atlas.space();
  if (s.size() > limits.max_vectors) throw Error(ErrorKind::TooLarge, "space too large");
  const QuasiKernel& q = atlas.quasi_kernel();
  const auto qstar = nonzero_members(q);
  const std::uint32_t k = s.scalar_count();
  const Field& f = s.field();

  std::vector<std::uint32_t> ids;
  ids.reserve(qstar.size());
  for (auto v : qstar) ids.push_back(atlas.id_of(v));
  const std::size_t tables = atlas.table_count();

  std::vector<char> is_dr(tables), is_nf(tables);
  std::vector<ConditionVerdict> laws(tables);
  for (std::uint32_t t = 0; t < tables; ++t) {
    const auto report = nf_check_axioms(table_nearfield(f, atlas.table(t), ""));
    is_nf[t] = is_near_field(report);
    is_dr[t] = is_division_ring(report);
    laws[t] = module_laws(s, atlas.table(t));
  }

  EquivalenceReport rep;
  rep.distinct_additions = tables;
  auto first_failing = [&](auto&& pred) -> std::optional<std::uint32_t> {
    for (std::uint32_t t = 0; t < tables; ++t) {
      if (!pred(t)) return t;
    }
    return std::nullopt;
  };
  auto first_passing = [&](auto&& pred) -> std::optional<std::uint32_t> {
    for (std::uint32_t t = 0; t < tables; ++t) {
      if (pred(t)) return t;
    }
    return std::nullopt;
  };
  auto vs_over = [&](std::uint32_t t) { return is_nf[t] && laws[t].holds; };
  auto vs_over_dr = [&](std::uint32_t t) { return vs_over(t) && is_dr[t]; };

  auto forall = [&](const char* label, auto&& pred) {
    ConditionVerdict c{true, {}, "holds for every v in Q(V)*"};
    if (auto t = first_failing(pred)) {
      c = {false, {atlas.representative(*t)}, "fails for v=" + code_text(s, atlas.representative(*t))};
      if (!laws[*t].holds) c.detail += ": " + laws[*t].detail;
    }
    rep.conditions.emplace_back(label, c);
  };
  auto exists = [&](const char* label, auto&& pred) {
    ConditionVerdict c{false, {}, "no v in Q(V)* works"};
    if (auto t = first_passing(pred)) {
      c = {true, {atlas.representative(*t)}, "v=" + code_text(s, atlas.representative(*t))};
    }
    rep.conditions.emplace_back(label, c);
  };
  forall("1", vs_over);
  exists("2", vs_over);
  forall("1'", vs_over_dr);
  exists("2'", vs_over_dr);

  // 3. Q(V) = V and every induced structure a division ring.
  {
    ConditionVerdict c{true, {}, "Q(V) = V, all division rings"};
    if (q.members.size() != s.size()) {
      VectorCode miss = 0;
      while (q.contains(miss)) ++miss;
      c = {false, {miss}, code_text(s, miss) + " is not in Q(V)"};
    } else if (auto t = first_failing([&](std::uint32_t t) { return is_dr[t]; })) {
      c = {false, {atlas.representative(*t)}, "(A,+_v,.) not a division ring"};
    }
    rep.conditions.emplace_back("3", c);
  }
  // 4. a single induced addition over Q(V)*.
  {
    ConditionVerdict c{true, {}, "one induced addition"};
    for (std::size_t i = 1; i < qstar.size(); ++i) {
      if (ids[i] == ids[0]) continue;
      const auto& ta = atlas.table(ids[0]);
      const auto& tb = atlas.table(ids[i]);
      std::uint32_t cell = 0;
      while (ta[cell] == tb[cell]) ++cell;
      c = {false, {qstar[0], qstar[i], cell / k, cell % k},
           "+_v != +_w for v=" + code_text(s, qstar[0]) + ", w=" + code_text(s, qstar[i])};
      break;
    }
    rep.conditions.emplace_back("4", c);
  }
  // 5. R_w = V for every w in Q(V)*; R_w depends only on +_w.
  {
    ConditionVerdict c{true, {}, "R_w = V"};
    for (std::uint32_t t = 0; t < tables && c.holds; ++t) {
      const auto kernel = kernel_of_table(s, atlas.table(t), limits);
      if (kernel.size() != s.size()) {
        VectorCode miss = 0;
        while (kernel.contains(miss)) ++miss;
        c = {false, {atlas.representative(t), miss},
             code_text(s, miss) + " not in R_w for w=" + code_text(s, atlas.representative(t))};
      }
    }
    rep.conditions.emplace_back("5", c);
  }
  const auto regular = is_regular(s, q);
  auto not_regular = [&] {
    return ConditionVerdict{false,
                            {regular.witness->first, regular.witness->second},
                            "not regular: " + code_text(s, regular.witness->first) + " and " +
                                code_text(s, regular.witness->second) + " are incompatible"};
  };
  // 6. regular and +_v = +_{theta v}.
  {
    ConditionVerdict c{true, {}, "regular, +_v = +_(theta v)"};
    if (!regular.regular) {
      c = not_regular();
    } else {
      for (std::size_t i = 0; i < qstar.size() && c.holds; ++i) {
        for (std::uint32_t th = 1; th < k; ++th) {
          const VectorCode tv = s.scale({th}, qstar[i]);
          if (atlas.id_of(tv) != ids[i]) {
            c = {false, {qstar[i], th}, "+_v != +_(theta v)"};
            break;
          }
        }
      }
    }
    rep.conditions.emplace_back("6", c);
  }
  // 7. regular and every induced structure a division ring.
  {
    ConditionVerdict c{true, {}, "regular, all division rings"};
    if (!regular.regular) {
      c = not_regular();
    } else if (auto t = first_failing([&](std::uint32_t t) { return is_dr[t]; })) {
      c = {false, {atlas.representative(*t)}, "(A,+_v,.) not a division ring"};
    }
    rep.conditions.emplace_back("7", c);
  }
  return rep;
}

EquivalenceReport vstheorem_check(const TwistedSpace& space, const Limits& limits) {
  AdditionAtlas atlas(space, limits);
  return vstheorem_check(atlas, limits);
}

// ---------------------------------------------------------------- decomposition

std::vector<VectorCode> Decomposition::split(const TwistedSpace& space, VectorCode v) const {
  std::vector<VectorCode> parts;
  parts.reserve(components.size());
  for (const auto& c : components) parts.push_back(space.restrict(v, c.support));
  return parts;
}

std::size_t Decomposition::component_of(const TwistedSpace& space, VectorCode v) const {
  for (std::size_t j = 0; j < components.size(); ++j) {
    if (v != 0 && space.restrict(v, components[j].support) == v) return j;
  }
  throw Error(ErrorKind::NotInQuasiKernel, code_text(space, v) + " lies in no component");
}

namespace {

// Standard basis grouped by induced addition, in the given coordinate order.
std::vector<std::vector<std::size_t>> group_basis(const TwistedSpace& s, AdditionAtlas& atlas,
                                                  const std::vector<std::size_t>& order) {
  std::map<std::uint32_t, std::size_t> slot;
  std::vector<std::vector<std::size_t>> groups;
  for (auto i : order) {
    const auto id = atlas.id_of(s.unit(i));
    auto [it, fresh] = slot.emplace(id, groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::sort(groups.begin(), groups.end());
  return groups;
}

// {v in Q(V)* : +_v = +_{e_i}} u {0}.
VectorSet definitional_component(const TwistedSpace& s, AdditionAtlas& atlas, std::size_t i) {
  const auto target = atlas.id_of(s.unit(i));
  VectorSet out(s.size());
  out.insert(0);
  for (auto v : atlas.quasi_kernel().members.codes()) {
    if (v != 0 && atlas.id_of(v) == target) out.insert(v);
  }
  return out;
}

}  // namespace

Decomposition decompose(const TwistedSpace& space, const Limits& limits) {
  AdditionAtlas atlas(space, limits);
  std::vector<std::size_t> order(space.dimension());
  std::iota(order.begin(), order.end(), 0);
  Decomposition d;
  d.basis_assignment.resize(space.dimension());
  for (const auto& group : group_basis(space, atlas, order)) {
    RegularComponent c;
    c.support = group;
    c.class_id = space.class_of(group.front());
    c.members = coordinate_subspace(space, group);
    c.addition = induced_addition(space, space.unit(group.front()));
    for (auto i : group) d.basis_assignment[i] = d.components.size();
    d.components.push_back(std::move(c));
  }
  return d;
}

MaximalityWitness maximality_witness(const TwistedSpace& space, const Decomposition& d,
                                     std::size_t component, VectorCode outside,
                                     AdditionAtlas& atlas) {
  const auto& comp = d.components.at(component);
  if (comp.members.contains(outside)) {
    throw Error(ErrorKind::InvalidArgument, "vector lies inside the component");
  }
  MaximalityWitness w;
  w.outside = outside;
  w.inside = space.unit(comp.support.front());
  // Drop the part inside the component; what is left is still in any M
  // containing both the component and `outside`.
  w.probe = atlas.quasi_kernel().contains(outside)
                ? outside
                : space.sub(outside, space.restrict(outside, comp.support));
  w.probe_outside_q = !atlas.quasi_kernel().contains(w.probe);
  const std::uint32_t k = space.scalar_count();
  const auto& table = atlas.table(atlas.id_of(w.inside));
  std::vector<VectorCode> m(k);
  std::set<VectorCode> multiples;
  for (std::uint32_t a = 0; a < k; ++a) {
    m[a] = space.scale({a}, w.probe);
    multiples.insert(m[a]);
  }
  for (std::uint32_t a = 0; a < k; ++a) {
    for (std::uint32_t b = 0; b < k; ++b) {
      const VectorCode sum = space.add(m[a], m[b]);
      const bool hit = w.probe_outside_q ? !multiples.contains(sum) : m[table[a * k + b]] != sum;
      if (hit) {
        w.alpha = a;
        w.beta = b;
        return w;
      }
    }
  }
  throw Error(ErrorKind::ConstructionFailed,
              "no maximality witness for " + code_text(space, outside));
}

bool check_maximality_witness(const TwistedSpace& space, AdditionAtlas& atlas,
                              const MaximalityWitness& w) {
  const VectorCode sum = space.add(space.scale({w.alpha}, w.probe), space.scale({w.beta}, w.probe));
  if (w.probe_outside_q) {
    for (std::uint32_t g = 0; g < space.scalar_count(); ++g) {
      if (space.scale({g}, w.probe) == sum) return false;
    }
    return true;
  }
  const auto& table = atlas.table(atlas.id_of(w.inside));
  return space.scale({table[w.alpha * space.scalar_count() + w.beta]}, w.probe) != sum;
}

AxiomReport verify_decomposition(const TwistedSpace& s, const Decomposition& d,
                                 AdditionAtlas& atlas) {
  AxiomReport report;
  const auto& q = atlas.quasi_kernel();
  const std::uint32_t k = s.scalar_count();

  {
    Verdict v;
    std::vector<std::vector<std::size_t>> supports;
    for (const auto& c : d.components) supports.push_back(c.support);
    auto classes = s.classes();
    std::sort(classes.begin(), classes.end());
    if (supports != classes) v = {false, {}, "components differ from the exponent classes"};
    report.set("classes_match", v);
  }
  {
    // Every tuple of parts sums to a distinct vector and every vector is hit.
    Verdict v;
    std::uint64_t product = 1;
    std::vector<std::vector<VectorCode>> lists;
    for (const auto& c : d.components) {
      lists.push_back(c.members.codes());
      product *= lists.back().size();
    }
    if (product != s.size()) {
      v = {false, {product}, "component sizes do not multiply to |V|"};
    } else {
      VectorSet hit(s.size());
      std::vector<std::size_t> digit(lists.size(), 0);
      for (std::uint64_t t = 0; t < product && v.pass; ++t) {
        VectorCode sum = 0;
        for (std::size_t j = 0; j < lists.size(); ++j) sum = s.add(sum, lists[j][digit[j]]);
        if (!hit.insert(sum)) v = {false, {sum}, "two part tuples give the same vector"};
        for (std::size_t j = lists.size(); j-- > 0;) {
          if (++digit[j] < lists[j].size()) break;
          digit[j] = 0;
        }
      }
      for (VectorCode x = 0; x < s.size() && v.pass; ++x) {
        const auto parts = d.split(s, x);
        VectorCode sum = 0;
        for (std::size_t j = 0; j < parts.size(); ++j) {
          if (!d.components[j].members.contains(parts[j])) {
            v = {false, {x, j}, "split part outside its component"};
          }
          sum = s.add(sum, parts[j]);
        }
        if (sum != x) v = {false, {x}, "parts do not sum back"};
      }
    }
    report.set("direct_sum", v);
  }
  {
    Verdict v;
    for (auto x : nonzero_members(q)) {
      std::size_t count = 0;
      for (const auto& c : d.components) count += c.members.contains(x);
      if (count != 1) {
        v = {false, {x, count}, code_text(s, x) + " lies in " + std::to_string(count) + " components"};
        break;
      }
    }
    report.set("quasi_kernel_partition", v);
  }
  {
    Verdict v;
    for (std::size_t j = 0; j < d.components.size() && v.pass; ++j) {
      const auto& c = d.components[j];
      const auto target = atlas.id_of(s.unit(c.support.front()));
      for (auto x : c.members.codes()) {
        if (x == 0) continue;
        if (!q.contains(x)) {
          v = {false, {x}, code_text(s, x) + " is a member outside Q(V)"};
          break;
        }
        if (atlas.id_of(x) != target) {
          v = {false, {x}, "component members carry different additions"};
          break;
        }
      }
      if (v.pass && c.addition.table != atlas.table(target)) {
        v = {false, {j}, "stored induced addition differs"};
      }
    }
    report.set("shared_addition", v);
  }
  {
    Verdict v;
    const Field& f = s.field();
    for (std::size_t j = 0; j < d.components.size() && v.pass; ++j) {
      const auto& c = d.components[j];
      for (auto x : c.members.codes()) {
        for (auto i : c.support) {
          std::uint32_t place = 1;
          for (std::uint32_t e = 0; e < f.degree(); ++e, place *= f.characteristic()) {
            if (!c.members.contains(s.add(x, place * s.unit(i)))) {
              v = {false, {x, i}, "component not closed under addition"};
            }
          }
        }
        for (std::uint32_t a = 0; a < k; ++a) {
          if (!c.members.contains(s.scale({a}, x))) v = {false, {x, a}, "component not scalar-closed"};
        }
        if (!v.pass) break;
      }
    }
    report.set("subspace_closed", v);
  }
  {
    // V_i = {v : +_v = +_{e_i}} grouped with the basis read forwards and backwards.
    Verdict v;
    std::vector<std::size_t> order(s.dimension());
    std::iota(order.begin(), order.end(), 0);
    std::set<std::vector<VectorCode>> expected;
    for (const auto& c : d.components) expected.insert(c.members.codes());
    for (int pass = 0; pass < 2 && v.pass; ++pass) {
      std::set<std::vector<VectorCode>> found;
      for (const auto& group : group_basis(s, atlas, order)) {
        found.insert(definitional_component(s, atlas, group.front()).codes());
      }
      if (found != expected) {
        v = {false, {static_cast<std::uint64_t>(pass)},
             pass == 0 ? "definitional grouping differs" : "grouping changes under reversed order"};
      }
      std::reverse(order.begin(), order.end());
    }
    report.set("unique_under_reordering", v);
  }
  {
    Verdict v;
    for (std::size_t j = 0; j < d.components.size() && v.pass; ++j) {
      for (VectorCode m = 0; m < s.size(); ++m) {
        if (d.components[j].members.contains(m)) continue;
        const auto w = maximality_witness(s, d, j, m, atlas);
        if (!check_maximality_witness(s, atlas, w)) {
          v = {false, {j, m}, "maximality witness does not check"};
          break;
        }
      }
    }
    report.set("maximality", v);
  }
  {
    Verdict v;
    for (std::size_t j = 0; j < d.components.size() && v.pass; ++j) {
      const auto& c = d.components[j];
      std::vector<VectorCode> seeds;
      for (auto i : c.support) {
        for (std::uint32_t a = 1; a < k; ++a) seeds.push_back(s.scale({a}, s.unit(i)));
      }
      std::uint64_t expect = 1;
      for (std::size_t t = 0; t < c.support.size(); ++t) expect *= k;
      if (!(additive_closure(s, seeds) == c.members) || c.members.size() != expect) {
        v = {false, {j}, "standard vectors do not form a basis of the component"};
      }
    }
    report.set("component_bases", v);
  }
  return report;
}

}  // namespace nearvec
