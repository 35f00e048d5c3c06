#include "nearvec/quasi_kernel.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "nearvec/error.hpp"

namespace nearvec {

namespace {

struct TwistedModel {
  const TwistedSpace& space;

  std::uint32_t size() const { return space.size(); }
  std::uint32_t zero() const { return 0; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return space.add(a, b); }
  std::uint32_t scalar_count() const { return space.scalar_count(); }
  std::uint32_t act(std::uint32_t k, std::uint32_t x) const {
    return space.scale(FieldElement{k}, x);
  }
  // e_i * x^k for every coordinate i and every power of the field generator x:
  // every vector is a left-folded sum of these.
  std::vector<std::uint32_t> generators() const {
    std::vector<std::uint32_t> out;
    const Field& f = space.field();
    for (std::size_t i = 0; i < space.dimension(); ++i) {
      std::uint32_t place = 1;
      for (std::uint32_t k = 0; k < f.degree(); ++k) {
        out.push_back(place * space.unit(i));
        place *= f.characteristic();
      }
    }
    return out;
  }
};

struct RawModel {
  const RawSpace& space;

  std::uint32_t size() const { return space.order; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return space.add(a, b); }
  std::uint32_t scalar_count() const { return static_cast<std::uint32_t>(space.scalars.size()); }
  std::uint32_t act(std::uint32_t k, std::uint32_t x) const { return space.scalars[k][x]; }
  // Greedy generating set for the magma (carrier, +); closure is incremental.
  std::vector<std::uint32_t> generators() const {
    const std::uint32_t n = space.order;
    std::vector<char> in(n, 0);
    std::vector<std::uint32_t> members, gens;
    for (std::uint32_t g = 0; g < n; ++g) {
      if (in[g]) continue;
      gens.push_back(g);
      in[g] = 1;
      members.push_back(g);
      for (std::size_t next = members.size() - 1; next < members.size(); ++next) {
        const std::uint32_t x = members[next];
        for (std::size_t j = 0; j <= next; ++j) {
          for (std::uint32_t y : {add(x, members[j]), add(members[j], x)}) {
            if (!in[y]) {
              in[y] = 1;
              members.push_back(y);
            }
          }
        }
      }
    }
    return gens;
  }
};

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

template <class Model>
std::vector<char> quasi_kernel_flags(const Model& m) {
  const std::uint32_t n = m.size();
  const std::uint32_t k = m.scalar_count();
  std::vector<std::uint32_t> stamp(n, kNone);
  std::vector<std::uint32_t> multiples(k);
  std::vector<char> in_q(n, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t a = 0; a < k; ++a) {
      multiples[a] = m.act(a, x);
      stamp[multiples[a]] = x;
    }
    bool ok = true;
    for (std::uint32_t a = 0; a < k && ok; ++a) {
      for (std::uint32_t b = 0; b < k; ++b) {
        if (stamp[m.add(multiples[a], multiples[b])] != x) {
          ok = false;
          break;
        }
      }
    }
    in_q[x] = ok;
  }
  return in_q;
}

Verdict failure(std::vector<std::uint64_t> witness, std::string detail) {
  return Verdict{false, std::move(witness), std::move(detail)};
}

struct MapHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

template <class Model>
AxiomReport check_axioms(const Model& m) {
  AxiomReport report;
  const std::uint32_t n = m.size();
  const std::uint32_t k = m.scalar_count();
  const auto gens = m.generators();

  // 1. group with identity and inverses; every scalar an endomorphism.
  Verdict group;
  std::uint32_t zero = kNone;
  for (std::uint32_t z = 0; z < n && zero == kNone; ++z) {
    bool ok = true;
    for (std::uint32_t a = 0; a < n && ok; ++a) ok = m.add(z, a) == a && m.add(a, z) == a;
    if (ok) zero = z;
  }
  if (zero == kNone) group = failure({}, "no additive identity");
  // Light's test: associativity on a magma generating set implies it everywhere.
  for (auto g : gens) {
    if (!group.pass) break;
    for (std::uint32_t x = 0; x < n && group.pass; ++x) {
      const std::uint32_t xg = m.add(x, g);
      for (std::uint32_t y = 0; y < n; ++y) {
        if (m.add(xg, y) != m.add(x, m.add(g, y))) {
          group = failure({x, g, y}, "addition is not associative");
          break;
        }
      }
    }
  }
  std::vector<std::uint32_t> negation(n, kNone);
  if (group.pass) {
    for (std::uint32_t a = 0; a < n && group.pass; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        if (m.add(a, b) == zero) {
          negation[a] = b;
          break;
        }
      }
      if (negation[a] == kNone || m.add(negation[a], a) != zero) {
        group = failure({a}, "no additive inverse");
      }
    }
  }
  // alpha(x + g) = alpha x + alpha g on generators g forces additivity.
  for (std::uint32_t a = 0; a < k && group.pass; ++a) {
    for (auto g : gens) {
      if (!group.pass) break;
      const std::uint32_t ag = m.act(a, g);
      for (std::uint32_t x = 0; x < n; ++x) {
        if (m.act(a, m.add(x, g)) != m.add(m.act(a, x), ag)) {
          group = failure({a, x, g}, "scalar is not an endomorphism");
          break;
        }
      }
    }
  }
  report.set(std::string(kSpaceAxioms[0]), group);

  Verdict abelian;
  if (group.pass) {
    for (auto g : gens) {
      for (std::uint32_t x = 0; x < n && abelian.pass; ++x) {
        if (m.add(x, g) != m.add(g, x)) abelian = failure({x, g}, "addition is not commutative");
      }
    }
  } else {
    abelian = failure({}, "not a group");
  }

  if (!group.pass) {
    for (std::size_t i = 1; i < kSpaceAxioms.size(); ++i) {
      report.set(std::string(kSpaceAxioms[i]), failure({}, "requires condition 1"));
    }
    report.set("abelian", abelian);
    return report;
  }

  // 2. zero map, identity and negation among the scalars.
  std::uint32_t zero_scalar = kNone, id_scalar = kNone, neg_scalar = kNone;
  for (std::uint32_t a = 0; a < k; ++a) {
    bool is_zero = true, is_id = true, is_neg = true;
    for (std::uint32_t x = 0; x < n; ++x) {
      const std::uint32_t y = m.act(a, x);
      is_zero = is_zero && y == zero;
      is_id = is_id && y == x;
      is_neg = is_neg && y == negation[x];
    }
    if (is_zero && zero_scalar == kNone) zero_scalar = a;
    if (is_id && id_scalar == kNone) id_scalar = a;
    if (is_neg && neg_scalar == kNone) neg_scalar = a;
  }
  Verdict contains;
  if (zero_scalar == kNone) contains = failure({}, "no scalar acts as the zero map");
  else if (id_scalar == kNone) contains = failure({}, "no scalar acts as id");
  else if (neg_scalar == kNone) contains = failure({}, "no scalar acts as -id");
  report.set(std::string(kSpaceAxioms[1]), contains);

  // 3. nonzero scalars are bijective and closed under composition; a finite
  // set of bijections closed under composition is a group.
  std::vector<std::uint32_t> units;
  for (std::uint32_t a = 0; a < k; ++a) {
    bool is_zero = true;
    for (std::uint32_t x = 0; x < n && is_zero; ++x) is_zero = m.act(a, x) == zero;
    if (!is_zero) units.push_back(a);
  }
  Verdict automorphisms;
  std::vector<std::vector<std::uint32_t>> maps(units.size(), std::vector<std::uint32_t>(n));
  std::map<std::vector<std::uint32_t>, std::uint32_t> known;
  for (std::size_t i = 0; i < units.size(); ++i) {
    for (std::uint32_t x = 0; x < n; ++x) maps[i][x] = m.act(units[i], x);
    known.emplace(maps[i], units[i]);
    std::vector<char> hit(n, 0);
    for (std::uint32_t x = 0; x < n && automorphisms.pass; ++x) {
      if (hit[maps[i][x]]) automorphisms = failure({units[i], x}, "scalar is not injective");
      hit[maps[i][x]] = 1;
    }
  }
  if (units.empty()) automorphisms = failure({}, "A* is empty");
  std::vector<std::uint32_t> composite(n);
  for (std::size_t i = 0; i < units.size() && automorphisms.pass; ++i) {
    for (std::size_t j = 0; j < units.size(); ++j) {
      for (std::uint32_t x = 0; x < n; ++x) composite[x] = maps[i][maps[j][x]];
      if (!known.contains(composite)) {
        automorphisms = failure({units[i], units[j]}, "A* is not closed under composition");
        break;
      }
    }
  }
  report.set(std::string(kSpaceAxioms[2]), automorphisms);

  // 4. alpha x = beta x implies alpha = beta or x = 0.
  Verdict fixed_point_free;
  {
    std::vector<std::uint32_t> owner(n, kNone);
    std::vector<std::uint32_t> stamp(n, kNone);
    for (std::uint32_t x = 0; x < n && fixed_point_free.pass; ++x) {
      if (x == zero) continue;
      for (std::uint32_t a = 0; a < k; ++a) {
        const std::uint32_t y = m.act(a, x);
        if (stamp[y] == x) {
          fixed_point_free = failure({x, owner[y], a}, "two scalars agree on a nonzero vector");
          break;
        }
        stamp[y] = x;
        owner[y] = a;
      }
    }
  }
  report.set(std::string(kSpaceAxioms[3]), fixed_point_free);

  // 5. additive closure of Q(V) is V.
  const auto in_q = quasi_kernel_flags(m);
  std::vector<char> reached(n, 0);
  std::vector<std::uint32_t> seeds;
  std::uint32_t reached_count = 0;
  // Re-expands every reached element against the current seeds.
  auto grow = [&] {
    std::vector<std::uint32_t> frontier;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (reached[x]) frontier.push_back(x);
    }
    while (!frontier.empty()) {
      const std::uint32_t x = frontier.back();
      frontier.pop_back();
      for (auto s : seeds) {
        const std::uint32_t y = m.add(x, s);
        if (!reached[y]) {
          reached[y] = 1;
          ++reached_count;
          frontier.push_back(y);
        }
      }
    }
  };
  reached[zero] = 1;
  reached_count = 1;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (in_q[x] && !reached[x]) {
      seeds.push_back(x);
      grow();
    }
  }
  Verdict generates;
  if (reached_count != n) {
    std::uint32_t missing = 0;
    while (reached[missing]) ++missing;
    std::ostringstream os;
    os << "Q(V) generates a subgroup of order " << reached_count << " < " << n;
    generates = failure({missing}, os.str());
  }
  report.set(std::string(kSpaceAxioms[4]), generates);
  report.set("abelian", abelian);
  return report;
}

std::vector<std::vector<std::size_t>> maximal_supports(const TwistedSpace& space,
                                                       const VectorSet& members) {
  std::vector<std::uint64_t> masks;
  for (auto v : members.codes()) {
    std::uint64_t mask = 0;
    for (auto i : space.support(v)) mask |= 1ull << i;
    masks.push_back(mask);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::vector<std::size_t>> out;
  for (auto a : masks) {
    if (a == 0) continue;
    bool maximal = true;
    for (auto b : masks) {
      if (b != a && (a & b) == a) maximal = false;
    }
    if (!maximal) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < space.dimension(); ++i) {
      if (a >> i & 1) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

QuasiKernel quasi_kernel_bruteforce(const TwistedSpace& space, const Limits& limits) {
  if (space.size() > limits.max_vectors) {
    throw Error(ErrorKind::TooLarge, "quasi-kernel scan limited to " +
                                         std::to_string(limits.max_vectors) + " vectors");
  }
  const auto flags = quasi_kernel_flags(TwistedModel{space});
  QuasiKernel q{VectorSet(space.size()), {}};
  for (VectorCode v = 0; v < space.size(); ++v) {
    if (flags[v]) q.members.insert(v);
  }
  q.supports = maximal_supports(space, q.members);
  return q;
}

QuasiKernel quasi_kernel_closed_form(const TwistedSpace& space) {
  QuasiKernel q{VectorSet(space.size()), {}};
  for (const auto& cls : space.classes()) {
    for (auto v : coordinate_subspace(space, cls).codes()) q.members.insert(v);
    q.supports.push_back(cls);
  }
  std::sort(q.supports.begin(), q.supports.end());
  return q;
}

AxiomReport axiom_check(const TwistedSpace& space, const Limits& limits) {
  if (space.size() > limits.max_axiom_vectors) {
    throw Error(ErrorKind::TooLarge, "axiom check limited to " +
                                         std::to_string(limits.max_axiom_vectors) + " vectors");
  }
  return check_axioms(TwistedModel{space});
}

AxiomReport axiom_check(const RawSpace& space, const Limits& limits) {
  if (space.order > limits.max_raw_carrier) {
    throw Error(ErrorKind::TooLarge, "raw carrier limited to " +
                                         std::to_string(limits.max_raw_carrier) + " elements");
  }
  if (space.add_table.size() != static_cast<std::size_t>(space.order) * space.order) {
    throw Error(ErrorKind::ShapeMismatch, "group table has wrong shape");
  }
  for (auto x : space.add_table) {
    if (x >= space.order) {
      AxiomReport report;
      report.set(std::string(kSpaceAxioms[0]), failure({x}, "group table leaves the carrier"));
      for (std::size_t i = 1; i < kSpaceAxioms.size(); ++i) {
        report.set(std::string(kSpaceAxioms[i]), failure({}, "requires condition 1"));
      }
      report.set("abelian", failure({}, "not a group"));
      return report;
    }
  }
  for (const auto& s : space.scalars) {
    if (s.size() != space.order) throw Error(ErrorKind::ShapeMismatch, "scalar map has wrong length");
    for (auto x : s) {
      if (x >= space.order) throw Error(ErrorKind::ShapeMismatch, "scalar map leaves the carrier");
    }
  }
  return check_axioms(RawModel{space});
}

std::vector<std::uint32_t> raw_quasi_kernel(const RawSpace& space) {
  const auto flags = quasi_kernel_flags(RawModel{space});
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < space.order; ++x) {
    if (flags[x]) out.push_back(x);
  }
  return out;
}

RawSpace raw_from_near_field(const NearField& nf) {
  RawSpace raw;
  raw.order = nf.order;
  raw.add_table = nf.add_table;
  raw.scalars.resize(nf.order);
  for (std::uint32_t a = 0; a < nf.order; ++a) {
    raw.scalars[a].resize(nf.order);
    for (std::uint32_t x = 0; x < nf.order; ++x) raw.scalars[a][x] = nf.mul(a, x);
  }
  raw.description = "(F,F) for " + nf.description;
  return raw;
}

}  // namespace nearvec
