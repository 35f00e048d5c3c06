#include "nearvec/near_field.hpp"

#include <algorithm>
#include <functional>

#include "nearvec/error.hpp"

namespace nearvec {

void AxiomReport::set(std::string name, Verdict verdict) {
  for (auto& [n, v] : entries_) {
    if (n == name) {
      v = std::move(verdict);
      return;
    }
  }
  entries_.emplace_back(std::move(name), std::move(verdict));
}

const Verdict& AxiomReport::at(std::string_view name) const {
  for (const auto& [n, v] : entries_) {
    if (n == name) return v;
  }
  throw Error(ErrorKind::InvalidArgument, "no axiom named " + std::string(name));
}

bool AxiomReport::contains(std::string_view name) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const auto& e) { return e.first == name; });
}

bool AxiomReport::all_of(std::span<const std::string_view> names) const {
  return !first_failure(names).has_value();
}

std::optional<std::string> AxiomReport::first_failure(
    std::span<const std::string_view> names) const {
  for (auto name : names) {
    if (!at(name).pass) return std::string(name);
  }
  return std::nullopt;
}

std::optional<std::string> AxiomReport::first_failure() const {
  for (const auto& [n, v] : entries_) {
    if (!v.pass) return n;
  }
  return std::nullopt;
}

bool is_near_field(const AxiomReport& report) { return report.all_of(kNearFieldLaws); }

bool is_division_ring(const AxiomReport& report) {
  return is_near_field(report) && report.at("right_distributive").pass;
}

namespace {

constexpr std::uint32_t kMaxTableOrder = 1024;

NearField tables_from(const Field& f, std::function<std::uint32_t(std::uint32_t, std::uint32_t)> mul,
                      NearFieldOrigin origin, std::string description) {
  const std::uint32_t q = f.order();
  if (q > kMaxTableOrder) {
    throw Error(ErrorKind::TooLarge, "near-field tables limited to order " +
                                         std::to_string(kMaxTableOrder));
  }
  NearField nf;
  nf.order = q;
  nf.add_table.resize(static_cast<std::size_t>(q) * q);
  nf.mul_table.resize(static_cast<std::size_t>(q) * q);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      nf.add_table[a * q + b] = f.add_raw(a, b);
      nf.mul_table[a * q + b] = mul(a, b);
    }
  }
  nf.zero = 0;
  nf.one = 1;
  nf.origin = origin;
  nf.description = std::move(description);
  return nf;
}

Verdict fail(std::vector<std::uint64_t> witness, std::string detail = {}) {
  return Verdict{false, std::move(witness), std::move(detail)};
}

}  // namespace

NearField nf_from_field(const Field& field) {
  return tables_from(
      field, [&](std::uint32_t a, std::uint32_t b) { return field.mul_raw(a, b); },
      NearFieldOrigin::FromField, field.name());
}

NearField nf_dickson9() {
  const Field f = Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  // Twist selected by the left or right factor, applied to the left or right
  // factor. The axiom checker decides which coupling is a left near-field.
  for (int selector = 0; selector < 2; ++selector) {
    for (int target = 0; target < 2; ++target) {
      auto mul = [&](std::uint32_t x, std::uint32_t y) {
        const FieldElement s{selector == 0 ? x : y};
        FieldElement a{x}, b{y};
        if (!f.is_square(s)) {
          if (target == 0) a = f.pow(a, 3);
          else b = f.pow(b, 3);
        }
        return f.mul(a, b).index;
      };
      NearField nf = tables_from(f, mul, NearFieldOrigin::Dickson9,
                                 "Dickson near-field of order 9");
      const AxiomReport report = nf_check_axioms(nf);
      if (is_near_field(report) && !report.at("right_distributive").pass) return nf;
    }
  }
  throw Error(ErrorKind::ConstructionFailed, "no Dickson coupling satisfies the near-field laws");
}

AxiomReport nf_check_axioms(const NearField& nf) {
  AxiomReport report;
  const std::uint32_t n = nf.order;
  const auto add = [&](std::uint32_t a, std::uint32_t b) { return nf.add(a, b); };
  const auto mul = [&](std::uint32_t a, std::uint32_t b) { return nf.mul(a, b); };

  auto closed = [&](const std::vector<std::uint32_t>& table) -> Verdict {
    if (table.size() != static_cast<std::size_t>(n) * n) return fail({}, "table has wrong shape");
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        if (table[a * n + b] >= n) return fail({a, b});
      }
    }
    return {};
  };
  const Verdict add_closed = closed(nf.add_table);
  Verdict mul_closed = closed(nf.mul_table);
  const bool ids_ok = nf.zero < n && nf.one < n;
  if (mul_closed.pass && ids_ok) {
    for (std::uint32_t a = 0; a < n && mul_closed.pass; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        if (a != nf.zero && b != nf.zero && mul(a, b) == nf.zero) {
          mul_closed = fail({a, b}, "product of nonzero elements is zero");
          break;
        }
      }
    }
  }
  report.set("add_closed", add_closed);

  const bool usable = add_closed.pass && closed(nf.mul_table).pass && ids_ok;
  const std::vector<std::string_view> rest = {
      "add_associative", "add_identity", "add_inverse",      "add_commutative",
      "mul_closed",      "mul_associative", "mul_identity", "mul_inverse",
      "left_distributive", "zero_symmetric", "right_distributive"};
  if (!usable) {
    for (auto name : rest) {
      report.set(std::string(name), name == "mul_closed" ? mul_closed
                                                         : fail({}, "tables not closed"));
    }
    return report;
  }

  auto associative = [&](auto op) -> Verdict {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c)
          if (op(op(a, b), c) != op(a, op(b, c))) return fail({a, b, c});
    return {};
  };

  report.set("add_associative", associative(add));

  Verdict identity;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (add(nf.zero, a) != a || add(a, nf.zero) != a) {
      identity = fail({a});
      break;
    }
  }
  report.set("add_identity", identity);

  Verdict inverse;
  for (std::uint32_t a = 0; a < n && inverse.pass; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < n && !found; ++b) {
      found = add(a, b) == nf.zero && add(b, a) == nf.zero;
    }
    if (!found) inverse = fail({a}, "no additive inverse");
  }
  report.set("add_inverse", inverse);

  Verdict commutative;
  for (std::uint32_t a = 0; a < n && commutative.pass; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      if (add(a, b) != add(b, a)) {
        commutative = fail({a, b});
        break;
      }
  report.set("add_commutative", commutative);
  report.set("mul_closed", mul_closed);
  report.set("mul_associative", associative(mul));

  Verdict mul_identity;
  if (nf.one == nf.zero) mul_identity = fail({nf.one}, "one equals zero");
  for (std::uint32_t a = 0; a < n && mul_identity.pass; ++a) {
    if (mul(nf.one, a) != a || mul(a, nf.one) != a) mul_identity = fail({a});
  }
  report.set("mul_identity", mul_identity);

  Verdict mul_inverse;
  for (std::uint32_t a = 0; a < n && mul_inverse.pass; ++a) {
    if (a == nf.zero) continue;
    bool found = false;
    for (std::uint32_t b = 0; b < n && !found; ++b) {
      found = mul(a, b) == nf.one && mul(b, a) == nf.one;
    }
    if (!found) mul_inverse = fail({a}, "no multiplicative inverse");
  }
  report.set("mul_inverse", mul_inverse);

  auto distributive = [&](bool left) -> Verdict {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c) {
          const bool ok = left ? mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
                               : mul(add(a, b), c) == add(mul(a, c), mul(b, c));
          if (!ok) return fail({a, b, c});
        }
    return {};
  };
  report.set("left_distributive", distributive(true));

  Verdict zero_sym;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (mul(nf.zero, a) != nf.zero || mul(a, nf.zero) != nf.zero) {
      zero_sym = fail({a});
      break;
    }
  }
  report.set("zero_symmetric", zero_sym);
  report.set("right_distributive", distributive(false));
  return report;
}

std::vector<std::uint32_t> nf_distributive_elements(const NearField& nf) {
  std::vector<std::uint32_t> out;
  const std::uint32_t n = nf.order;
  for (std::uint32_t k = 0; k < n; ++k) {
    bool ok = true;
    for (std::uint32_t a = 0; a < n && ok; ++a)
      for (std::uint32_t b = 0; b < n && ok; ++b)
        ok = nf.mul(nf.add(a, b), k) == nf.add(nf.mul(a, k), nf.mul(b, k));
    if (ok) out.push_back(k);
  }
  return out;
}

namespace {

struct IsoState {
  std::vector<std::int64_t> image;
  std::vector<char> used;
  std::vector<std::uint32_t> assigned;
};

class IsoSearch {
 public:
  IsoSearch(const NearField& a, const NearField& b) : a_(a), b_(b) {}

  std::optional<std::vector<std::uint32_t>> run() {
    IsoState s;
    s.image.assign(a_.order, -1);
    s.used.assign(a_.order, 0);
    if (!assign(s, a_.zero, b_.zero) || !assign(s, a_.one, b_.one) || !propagate(s)) {
      return std::nullopt;
    }
    return search(s);
  }

 private:
  bool assign(IsoState& s, std::uint32_t x, std::uint32_t y) {
    if (s.image[x] >= 0) return s.image[x] == y;
    if (s.used[y]) return false;
    s.image[x] = y;
    s.used[y] = 1;
    s.assigned.push_back(x);
    queue_.push_back(x);
    return true;
  }

  bool propagate(IsoState& s) {
    while (!queue_.empty()) {
      const std::uint32_t x = queue_.back();
      queue_.pop_back();
      for (std::size_t i = 0; i < s.assigned.size(); ++i) {
        const std::uint32_t c = s.assigned[i];
        const auto fx = static_cast<std::uint32_t>(s.image[x]);
        const auto fc = static_cast<std::uint32_t>(s.image[c]);
        if (!assign(s, a_.add(x, c), b_.add(fx, fc)) || !assign(s, a_.add(c, x), b_.add(fc, fx)) ||
            !assign(s, a_.mul(x, c), b_.mul(fx, fc)) || !assign(s, a_.mul(c, x), b_.mul(fc, fx))) {
          queue_.clear();
          return false;
        }
      }
    }
    return true;
  }

  std::optional<std::vector<std::uint32_t>> search(const IsoState& s) {
    std::uint32_t next = a_.order;
    for (std::uint32_t x = 0; x < a_.order; ++x) {
      if (s.image[x] < 0) {
        next = x;
        break;
      }
    }
    if (next == a_.order) {
      std::vector<std::uint32_t> out(a_.order);
      for (std::uint32_t x = 0; x < a_.order; ++x) out[x] = static_cast<std::uint32_t>(s.image[x]);
      return out;
    }
    for (std::uint32_t y = 0; y < b_.order; ++y) {
      if (s.used[y]) continue;
      IsoState child = s;
      if (assign(child, next, y) && propagate(child)) {
        if (auto found = search(child)) return found;
      }
      queue_.clear();
    }
    return std::nullopt;
  }

  const NearField& a_;
  const NearField& b_;
  std::vector<std::uint32_t> queue_;
};

}  // namespace

std::optional<std::vector<std::uint32_t>> nf_isomorphic(const NearField& a, const NearField& b,
                                                        const Limits& limits) {
  if (a.order > limits.max_isomorphism_order || b.order > limits.max_isomorphism_order) {
    throw Error(ErrorKind::TooLarge, "isomorphism search limited to order " +
                                         std::to_string(limits.max_isomorphism_order));
  }
  if (a.order != b.order) return std::nullopt;
  auto map = IsoSearch(a, b).run();
  if (map && !nf_is_isomorphism(a, b, *map)) {
    throw Error(ErrorKind::ConstructionFailed, "isomorphism search produced an invalid map");
  }
  return map;
}

bool nf_is_isomorphism(const NearField& a, const NearField& b,
                       const std::vector<std::uint32_t>& map) {
  if (a.order != b.order || map.size() != a.order) return false;
  std::vector<char> hit(b.order, 0);
  for (auto y : map) {
    if (y >= b.order || hit[y]) return false;
    hit[y] = 1;
  }
  for (std::uint32_t x = 0; x < a.order; ++x) {
    for (std::uint32_t y = 0; y < a.order; ++y) {
      if (map[a.add(x, y)] != b.add(map[x], map[y])) return false;
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> nf_involutions(const NearField& nf) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < nf.order; ++x) {
    if (x != nf.zero && x != nf.one && nf.mul(x, x) == nf.one) out.push_back(x);
  }
  return out;
}

}  // namespace nearvec
