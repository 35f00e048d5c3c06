#include "nearvec/corpus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace nearvec {

std::string CorpusEntry::label() const {
  std::ostringstream os;
  os << "GF(" << p;
  if (r > 1) os << "^" << r;
  os << ")^" << exponents.size() << " (";
  for (std::size_t i = 0; i < exponents.size(); ++i) os << (i ? "," : "") << exponents[i];
  os << ")";
  return os.str();
}

std::vector<std::vector<std::uint64_t>> canonical_exponent_tuples(const Field& field,
                                                                   std::size_t n) {
  const std::uint64_t m = field.mult_order();
  const std::uint64_t p = field.characteristic();
  std::vector<std::uint64_t> units;
  for (std::uint64_t q = 1; q <= m; ++q) {
    if (std::gcd(q, m) == 1) units.push_back(q);
  }
  auto frobenius_min = [&](std::uint64_t q) {
    std::uint64_t best = q % m == 0 ? m : q % m, t = q % m;
    for (std::uint32_t l = 0; l < field.degree(); ++l) {
      best = std::min(best, t == 0 ? m : t);
      t = t * p % m;
    }
    return best;
  };
  auto canonical = [&](const std::vector<std::uint64_t>& tuple) {
    std::vector<std::uint64_t> best;
    for (auto u : units) {
      std::vector<std::uint64_t> t;
      for (auto q : tuple) t.push_back(frobenius_min(q * u));
      std::sort(t.begin(), t.end());
      if (best.empty() || t < best) best = t;
    }
    return best;
  };

  std::set<std::vector<std::uint64_t>> seen;
  std::vector<std::uint64_t> tuple(n);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t pos, std::size_t from) {
    if (pos == n) {
      seen.insert(canonical(tuple));
      return;
    }
    for (std::size_t i = from; i < units.size(); ++i) {
      tuple[pos] = units[i];
      walk(pos + 1, i);
    }
  };
  walk(0, 0);
  return {seen.begin(), seen.end()};
}

std::vector<CorpusEntry> standard_corpus(std::uint64_t max_size) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> fields;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    fields.emplace_back(p, 1);
    fields.emplace_back(p, 2);
  }
  fields.emplace_back(2, 3);
  std::vector<CorpusEntry> out;
  for (auto [p, r] : fields) {
    const Field f = Field::make(p, r);
    std::uint64_t size = 1;
    for (std::size_t n = 1; n <= 3; ++n) {
      size *= f.order();
      if (size > max_size) break;
      for (auto& e : canonical_exponent_tuples(f, n)) out.push_back({p, r, e, size});
    }
  }
  return out;
}

}  // namespace nearvec
