#pragma once

// Reference computations for the tests. Nothing here calls into the library
// beyond the space's primitive add/scale and encode/decode.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <vector>

#include "nearvec/twisted_space.hpp"
#include "nearvec/vector_set.hpp"

namespace oracle {

// GF(p^r) by schoolbook polynomial arithmetic on coefficient vectors.
struct PolyField {
  std::uint32_t p;
  std::uint32_t r;
  std::vector<std::uint32_t> modulus;  // monic, constant term first, length r + 1

  std::uint32_t order() const {
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < r; ++i) q *= p;
    return q;
  }

  std::vector<std::uint32_t> unpack(std::uint32_t x) const {
    std::vector<std::uint32_t> c(r);
    for (auto& d : c) {
      d = x % p;
      x /= p;
    }
    return c;
  }

  std::uint32_t pack(const std::vector<std::uint32_t>& c) const {
    std::uint32_t x = 0;
    for (std::size_t i = c.size(); i-- > 0;) x = x * p + c[i];
    return x;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = unpack(a), y = unpack(b);
    for (std::uint32_t i = 0; i < r; ++i) x[i] = (x[i] + y[i]) % p;
    return pack(x);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const auto x = unpack(a), y = unpack(b);
    std::vector<std::uint64_t> prod(2 * r, 0);
    for (std::uint32_t i = 0; i < r; ++i)
      for (std::uint32_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    // x^r = -(m_0 + ... + m_{r-1} x^{r-1})
    for (std::size_t d = prod.size(); d-- > r;) {
      const std::uint64_t c = prod[d];
      if (!c) continue;
      prod[d] = 0;
      for (std::uint32_t k = 0; k < r; ++k) {
        prod[d - r + k] = (prod[d - r + k] + (p - modulus[k]) * c) % p;
      }
    }
    std::vector<std::uint32_t> out(r);
    for (std::uint32_t i = 0; i < r; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return pack(out);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t out = 1;
    for (std::uint64_t i = 0; i < k; ++i) out = mul(out, a);
    return out;
  }
};

// Smallest set containing `seeds` and closed under + and every scalar,
// by alternating additive growth and scalar saturation.
inline nearvec::VectorSet closure(const nearvec::TwistedSpace& s,
                                  const std::vector<nearvec::VectorCode>& seeds) {
  std::vector<nearvec::VectorCode> gens;
  std::vector<nearvec::VectorCode> members{0};
  nearvec::VectorSet in(s.size());
  in.insert(0);
  std::vector<nearvec::VectorCode> pending = seeds;
  while (!pending.empty()) {
    for (auto g : pending) {
      if (in.contains(g)) continue;
      gens.push_back(g);
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (auto h : gens) {
          const auto x = s.add(members[i], h);
          if (in.insert(x)) members.push_back(x);
        }
      }
    }
    pending.clear();
    for (auto m : members) {
      for (std::uint32_t a = 0; a < s.scalar_count(); ++a) {
        const auto x = s.scale({a}, m);
        if (!in.contains(x)) pending.push_back(x);
      }
    }
  }
  return in;
}

// v in Q(V) straight from the definition, with field arithmetic done by PolyField
// and the action alpha^{q_i} computed by repeated multiplication.
inline bool in_quasi_kernel(const nearvec::TwistedSpace& s, const PolyField& f,
                            const nearvec::Vector& v) {
  const std::uint32_t q = f.order();
  const std::size_t n = v.coords.size();
  // image of each scalar on v
  std::vector<std::vector<std::uint32_t>> img(q, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::size_t i = 0; i < n; ++i)
      img[a][i] = f.mul(f.pow(a, s.exponents()[i]), v.coords[i].index);
  std::set<std::vector<std::uint32_t>> multiples(img.begin(), img.end());
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      std::vector<std::uint32_t> sum(n);
      for (std::size_t i = 0; i < n; ++i) sum[i] = f.add(img[a][i], img[b][i]);
      if (!multiples.count(sum)) return false;
    }
  }
  return true;
}

// Vector code from plain field indices.
inline nearvec::VectorCode code(const nearvec::TwistedSpace& s, std::initializer_list<std::uint32_t> xs) {
  nearvec::Vector v;
  for (auto x : xs) v.coords.push_back({x});
  return s.encode(v);
}

inline PolyField poly_field(const nearvec::Field& f) {
  return {f.characteristic(), f.degree(), f.modulus().size() > 1 ? f.modulus()
                                                                 : std::vector<std::uint32_t>{0, 1}};
}

}  // namespace oracle
