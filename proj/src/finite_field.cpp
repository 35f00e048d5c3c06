#include "nearvec/finite_field.hpp"

#include <numeric>
#include <sstream>

#include "nearvec/error.hpp"

namespace nearvec {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotInQuasiKernel: return "NotInQuasiKernel";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorKind::NotABasis: return "NotABasis";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;

// Remainder of `a` modulo the monic polynomial `m` over Z_p.
Poly poly_mod(Poly a, std::span<const std::uint32_t> m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t i = 0; i < dm; ++i) {
        const std::uint64_t sub = static_cast<std::uint64_t>(lead) * m[i] % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

Poly unpack(std::uint32_t index, std::uint32_t p, std::uint32_t r) {
  Poly c(r, 0);
  for (std::uint32_t i = 0; i < r; ++i) {
    c[i] = index % p;
    index /= p;
  }
  return c;
}

std::uint32_t pack(const Poly& c, std::uint32_t p) {
  std::uint32_t index = 0;
  for (std::size_t i = c.size(); i-- > 0;) index = index * p + c[i];
  return index;
}

// Schoolbook product reduced modulo `m`; used only while building tables.
Poly poly_mulmod(const Poly& a, const Poly& b, std::span<const std::uint32_t> m,
                 std::uint32_t p) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  out = poly_mod(std::move(out), m, p);
  out.resize(m.size() - 1, 0);
  return out;
}

Poly poly_powmod(Poly base, std::uint64_t k, std::span<const std::uint32_t> m,
                 std::uint32_t p) {
  Poly result(m.size() - 1, 0);
  result[0] = 1;
  while (k > 0) {
    if (k & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    k >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

constexpr std::uint32_t kAddTableMaxOrder = 256;

}  // namespace

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  if (poly.size() < 2 || poly.back() != 1) {
    throw Error(ErrorKind::InvalidArgument, "polynomial must be monic of degree >= 1");
  }
  const std::size_t deg = poly.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t lower = 0; lower < count; ++lower) {
      Poly divisor = unpack(static_cast<std::uint32_t>(lower), p, static_cast<std::uint32_t>(d));
      divisor.push_back(1);
      Poly rem = poly_mod(Poly(poly.begin(), poly.end()), divisor, p);
      bool zero = true;
      for (auto c : rem) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

Field Field::make(std::uint32_t p, std::uint32_t r,
                  std::optional<std::vector<std::uint32_t>> modulus, const Limits& limits) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  }
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    order *= p;
    if (order > limits.max_field_order) {
      throw Error(ErrorKind::TooLarge, "field order " + std::to_string(p) + "^" +
                                           std::to_string(r) + " exceeds " +
                                           std::to_string(limits.max_field_order));
    }
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->r = r;
  t->order = static_cast<std::uint32_t>(order);

  if (r == 1) {
    t->modulus = {0, 1};
  } else if (modulus) {
    auto& m = *modulus;
    if (m.size() != r + 1 || m.back() != 1) {
      throw Error(ErrorKind::InvalidArgument,
                  "modulus must be monic of degree " + std::to_string(r));
    }
    for (auto c : m) {
      if (c >= p) throw Error(ErrorKind::InvalidArgument, "modulus coefficient out of range");
    }
    if (!is_irreducible(p, m)) {
      throw Error(ErrorKind::ReduciblePolynomial, "modulus is reducible over Z_" + std::to_string(p));
    }
    t->modulus = m;
  } else {
    for (std::uint32_t lower = 0; lower < t->order; ++lower) {
      Poly m = unpack(lower, p, r);
      m.push_back(1);
      if (is_irreducible(p, m)) {
        t->modulus = std::move(m);
        break;
      }
    }
  }

  const std::uint32_t q = t->order;
  const std::uint32_t m = q - 1;
  t->neg.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    Poly c = unpack(a, p, r);
    for (auto& x : c) x = (p - x) % p;
    t->neg[a] = pack(c, p);
  }

  // Smallest primitive element: g^(m/l) != 1 for each prime l | m.
  const auto factors = prime_factors(m);
  std::uint32_t generator = 0;
  for (std::uint32_t g = 1; g < q && generator == 0; ++g) {
    Poly gp = unpack(g, p, r);
    bool primitive = true;
    for (auto l : factors) {
      if (pack(poly_powmod(gp, m / l, t->modulus, p), p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) generator = g;
  }
  if (generator == 0) throw Error(ErrorKind::ConstructionFailed, "no primitive element found");

  t->exp.resize(2 * static_cast<std::size_t>(m));
  t->log.assign(q, 0);
  const Poly gp = unpack(generator, p, r);
  Poly cur = unpack(1, p, r);
  for (std::uint32_t k = 0; k < m; ++k) {
    const std::uint32_t idx = pack(cur, p);
    t->exp[k] = idx;
    t->exp[k + m] = idx;
    t->log[idx] = k;
    cur = poly_mulmod(cur, gp, t->modulus, p);
  }

  Field f(t);
  if (q <= kAddTableMaxOrder) {
    t->add_table.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) t->add_table[a * q + b] = f.add_digits(a, b);
    }
  }
  return f;
}

std::uint32_t Field::add_digits(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t p = t_->p;
  if (t_->r == 1) {
    const std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < t_->r; ++i) {
    std::uint32_t s = a % p + b % p;
    if (s >= p) s -= p;
    out += s * place;
    place *= p;
    a /= p;
    b /= p;
  }
  return out;
}

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << t_->p;
  if (t_->r > 1) os << "^" << t_->r;
  os << ")";
  return os.str();
}

FieldElement Field::inv(FieldElement a) const {
  if (a.index == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint32_t m = mult_order();
  return {t_->exp[(m - t_->log[a.index]) % m]};
}

FieldElement Field::pow(FieldElement a, std::int64_t k) const {
  if (a.index == 0) {
    if (k < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return k == 0 ? one() : zero();
  }
  const std::int64_t m = mult_order();
  std::int64_t e = (static_cast<std::int64_t>(t_->log[a.index]) * (k % m)) % m;
  if (e < 0) e += m;
  return {t_->exp[static_cast<std::size_t>(e)]};
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out(t_->order);
  for (std::uint32_t i = 0; i < t_->order; ++i) out[i] = {i};
  return out;
}

std::vector<std::uint32_t> Field::coeffs(FieldElement a) const {
  return unpack(a.index, t_->p, t_->r);
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != t_->r) {
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(t_->r) + " coefficients");
  }
  for (auto c : coeffs) {
    if (c >= t_->p) throw Error(ErrorKind::InvalidArgument, "coefficient out of range");
  }
  return {pack(Poly(coeffs.begin(), coeffs.end()), t_->p)};
}

FieldElement Field::from_int(std::int64_t value) const {
  const std::int64_t p = t_->p;
  std::int64_t v = value % p;
  if (v < 0) v += p;
  return {static_cast<std::uint32_t>(v)};
}

bool Field::is_square(FieldElement a) const {
  if (a.index == 0) return true;
  if (t_->p == 2) return true;
  return t_->log[a.index] % 2 == 0;
}

}  // namespace nearvec
