#include "nearvec/twisted_space.hpp"

#include <numeric>
#include <sstream>

#include "nearvec/vector_set.hpp"

namespace nearvec {

namespace {

std::string format_vector(const Field& f, const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i) os << ",";
    if (f.degree() == 1) {
      os << v.coords[i].index;
    } else {
      os << "[";
      auto c = f.coeffs(v.coords[i]);
      for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
      os << "]";
    }
  }
  os << ")";
  return os.str();
}

}  // namespace

TwistedSpace TwistedSpace::make(Field field, const std::vector<std::uint64_t>& exponents,
                                const Limits& limits) {
  if (exponents.empty()) throw Error(ErrorKind::InvalidArgument, "at least one exponent required");
  const std::uint64_t m = field.mult_order();
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const std::uint64_t q = exponents[i];
    if (q < 1) throw Error(ErrorKind::InvalidArgument, "exponents must be >= 1");
    const std::uint64_t g = std::gcd(q, m);
    if (g != 1) {
      // alpha = g0 primitive and beta = g0^{1 + m/g} share the same q-th power.
      const FieldElement alpha = field.primitive_element();
      const FieldElement beta = field.exp(1 + m / g);
      Vector e{std::vector<FieldElement>(exponents.size(), field.zero())};
      e.coords[i] = field.one();
      std::ostringstream os;
      os << "exponent " << q << " at coordinate " << i << " is not coprime to |F*| = " << m
         << ": gcd(" << q << "," << m << ") = " << g << "; alpha=" << alpha.index
         << " and beta=" << beta.index << " act identically on " << format_vector(field, e)
         << " (fixed-point-freeness fails)";
      throw NotCoprimeError(i, q, m, g, alpha, beta, std::move(e), os.str());
    }
  }

  std::uint64_t size = 1;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    size *= field.order();
    if (size > limits.max_vectors) {
      throw Error(ErrorKind::TooLarge, "space size exceeds " + std::to_string(limits.max_vectors));
    }
  }

  TwistedSpace s;
  s.field_ = std::move(field);
  const Field& f = s.field_;
  const std::size_t n = exponents.size();
  s.size_ = static_cast<std::uint32_t>(size);
  s.exponents_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<std::uint32_t>(exponents[i] % m);
    s.exponents_[i] = r == 0 ? static_cast<std::uint32_t>(m) : r;
  }
  s.stride_.resize(n);
  std::uint32_t stride = 1;
  for (std::size_t i = n; i-- > 0;) {
    s.stride_[i] = stride;
    stride *= f.order();
  }
  s.psi_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.psi_[i].resize(f.order());
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      s.psi_[i][a] = f.pow(FieldElement{a}, s.exponents_[i]).index;
    }
  }
  s.classes_ = exponent_classes(s);
  s.class_of_.resize(n);
  for (std::size_t c = 0; c < s.classes_.size(); ++c) {
    for (auto i : s.classes_[c]) s.class_of_[i] = c;
  }
  return s;
}

std::vector<std::vector<std::size_t>> exponent_classes(const TwistedSpace& space) {
  const Field& f = space.field();
  const std::uint64_t m = f.mult_order();
  const auto& q = space.exponents();
  auto equivalent = [&](std::uint64_t a, std::uint64_t b) {
    std::uint64_t t = a % m;
    for (std::uint32_t l = 0; l < f.degree(); ++l) {
      if (t == b % m) return true;
      t = t * f.characteristic() % m;
    }
    return false;
  };
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < q.size(); ++i) {
    bool placed = false;
    for (auto& c : classes) {
      if (equivalent(q[c.front()], q[i])) {
        c.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

std::string TwistedSpace::describe() const {
  std::ostringstream os;
  os << field_.name() << "^" << dimension() << " exponents (";
  for (std::size_t i = 0; i < exponents_.size(); ++i) os << (i ? "," : "") << exponents_[i];
  os << ")";
  return os.str();
}

VectorCode TwistedSpace::encode(const Vector& v) const {
  if (v.coords.size() != dimension()) {
    throw Error(ErrorKind::ShapeMismatch, "vector has " + std::to_string(v.coords.size()) +
                                              " coordinates, expected " +
                                              std::to_string(dimension()));
  }
  VectorCode code = 0;
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (!field_.contains(v.coords[i])) {
      throw Error(ErrorKind::InvalidArgument, "coordinate outside the field");
    }
    code += v.coords[i].index * stride_[i];
  }
  return code;
}

Vector TwistedSpace::decode(VectorCode code) const {
  Vector v;
  v.coords.resize(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) v.coords[i] = {coord(code, i)};
  return v;
}

VectorCode TwistedSpace::add(VectorCode a, VectorCode b) const {
  const std::uint32_t q = field_.order();
  VectorCode out = 0;
  for (std::size_t i = dimension(); i-- > 0;) {
    const std::uint32_t s = stride_[i];
    out += field_.add_raw(a % q, b % q) * s;
    a /= q;
    b /= q;
  }
  return out;
}

VectorCode TwistedSpace::neg(VectorCode a) const {
  const std::uint32_t q = field_.order();
  VectorCode out = 0;
  for (std::size_t i = dimension(); i-- > 0;) {
    out += field_.neg_raw(a % q) * stride_[i];
    a /= q;
  }
  return out;
}

VectorCode TwistedSpace::scale(FieldElement alpha, VectorCode v) const {
  const std::uint32_t q = field_.order();
  VectorCode out = 0;
  for (std::size_t i = dimension(); i-- > 0;) {
    out += field_.mul_raw(psi_[i][alpha.index], v % q) * stride_[i];
    v /= q;
  }
  return out;
}

std::vector<std::size_t> TwistedSpace::support(VectorCode v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (coord(v, i) != 0) out.push_back(i);
  }
  return out;
}

VectorCode TwistedSpace::restrict(VectorCode v, const std::vector<std::size_t>& coords) const {
  VectorCode out = 0;
  for (auto i : coords) out += coord(v, i) * stride_[i];
  return out;
}

Vector TwistedSpace::scalar_mul(FieldElement alpha, const Vector& v) const {
  return decode(scale(alpha, encode(v)));
}

Vector TwistedSpace::vec_add(const Vector& a, const Vector& b) const {
  return decode(add(encode(a), encode(b)));
}

Vector TwistedSpace::vec_neg(const Vector& v) const { return decode(neg(encode(v))); }

VectorSet additive_closure(const TwistedSpace& space, const std::vector<VectorCode>& seeds) {
  VectorSet out(space.size());
  std::vector<VectorCode> frontier{0};
  out.insert(0);
  while (!frontier.empty()) {
    const VectorCode x = frontier.back();
    frontier.pop_back();
    for (auto g : seeds) {
      const VectorCode y = space.add(x, g);
      if (out.insert(y)) frontier.push_back(y);
    }
  }
  return out;
}

VectorSet naive_closure(const TwistedSpace& space, const std::vector<VectorCode>& seeds) {
  // Grow the additive subgroup until scaling adds nothing new. A finite subset
  // closed under + is a subgroup, so this is the smallest closed superset.
  std::vector<VectorCode> gens = seeds;
  VectorSet out = additive_closure(space, gens);
  const auto scalars = space.field().elements();
  for (bool grew = true; grew;) {
    grew = false;
    for (auto x : out.codes()) {
      for (auto a : scalars) {
        const VectorCode y = space.scale(a, x);
        if (!out.contains(y)) {
          gens.push_back(y);
          out = additive_closure(space, gens);
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
  }
  return out;
}

VectorSet coordinate_subspace(const TwistedSpace& space, const std::vector<std::size_t>& coords) {
  VectorSet out(space.size());
  for (VectorCode v = 0; v < space.size(); ++v) {
    if (space.restrict(v, coords) == v) out.insert(v);
  }
  return out;
}

}  // namespace nearvec
