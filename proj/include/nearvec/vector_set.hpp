#pragma once

#include <cstdint>
#include <vector>

#include "nearvec/twisted_space.hpp"

namespace nearvec {

/// Dense membership set over the codes of one space; iteration follows the
/// enumeration order.
class VectorSet {
 public:
  VectorSet() = default;
  explicit VectorSet(std::uint32_t universe) : bits_(universe, false) {}

  std::uint32_t universe() const { return static_cast<std::uint32_t>(bits_.size()); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(VectorCode v) const { return v < bits_.size() && bits_[v]; }
  /// Returns true if `v` was not already present.
  bool insert(VectorCode v) {
    if (bits_[v]) return false;
    bits_[v] = true;
    ++count_;
    return true;
  }

  std::vector<VectorCode> codes() const {
    std::vector<VectorCode> out;
    out.reserve(count_);
    for (std::uint32_t v = 0; v < bits_.size(); ++v) {
      if (bits_[v]) out.push_back(v);
    }
    return out;
  }

  bool is_subset_of(const VectorSet& other) const {
    for (std::uint32_t v = 0; v < bits_.size(); ++v) {
      if (bits_[v] && !other.contains(v)) return false;
    }
    return true;
  }

  friend bool operator==(const VectorSet& a, const VectorSet& b) {
    return a.count_ == b.count_ && a.bits_ == b.bits_;
  }

  static VectorSet all(std::uint32_t universe) {
    VectorSet s(universe);
    s.bits_.assign(universe, true);
    s.count_ = universe;
    return s;
  }

 private:
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

/// Additive subgroup generated by `seeds` (reached from 0 by adding seeds).
VectorSet additive_closure(const TwistedSpace& space, const std::vector<VectorCode>& seeds);

/// Smallest superset of `seeds` closed under vec_add and scalar_mul, by plain
/// fixed-point iteration. Uses no structure theory; serves as an oracle.
VectorSet naive_closure(const TwistedSpace& space, const std::vector<VectorCode>& seeds);

/// All codes of {v : supp(v) within `coords`}.
VectorSet coordinate_subspace(const TwistedSpace& space, const std::vector<std::size_t>& coords);

}  // namespace nearvec
