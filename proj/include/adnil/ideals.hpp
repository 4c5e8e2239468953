#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "adnil/poset.hpp"
#include "adnil/root_set.hpp"
#include "adnil/root_system.hpp"

namespace adnil {

/// Subset I of the simple roots; bit i-1 set iff alpha_i is in I.
class ParabolicMask {
public:
  constexpr ParabolicMask() = default;
  constexpr ParabolicMask(int rank, std::uint32_t bits) : bits_(bits), rank_(rank) {}

  static constexpr ParabolicMask none(int rank) { return {rank, 0}; }
  static constexpr ParabolicMask all(int rank) { return {rank, (std::uint32_t{1} << rank) - 1}; }
  /// From 1-based simple-root labels.
  static ParabolicMask from_labels(int rank, const std::vector<int>& labels) {
    std::uint32_t bits = 0;
    for (int a : labels) {
      if (a < 1 || a > rank)
        throw std::out_of_range("simple root index " + std::to_string(a) + " outside 1.." + std::to_string(rank));
      bits |= std::uint32_t{1} << (a - 1);
    }
    return {rank, bits};
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int rank() const { return rank_; }
  /// 0-based simple index.
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool is_subset_of(ParabolicMask o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> labels() const {
    std::vector<int> out;
    for (int i = 0; i < rank_; ++i)
      if (contains(i)) out.push_back(i + 1);
    return out;
  }

  friend constexpr bool operator==(ParabolicMask, ParabolicMask) = default;

private:
  std::uint32_t bits_ = 0;
  int rank_ = 0;
};

/// Filter phi of the root poset with its per-filter classification.
struct IdealRecord {
  RootSet phi;
  RootSet min_roots;
  ParabolicMask compat;
  bool abelian = true;
  std::size_t size = 0;
};

/// Whether phi is closed for the parabolic p_{alpha_i}: alpha_i is not in phi,
/// and beta - alpha_i lies in phi whenever beta is in phi and beta - alpha_i
/// is a positive root. `i` is 0-based.
inline bool parabolic_compatible(const RootSystem& rs, const RootSet& phi, int i) {
  bool ok = true;
  phi.for_each([&](std::size_t b) {
    if (!ok) return;
    const Difference d = rs.subtract_simple(b, i);
    if (std::holds_alternative<Zero>(d)) {
      ok = false;
    } else if (const auto* r = std::get_if<std::size_t>(&d)) {
      ok = phi.test(*r);
    }
  });
  return ok;
}

/// J(phi): the simple roots alpha with phi in F_{alpha}. phi lies in F_I iff
/// I is a subset of this mask.
inline ParabolicMask compatibility_mask(const RootSystem& rs, const RootSet& phi) {
  std::uint32_t bits = 0;
  for (int i = 0; i < rs.rank(); ++i)
    if (parabolic_compatible(rs, phi, i)) bits |= std::uint32_t{1} << i;
  return {rs.rank(), bits};
}

/// phi is abelian iff theta is not a sum of two (not necessarily distinct)
/// members of phi.
inline bool is_abelian(const RootSystem& rs, const RootSet& phi) {
  const int half = rs.theta().height;
  bool abelian = true;
  phi.for_each([&](std::size_t b) {
    if (!abelian || 2 * rs.root(b).height > half) return;
    if (auto c = rs.theta_complement(b); c && phi.test(*c)) abelian = false;
  });
  return abelian;
}

inline IdealRecord make_ideal_record(const RootSystem& rs, const Poset& p, const RootSet& phi) {
  return IdealRecord{phi, minimal_elements(p, phi), compatibility_mask(rs, phi), is_abelian(rs, phi), phi.count()};
}

}  // namespace adnil
