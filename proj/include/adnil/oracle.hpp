#pragma once

// Brute-force reference implementations. They work from root coordinates
// and literal definitions only, and never call the table-driven routines
// they are used to check.

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "adnil/errors.hpp"
#include "adnil/ideals.hpp"
#include "adnil/poset.hpp"
#include "adnil/root_set.hpp"
#include "adnil/root_system.hpp"
#include "adnil/tabulate.hpp"

namespace adnil::oracle {

/// Largest |Delta+| accepted by the subset scans.
inline constexpr std::size_t kMaxSubsetScanRoots = 24;

/// Orbit of the simple roots under simple reflections, keeping the
/// non-negative vectors: exactly the coordinates of Delta+.
inline std::set<Coords> reflection_closure(SimpleType t) {
  const auto cartan = cartan_matrix(t);
  const int l = t.rank;
  std::set<Coords> found;
  std::vector<Coords> frontier;
  for (int i = 0; i < l; ++i) {
    Coords c(l, 0);
    c[i] = 1;
    found.insert(c);
    frontier.push_back(c);
  }
  while (!frontier.empty()) {
    std::vector<Coords> next;
    for (const Coords& beta : frontier) {
      for (int j = 0; j < l; ++j) {
        int pairing = 0;
        for (int i = 0; i < l; ++i) pairing += beta[i] * cartan[i][j];
        Coords image = beta;
        image[j] -= pairing;
        bool positive = true, nonzero = false;
        for (int x : image) {
          positive = positive && x >= 0;
          nonzero = nonzero || x != 0;
        }
        if (positive && nonzero && found.insert(image).second) next.push_back(image);
      }
    }
    frontier = std::move(next);
  }
  return found;
}

namespace detail {

inline std::map<Coords, std::size_t> coordinate_index(const RootSystem& rs) {
  std::map<Coords, std::size_t> index;
  for (const Root& r : rs.positive_roots()) index.emplace(r.coords, r.index);
  return index;
}

inline Coords plus(const Coords& a, const Coords& b, int sign = 1) {
  Coords c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] + sign * b[k];
  return c;
}

inline void require_small(std::size_t n) {
  if (n > kMaxSubsetScanRoots)
    throw TooLarge("subset scan over " + std::to_string(n) + " roots exceeds the bound of " +
                   std::to_string(kMaxSubsetScanRoots));
}

/// Every subset of Delta+ (as a bitmask) closed under adding positive roots:
/// alpha in S, beta in Delta+, alpha + beta in Delta+ implies alpha + beta in S.
inline std::vector<std::uint32_t> closed_subsets(const RootSystem& rs) {
  const std::size_t n = rs.size();
  require_small(n);
  const auto index = coordinate_index(rs);
  std::vector<std::uint32_t> sums(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(plus(rs.root(a).coords, rs.root(b).coords));
      if (it != index.end()) sums[a] |= std::uint32_t{1} << it->second;
    }
  std::vector<std::uint32_t> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < total; ++s) {
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      if ((s >> a) & 1U) closed = (sums[a] & ~s) == 0;
    if (closed) out.push_back(static_cast<std::uint32_t>(s));
  }
  return out;
}

inline RootSet to_root_set(std::uint32_t bits, std::size_t n) {
  RootSet s(n);
  for (std::size_t a = 0; a < n; ++a)
    if ((bits >> a) & 1U) s.set(a);
  return s;
}

}  // namespace detail

/// Number of upward-closed subsets of the poset, by scanning every subset.
inline std::uint64_t subset_scan_filters(const Poset& p) {
  const std::size_t n = p.size();
  detail::require_small(n);
  std::vector<std::uint32_t> above(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (p.leq(a, b)) above[a] |= std::uint32_t{1} << b;
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < total; ++s) {
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      if ((s >> a) & 1U) closed = (above[a] & ~s) == 0;
    count += closed;
  }
  return count;
}

/// {gamma in Delta+ : gamma = phi1 + phi2 with phi1, phi2 in phi}, by pair scan.
inline RootSet phi_squared(const RootSystem& rs, const RootSet& phi) {
  const auto index = detail::coordinate_index(rs);
  RootSet out(rs.size());
  const auto members = phi.indices();
  for (std::size_t a : members)
    for (std::size_t b : members) {
      auto it = index.find(detail::plus(rs.root(a).coords, rs.root(b).coords));
      if (it != index.end()) out.set(it->second);
    }
  return out;
}

/// Literal membership test for F_I: phi avoids Delta_I, and whenever alpha in
/// phi, beta in Delta+ u Delta_I (negative roots of Delta_I included) and
/// alpha + beta in Delta+, then alpha + beta is in phi.
inline bool is_filter_for(const RootSystem& rs, const RootSet& phi, ParabolicMask I) {
  const auto index = detail::coordinate_index(rs);
  const int l = rs.rank();
  auto in_span_of_I = [&](const Coords& c) {
    for (int k = 0; k < l; ++k)
      if (c[k] != 0 && !I.contains(k)) return false;
    return true;
  };

  std::vector<Coords> betas;
  for (const Root& r : rs.positive_roots()) {
    betas.push_back(r.coords);
    if (in_span_of_I(r.coords)) betas.push_back(detail::plus(Coords(l, 0), r.coords, -1));
  }

  bool ok = true;
  phi.for_each([&](std::size_t a) {
    if (!ok) return;
    const Coords& alpha = rs.root(a).coords;
    if (in_span_of_I(alpha)) {
      ok = false;
      return;
    }
    for (const Coords& beta : betas) {
      auto it = index.find(detail::plus(alpha, beta));
      if (it != index.end() && !phi.test(it->second)) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

/// The full table from the literal definition of F_I, scanning all 2^|Delta+|
/// root subsets.
inline std::vector<TableRow> brute_force_tabulate(const RootSystem& rs,
                                                  std::size_t max_roots = kMaxSubsetScanRoots) {
  const std::size_t n = rs.size();
  if (n > max_roots || n > kMaxSubsetScanRoots)
    throw TooLarge("brute-force tabulation over " + std::to_string(n) + " roots exceeds the bound");
  const int l = rs.rank();
  const std::size_t width = std::size_t{1} << l;
  std::vector<TableRow> rows;
  for (std::size_t m = 0; m < width; ++m) rows.push_back(TableRow{ParabolicMask(l, static_cast<std::uint32_t>(m))});

  // F_I is contained in F_empty, so only Delta+-closed subsets need the
  // per-I check.
  for (std::uint32_t s : detail::closed_subsets(rs)) {
    const RootSet phi = detail::to_root_set(s, n);
    const bool abelian = phi_squared(rs, phi).empty();
    for (auto& row : rows) {
      if (!is_filter_for(rs, phi, row.mask)) continue;
      ++row.n_count;
      if (abelian) ++row.ab_count;
    }
  }
  return rows;
}

/// Members of F_I found by scanning every root subset, ordered by
/// (size, lexicographic member list). Minimal roots are computed by the
/// literal definition: beta in phi with no alpha in Delta+ and beta - alpha in phi.
inline std::vector<IdealRecord> list_ideals(const RootSystem& rs, ParabolicMask I, bool abelian_only = false) {
  const std::size_t n = rs.size();
  detail::require_small(n);
  const auto index = detail::coordinate_index(rs);
  std::vector<IdealRecord> out;
  for (std::uint32_t s : detail::closed_subsets(rs)) {
    const RootSet phi = detail::to_root_set(s, n);
    if (!is_filter_for(rs, phi, I)) continue;
    const bool abelian = phi_squared(rs, phi).empty();
    if (abelian_only && !abelian) continue;
    RootSet minimal(n);
    phi.for_each([&](std::size_t b) {
      bool is_min = true;
      for (const Root& alpha : rs.positive_roots()) {
        auto it = index.find(detail::plus(rs.root(b).coords, alpha.coords, -1));
        if (it != index.end() && phi.test(it->second)) is_min = false;
      }
      if (is_min) minimal.set(b);
    });
    ParabolicMask compat(rs.rank(), 0);
    for (int i = 0; i < rs.rank(); ++i)
      if (is_filter_for(rs, phi, ParabolicMask(rs.rank(), std::uint32_t{1} << i)))
        compat = ParabolicMask(rs.rank(), compat.bits() | (std::uint32_t{1} << i));
    out.push_back(IdealRecord{phi, minimal, compat, abelian, phi.count()});
  }
  std::stable_sort(out.begin(), out.end(), [](const IdealRecord& a, const IdealRecord& b) {
    if (a.size != b.size) return a.size < b.size;
    return lex_compare(a.phi, b.phi) < 0;
  });
  return out;
}

}  // namespace adnil::oracle
