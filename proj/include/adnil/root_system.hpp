#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "adnil/errors.hpp"

namespace adnil {

enum class Kind : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Kind kind = Kind::A;
  int rank = 1;

  bool valid() const {
    switch (kind) {
      case Kind::A: return rank >= 1;
      case Kind::B:
      case Kind::C: return rank >= 2;
      case Kind::D: return rank >= 3;
      case Kind::E: return rank >= 6 && rank <= 8;
      case Kind::F: return rank == 4;
      case Kind::G: return rank == 2;
    }
    return false;
  }

  bool exceptional() const { return kind == Kind::E || kind == Kind::F || kind == Kind::G; }

  std::string name() const { return std::string(1, static_cast<char>(kind)) + std::to_string(rank); }

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

/// Parse names like "E8", "a3", "G2". Throws UnsupportedType on anything
/// that is not a valid (kind, rank) pair.
inline SimpleType parse_simple_type(std::string_view text) {
  auto fail = [&] { return UnsupportedType("unknown root system type '" + std::string(text) + "'"); };
  if (text.size() < 2) throw fail();
  const char k = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (std::string_view("ABCDEFG").find(k) == std::string_view::npos) throw fail();
  int rank = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9' || rank > 1000) throw fail();
    rank = rank * 10 + (c - '0');
  }
  SimpleType t{static_cast<Kind>(k), rank};
  if (!t.valid()) throw fail();
  return t;
}

using Coords = std::vector<int>;

struct Root {
  Coords coords;
  int height = 0;
  std::size_t index = 0;
};

/// Cartan matrix in Bourbaki numbering, with entry (i, j) = <alpha_i, alpha_j^vee>,
/// so that the simple reflection s_j acts by beta -> beta - <beta, alpha_j^vee> alpha_j.
inline std::vector<std::vector<int>> cartan_matrix(SimpleType t) {
  if (!t.valid()) throw UnsupportedType("invalid type " + t.name());
  const int l = t.rank;
  std::vector<std::vector<int>> c(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  // 1-based node labels; `ij` is <alpha_i, alpha_j^vee>.
  auto link = [&](int i, int j, int ij = -1, int ji = -1) {
    c[i - 1][j - 1] = ij;
    c[j - 1][i - 1] = ji;
  };
  switch (t.kind) {
    case Kind::A:
      for (int i = 1; i < l; ++i) link(i, i + 1);
      break;
    case Kind::B:  // alpha_l short
      for (int i = 1; i < l - 1; ++i) link(i, i + 1);
      link(l - 1, l, -2, -1);
      break;
    case Kind::C:  // alpha_l long
      for (int i = 1; i < l - 1; ++i) link(i, i + 1);
      link(l - 1, l, -1, -2);
      break;
    case Kind::D:
      for (int i = 1; i < l - 1; ++i) link(i, i + 1);
      link(l - 2, l);
      break;
    case Kind::E:  // chain 1-3-4-...-l, branch node 2 attached to 4
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < l; ++i) link(i, i + 1);
      break;
    case Kind::F:  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      link(1, 2);
      link(2, 3, -2, -1);
      link(3, 4);
      break;
    case Kind::G:  // alpha_1 short, alpha_2 long
      link(1, 2, -1, -3);
      break;
  }
  return c;
}

/// Outcome of beta - alpha_i against Delta+ u {0}.
struct Zero {
  friend bool operator==(Zero, Zero) = default;
};
struct NotARoot {
  friend bool operator==(NotARoot, NotARoot) = default;
};
using Difference = std::variant<Zero, std::size_t, NotARoot>;

inline constexpr std::int16_t kNoRoot = -1;

/// Positive roots of a simple type in canonical order: ascending height,
/// then descending lexicographic coordinates, so that alpha_i sits at
/// index i - 1. Immutable once built.
class RootSystem {
public:
  const SimpleType& type() const { return type_; }
  int rank() const { return type_.rank; }
  std::size_t size() const { return roots_.size(); }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return roots_; }
  const Root& root(std::size_t i) const { return roots_.at(i); }
  std::size_t theta_index() const { return roots_.size() - 1; }
  const Root& theta() const { return roots_.back(); }
  std::size_t simple_root(int i) const { return static_cast<std::size_t>(i); }

  std::optional<std::size_t> find(const Coords& c) const {
    auto it = lookup_.find(c);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  /// Index of roots[a] + roots[b] when that sum is a positive root.
  std::optional<std::size_t> add(std::size_t a, std::size_t b) const {
    const auto s = sum_[a * size() + b];
    if (s == kNoRoot) return std::nullopt;
    return static_cast<std::size_t>(s);
  }

  /// roots[b] - alpha_i for a 0-based simple index i.
  Difference subtract_simple(std::size_t b, int i) const {
    if (b == static_cast<std::size_t>(i)) return Zero{};
    const auto d = minus_simple_[b * rank() + i];
    if (d == kNoRoot) return NotARoot{};
    return static_cast<std::size_t>(d);
  }

  /// Index of theta - roots[b], if that is a positive root.
  std::optional<std::size_t> theta_complement(std::size_t b) const {
    const auto c = theta_complement_[b];
    if (c == kNoRoot) return std::nullopt;
    return static_cast<std::size_t>(c);
  }

  /// <beta, alpha_j^vee>.
  int pairing(const Coords& beta, int j) const {
    int p = 0;
    for (int i = 0; i < rank(); ++i) p += beta[i] * cartan_[i][j];
    return p;
  }

  /// Root in a+2b notation, e.g. "3α1+2α2".
  std::string format_root(std::size_t i) const {
    std::string out;
    const Coords& c = roots_.at(i).coords;
    for (int k = 0; k < rank(); ++k) {
      if (c[k] == 0) continue;
      if (!out.empty()) out += '+';
      if (c[k] != 1) out += std::to_string(c[k]);
      out += "α" + std::to_string(k + 1);
    }
    return out;
  }

  friend RootSystem build_root_system(SimpleType t);

private:
  SimpleType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  std::map<Coords, std::size_t> lookup_;
  std::vector<std::int16_t> sum_;
  std::vector<std::int16_t> minus_simple_;
  std::vector<std::int16_t> theta_complement_;
};

/// Root-string construction, level by level: beta + alpha_i is a root iff
/// p - <beta, alpha_i^vee> >= 1, where p is the largest k with
/// beta - k alpha_i in Delta+ u {0}.
inline RootSystem build_root_system(SimpleType t) {
  if (!t.valid()) throw UnsupportedType("invalid type " + t.name());
  RootSystem rs;
  rs.type_ = t;
  rs.cartan_ = cartan_matrix(t);
  const int l = t.rank;

  std::set<Coords> seen;
  std::vector<Coords> level;
  for (int i = 0; i < l; ++i) {
    Coords c(l, 0);
    c[i] = 1;
    seen.insert(c);
    level.push_back(std::move(c));
  }
  std::vector<Coords> all = level;
  auto present = [&](const Coords& c) {
    if (std::all_of(c.begin(), c.end(), [](int x) { return x == 0; })) return true;
    return seen.contains(c);
  };
  while (!level.empty()) {
    std::vector<Coords> next;
    for (const Coords& beta : level) {
      for (int i = 0; i < l; ++i) {
        int p = 0;
        Coords down = beta;
        while (true) {
          --down[i];
          if (down[i] < 0 || !present(down)) break;
          ++p;
        }
        if (p - rs.pairing(beta, i) < 1) continue;
        Coords up = beta;
        ++up[i];
        if (seen.contains(up)) continue;
        seen.insert(up);
        next.push_back(std::move(up));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }

  std::sort(all.begin(), all.end(), [](const Coords& a, const Coords& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a > b;
  });
  // Indices are stored as int16 in the lookup tables.
  if (all.size() > 32767) throw UnsupportedType("root system too large: " + t.name());

  rs.roots_.reserve(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) {
    int h = 0;
    for (int x : all[k]) h += x;
    rs.lookup_.emplace(all[k], k);
    rs.roots_.push_back(Root{std::move(all[k]), h, k});
  }

  const std::size_t n = rs.roots_.size();
  rs.sum_.assign(n * n, kNoRoot);
  rs.minus_simple_.assign(n * static_cast<std::size_t>(l), kNoRoot);
  rs.theta_complement_.assign(n, kNoRoot);
  Coords tmp(l);
  const Coords& theta = rs.roots_.back().coords;
  for (std::size_t a = 0; a < n; ++a) {
    const Coords& ca = rs.roots_[a].coords;
    for (std::size_t b = 0; b < n; ++b) {
      for (int k = 0; k < l; ++k) tmp[k] = ca[k] + rs.roots_[b].coords[k];
      if (auto f = rs.find(tmp)) rs.sum_[a * n + b] = static_cast<std::int16_t>(*f);
    }
    for (int i = 0; i < l; ++i) {
      tmp = ca;
      --tmp[i];
      if (auto f = rs.find(tmp)) rs.minus_simple_[a * l + i] = static_cast<std::int16_t>(*f);
    }
    for (int k = 0; k < l; ++k) tmp[k] = theta[k] - ca[k];
    if (auto f = rs.find(tmp)) rs.theta_complement_[a] = static_cast<std::int16_t>(*f);
  }
  return rs;
}

inline std::optional<Root> add_roots(const RootSystem& rs, const Root& a, const Root& b) {
  if (auto s = rs.add(a.index, b.index)) return rs.root(*s);
  return std::nullopt;
}

/// `i` is a 0-based simple-root index.
inline Difference subtract_simple(const RootSystem& rs, const Root& b, int i) {
  return rs.subtract_simple(b.index, i);
}

}  // namespace adnil
