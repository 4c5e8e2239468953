#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "adnil/errors.hpp"
#include "adnil/root_set.hpp"
#include "adnil/root_system.hpp"

namespace adnil {

/// Dominance order on Delta+: i <= j iff root_j - root_i has non-negative
/// coordinates. Element i is positive_roots[i].
class Poset {
public:
  std::size_t size() const { return n_; }

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  bool comparable(std::size_t i, std::size_t j) const { return up_[i].test(j) || up_[j].test(i); }

  /// {j : i <= j}, including i.
  const RootSet& up_set(std::size_t i) const { return up_[i]; }
  /// {j : j <= i}, including i.
  const RootSet& down_set(std::size_t i) const { return down_[i]; }
  /// Elements comparable to i, including i.
  const RootSet& comparable_set(std::size_t i) const { return comparable_[i]; }
  /// Immediate successors of i.
  const std::vector<std::size_t>& covers(std::size_t i) const { return covers_[i]; }

  RootSet empty_set() const { return RootSet(n_); }
  RootSet full_set() const { return RootSet::full(n_); }

  friend Poset build_poset(const RootSystem& rs);

private:
  std::size_t n_ = 0;
  std::vector<RootSet> up_;
  std::vector<RootSet> down_;
  std::vector<RootSet> comparable_;
  std::vector<std::vector<std::size_t>> covers_;
};

inline Poset build_poset(const RootSystem& rs) {
  const std::size_t n = rs.size();
  if (n > RootSet::kCapacity)
    throw UnsupportedType(rs.type().name() + " has " + std::to_string(n) + " positive roots; at most " +
                          std::to_string(RootSet::kCapacity) + " are supported");
  Poset p;
  p.n_ = n;
  p.up_.assign(n, RootSet(n));
  p.down_.assign(n, RootSet(n));
  p.covers_.assign(n, {});
  const int l = rs.rank();
  for (std::size_t i = 0; i < n; ++i) {
    const Coords& a = rs.root(i).coords;
    for (std::size_t j = 0; j < n; ++j) {
      const Coords& b = rs.root(j).coords;
      bool dominated = true;
      for (int k = 0; k < l && dominated; ++k) dominated = a[k] <= b[k];
      if (dominated) {
        p.up_[i].set(j);
        p.down_[j].set(i);
      }
    }
  }
  p.comparable_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) p.comparable_.push_back(p.up_[i] | p.down_[i]);
  // j covers i iff i < j with nothing strictly between.
  for (std::size_t i = 0; i < n; ++i) {
    RootSet strictly_above = p.up_[i];
    strictly_above.reset(i);
    strictly_above.for_each([&](std::size_t j) {
      RootSet between = strictly_above & p.down_[j];
      between.reset(j);
      if (between.empty()) p.covers_[i].push_back(j);
    });
  }
  return p;
}

/// Members of `s` with no strictly smaller member of `s`.
inline RootSet minimal_elements(const Poset& p, const RootSet& s) {
  RootSet out(p.size());
  s.for_each([&](std::size_t i) {
    RootSet below = p.down_set(i) & s;
    below.reset(i);
    if (below.empty()) out.set(i);
  });
  return out;
}

inline RootSet upward_closure(const Poset& p, const RootSet& a) {
  RootSet out(p.size());
  a.for_each([&](std::size_t i) { out |= p.up_set(i); });
  return out;
}

inline bool is_antichain(const Poset& p, const RootSet& a) {
  bool ok = true;
  a.for_each([&](std::size_t i) {
    RootSet others = p.comparable_set(i) & a;
    others.reset(i);
    if (!others.empty()) ok = false;
  });
  return ok;
}

inline bool is_filter(const Poset& p, const RootSet& s) { return upward_closure(p, s) == s; }

/// An antichain together with the filter it generates.
struct AntichainItem {
  RootSet antichain;
  RootSet filter;
};

/// Lazy depth-first enumeration of the antichains of a poset.
///
/// Each antichain is reached exactly once by extending the current one with
/// an incomparable element of strictly larger index. The search tree splits
/// into `shard_count()` independent subtrees: shard 0 holds only the empty
/// antichain and shard k + 1 holds the antichains whose least index is k.
/// Concatenating shards 0, 1, ... in order reproduces the full stream.
class AntichainGenerator {
public:
  explicit AntichainGenerator(const Poset& p) : poset_(&p), first_shard_(0), last_shard_(shard_count(p)) {
    start_shard();
  }
  AntichainGenerator(const Poset& p, std::size_t shard)
      : poset_(&p), first_shard_(shard), last_shard_(shard + 1) {
    if (shard >= shard_count(p)) throw std::out_of_range("antichain shard out of range");
    start_shard();
  }

  static std::size_t shard_count(const Poset& p) { return p.size() + 1; }

  std::optional<AntichainItem> next() {
    while (true) {
      if (pending_) {
        pending_ = false;
        return AntichainItem{stack_.back().antichain, stack_.back().filter};
      }
      if (stack_.empty()) {
        if (++current_shard_ >= last_shard_) return std::nullopt;
        start_shard(current_shard_);
        continue;
      }
      Frame& top = stack_.back();
      if (top.candidates.empty()) {
        stack_.pop_back();
        continue;
      }
      const std::size_t k = top.candidates.first();
      top.candidates.reset(k);
      Frame child{top.antichain, top.filter | poset_->up_set(k),
                  top.candidates.above(k) - poset_->comparable_set(k)};
      child.antichain.set(k);
      stack_.push_back(std::move(child));
      pending_ = true;
    }
  }

  template <typename F>
  void for_each(F&& f) {
    while (auto item = next()) f(*item);
  }

private:
  struct Frame {
    RootSet antichain;
    RootSet filter;
    RootSet candidates;
  };

  void start_shard() {
    current_shard_ = first_shard_;
    start_shard(current_shard_);
  }

  void start_shard(std::size_t shard) {
    const Poset& p = *poset_;
    stack_.clear();
    if (shard == 0) {
      // Empty antichain only; its children live in the other shards.
      stack_.push_back(Frame{p.empty_set(), p.empty_set(), p.empty_set()});
    } else {
      const std::size_t k = shard - 1;
      Frame f{p.empty_set(), p.up_set(k), p.full_set().above(k) - p.comparable_set(k)};
      f.antichain.set(k);
      stack_.push_back(std::move(f));
    }
    pending_ = true;
  }

  const Poset* poset_;
  std::size_t first_shard_;
  std::size_t last_shard_;
  std::size_t current_shard_ = 0;
  std::vector<Frame> stack_;
  bool pending_ = false;
};

/// Every antichain, in generator order.
inline std::vector<RootSet> enumerate_antichains(const Poset& p) {
  std::vector<RootSet> out;
  AntichainGenerator gen(p);
  gen.for_each([&](const AntichainItem& item) { out.push_back(item.antichain); });
  return out;
}

}  // namespace adnil
