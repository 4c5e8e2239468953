#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace adnil {

/// Fixed-capacity bitset over the canonical indexing of a positive root
/// system. `width()` is the number of positive roots of the owning system;
/// bits at or above the width are always clear.
template <std::size_t Words>
class BasicRootSet {
public:
  static constexpr std::size_t kCapacity = Words * 64;

  constexpr BasicRootSet() = default;
  explicit constexpr BasicRootSet(std::size_t width) : width_(width) {
    assert(width <= kCapacity);
  }
  BasicRootSet(std::size_t width, std::initializer_list<std::size_t> indices)
      : BasicRootSet(width) {
    for (auto i : indices) set(i);
  }

  static constexpr BasicRootSet full(std::size_t width) {
    BasicRootSet s(width);
    for (std::size_t w = 0; w < Words; ++w) {
      const std::size_t lo = w * 64;
      if (width >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (width > lo) {
        s.words_[w] = (std::uint64_t{1} << (width - lo)) - 1;
      }
    }
    return s;
  }

  constexpr std::size_t width() const { return width_; }

  constexpr bool test(std::size_t i) const {
    assert(i < width_);
    return (words_[i / 64] >> (i % 64)) & 1U;
  }
  constexpr void set(std::size_t i) {
    assert(i < width_);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  constexpr void reset(std::size_t i) {
    assert(i < width_);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  constexpr std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  constexpr bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  constexpr bool intersects(const BasicRootSet& o) const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }
  constexpr bool is_subset_of(const BasicRootSet& o) const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  constexpr BasicRootSet& operator|=(const BasicRootSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  constexpr BasicRootSet& operator&=(const BasicRootSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  /// Set difference.
  constexpr BasicRootSet& operator-=(const BasicRootSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend constexpr BasicRootSet operator|(BasicRootSet a, const BasicRootSet& b) { return a |= b; }
  friend constexpr BasicRootSet operator&(BasicRootSet a, const BasicRootSet& b) { return a &= b; }
  friend constexpr BasicRootSet operator-(BasicRootSet a, const BasicRootSet& b) { return a -= b; }

  /// Keep only indices strictly greater than `i`.
  constexpr BasicRootSet above(std::size_t i) const {
    BasicRootSet s = *this;
    const std::size_t wi = i / 64;
    for (std::size_t w = 0; w < wi; ++w) s.words_[w] = 0;
    const unsigned b = i % 64;
    s.words_[wi] &= (b == 63) ? 0 : (~std::uint64_t{0} << (b + 1));
    return s;
  }

  /// Smallest member, or width() when empty.
  constexpr std::size_t first() const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return width_;
  }

  /// Visit members in ascending index order.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::size_t w = 0; w < Words; ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1)
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  constexpr std::uint64_t word(std::size_t w) const { return words_[w]; }

  friend constexpr bool operator==(const BasicRootSet&, const BasicRootSet&) = default;

  /// Lexicographic order on the ascending member lists: the set whose
  /// first differing index is smaller comes first, and a proper prefix
  /// comes before its extensions.
  friend constexpr std::strong_ordering lex_compare(const BasicRootSet& a, const BasicRootSet& b) {
    for (std::size_t w = 0; w < Words; ++w) {
      const std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff == 0) continue;
      const std::uint64_t low = diff & (~diff + 1);
      const bool a_holds = (a.words_[w] & low) != 0;
      // The holder of the first differing index sorts first unless the
      // other list ends there.
      const BasicRootSet& other = a_holds ? b : a;
      const bool holder_first = !other.above_bit(w, low).empty();
      return a_holds == holder_first ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

private:
  constexpr BasicRootSet above_bit(std::size_t w, std::uint64_t low) const {
    BasicRootSet s = *this;
    for (std::size_t k = 0; k < w; ++k) s.words_[k] = 0;
    s.words_[w] &= ~(low | (low - 1));
    return s;
  }

  std::array<std::uint64_t, Words> words_{};
  std::size_t width_ = 0;
};

/// Every supported exceptional type has at most 120 positive roots.
using RootSet = BasicRootSet<2>;

}  // namespace adnil

template <std::size_t Words>
struct std::hash<adnil::BasicRootSet<Words>> {
  std::size_t operator()(const adnil::BasicRootSet<Words>& s) const noexcept {
    std::size_t h = s.width();
    for (std::size_t w = 0; w < Words; ++w)
      h ^= std::hash<std::uint64_t>{}(s.word(w)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};
