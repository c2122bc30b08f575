#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>

namespace sqturan {

inline constexpr int kMaxVertices = 512;

/// Fixed-width bitset over vertex ids [0, kMaxVertices).
class VertexSet {
 public:
  static constexpr int kWords = kMaxVertices / 64;

  constexpr VertexSet() = default;

  /// The set {0, ..., n-1}.
  static constexpr VertexSet prefix(int n) {
    VertexSet s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
      s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return s;
  }

  constexpr void set(int v) { words_[v >> 6] |= bit(v); }
  constexpr void reset(int v) { words_[v >> 6] &= ~bit(v); }
  constexpr bool test(int v) const { return (words_[v >> 6] & bit(v)) != 0; }

  constexpr int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  constexpr bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest element, or -1.
  constexpr int first() const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w]) return (w << 6) + std::countr_zero(words_[w]);
    return -1;
  }

  /// Smallest element strictly greater than v, or -1.
  constexpr int next(int v) const {
    ++v;
    if (v >= kMaxVertices) return -1;
    int w = v >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (cur) return (w << 6) + std::countr_zero(cur);
      if (++w == kWords) return -1;
      cur = words_[w];
    }
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t cur = words_[w];
      while (cur) {
        f((w << 6) + std::countr_zero(cur));
        cur &= cur - 1;
      }
    }
  }

  constexpr bool intersects(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  constexpr int intersection_count(const VertexSet& o) const {
    int c = 0;
    for (int w = 0; w < kWords; ++w) c += std::popcount(words_[w] & o.words_[w]);
    return c;
  }

  constexpr VertexSet& operator&=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  constexpr VertexSet& operator|=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  /// Set difference.
  constexpr VertexSet& operator-=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;
  friend constexpr auto operator<=>(const VertexSet&, const VertexSet&) = default;

  constexpr std::uint64_t word(int w) const { return words_[w]; }

 private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }

  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace sqturan
