#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace oddcycle {

/// Upper bound on the number of vertices a Graph may hold.
inline constexpr std::size_t kMaxVertices = 512;

/// Fixed-width bit row over vertex indices 0..kMaxVertices-1.
///
/// Every set operation is a short loop over machine words; the A-set
/// evaluations and induced-path checks are built entirely from these.
class VertexSet {
 public:
  static constexpr std::size_t kWords = kMaxVertices / 64;

  constexpr VertexSet() = default;

  static VertexSet prefix(std::size_t count) {
    VertexSet s;
    for (std::size_t w = 0; w < kWords && count > 0; ++w) {
      if (count >= 64) {
        s.words_[w] = ~std::uint64_t{0};
        count -= 64;
      } else {
        s.words_[w] = (std::uint64_t{1} << count) - 1;
        count = 0;
      }
    }
    return s;
  }

  static VertexSet of(std::initializer_list<std::size_t> vs) {
    VertexSet s;
    for (auto v : vs) s.set(v);
    return s;
  }

  // Vertices strictly greater than v, within the first `count` indices.
  static VertexSet above(std::size_t v, std::size_t count) {
    VertexSet s = prefix(count);
    s &= ~prefix(v + 1);
    return s;
  }

  bool test(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(std::size_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(std::size_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  /// Smallest member, or kMaxVertices when empty.
  std::size_t first() const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return kMaxVertices;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        fn(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  VertexSet operator~() const {
    VertexSet s;
    for (std::size_t i = 0; i < kWords; ++i) s.words_[i] = ~words_[i];
    return s;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace oddcycle
