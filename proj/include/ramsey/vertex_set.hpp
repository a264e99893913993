#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace ramsey {

/// Flat bit-set over the vertex range [0, universe).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<int> members)
      : VertexSet(universe) {
    for (int v : members) insert(v);
  }

  static VertexSet range(std::size_t universe, int first, int last) {
    VertexSet s(universe);
    for (int v = first; v < last; ++v) s.insert(v);
    return s;
  }
  static VertexSet full(std::size_t universe) {
    return range(universe, 0, static_cast<int>(universe));
  }

  std::size_t universe() const { return universe_; }

  // Out-of-range indices are a programming error; insert() throws.
  void insert(int v);
  void erase(int v) {
    words_[static_cast<std::size_t>(v) >> 6] &= ~bit(v);
  }
  bool contains(int v) const {
    return v >= 0 && static_cast<std::size_t>(v) < universe_ &&
           (words_[static_cast<std::size_t>(v) >> 6] & bit(v)) != 0;
  }

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

  // Least member, if any.
  std::optional<int> first() const;
  // Least member strictly greater than v, if any.
  std::optional<int> next(int v) const;

  std::vector<int> members() const;
  // First `n` members in increasing order (all of them if fewer exist).
  VertexSet truncated(std::size_t n) const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int b = std::countr_zero(w);
        f(static_cast<int>(i * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  // Set difference.
  VertexSet& operator-=(const VertexSet& o);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // |a ∩ b| without materializing the intersection.
  friend std::size_t intersection_count(const VertexSet& a,
                                        const VertexSet& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
    return c;
  }
  friend std::size_t intersection_count(const VertexSet& a, const VertexSet& b,
                                        const VertexSet& c) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      n += static_cast<std::size_t>(
          std::popcount(a.words_[i] & b.words_[i] & c.words_[i]));
    return n;
  }
  bool disjoint(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return false;
    return true;
  }
  bool subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

 private:
  static std::uint64_t bit(int v) {
    return std::uint64_t{1} << (static_cast<unsigned>(v) & 63u);
  }
  void check_same_universe(const VertexSet& o) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ramsey
