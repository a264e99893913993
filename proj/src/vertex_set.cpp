#include "ramsey/vertex_set.hpp"

#include <stdexcept>
#include <string>

namespace ramsey {

void VertexSet::insert(int v) {
  if (v < 0 || static_cast<std::size_t>(v) >= universe_) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " outside range of size " +
                            std::to_string(universe_));
  }
  words_[static_cast<std::size_t>(v) >> 6] |= bit(v);
}

std::optional<int> VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return static_cast<int>(i * 64 +
                              static_cast<std::size_t>(std::countr_zero(words_[i])));
    }
  }
  return std::nullopt;
}

std::optional<int> VertexSet::next(int v) const {
  std::size_t start = static_cast<std::size_t>(v + 1);
  if (start >= universe_) return std::nullopt;
  std::size_t i = start >> 6;
  std::uint64_t w = words_[i] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (w != 0) {
      return static_cast<int>(i * 64 +
                              static_cast<std::size_t>(std::countr_zero(w)));
    }
    if (++i >= words_.size()) return std::nullopt;
    w = words_[i];
  }
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

VertexSet VertexSet::truncated(std::size_t n) const {
  VertexSet out(universe_);
  std::size_t taken = 0;
  for_each([&](int v) {
    if (taken < n) {
      out.insert(v);
      ++taken;
    }
  });
  return out;
}

void VertexSet::check_same_universe(const VertexSet& o) const {
  if (o.universe_ != universe_) {
    throw std::invalid_argument("VertexSet: mismatched universes");
  }
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

}  // namespace ramsey
