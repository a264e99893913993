#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ramsey/rational.hpp"
#include "ramsey/vertex_set.hpp"

namespace ramsey {

enum class Color : std::uint8_t { red, blue };

constexpr Color other(Color c) {
  return c == Color::red ? Color::blue : Color::red;
}
std::string_view to_string(Color c);
Color parse_color(std::string_view name);

// Upper bound on N; keeps every neighborhood a short flat bit-set.
inline constexpr std::size_t kDefaultMaxVertices = 4096;

/// Immutable two-coloring of E(K_n).
///
/// Both color classes are stored as per-vertex bit-set rows so that
/// neighborhood queries in either color are a plain row lookup. The
/// blue rows are derived from the red ones at construction.
class EdgeColoring {
 public:
  using PairColor = std::function<Color(int, int)>;

  /// Builds the coloring by querying `color_of(u, v)` once per pair u < v,
  /// in lexicographic pair order.
  EdgeColoring(std::size_t n, const PairColor& color_of,
               std::size_t max_vertices = kDefaultMaxVertices);

  std::size_t size() const { return n_; }

  Color color(int u, int v) const {
    return red_[static_cast<std::size_t>(u)].contains(v) ? Color::red
                                                         : Color::blue;
  }
  const VertexSet& neighbors(int v, Color c) const {
    return c == Color::red ? red_[static_cast<std::size_t>(v)]
                           : blue_[static_cast<std::size_t>(v)];
  }
  VertexSet all_vertices() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  // Same coloring with the two colors exchanged.
  EdgeColoring swapped() const;

  friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
    return a.n_ == b.n_ && a.red_ == b.red_;
  }

 private:
  std::size_t n_;
  std::vector<VertexSet> red_;
  std::vector<VertexSet> blue_;
};

/// Number of `c`-colored edges with one end in X and the other in Y.
std::int64_t edge_count(const EdgeColoring& g, Color c, const VertexSet& X,
                        const VertexSet& Y);

/// d_c(X, Y) = e_c(X, Y) / (|X||Y|), exactly.
/// Throws std::domain_error when X or Y is empty or they overlap.
Rational density(const EdgeColoring& g, Color c, const VertexSet& X,
                 const VertexSet& Y);

// ---------------------------------------------------------------------------
// Generators

struct RandomKind {
  double p_red = 0.5;
  std::uint64_t seed = 0;
};
struct AllRedKind {};
struct AllBlueKind {};
struct PaleyKind {
  std::int64_t prime = 0;
};
using GeneratorKind = std::variant<RandomKind, AllRedKind, AllBlueKind, PaleyKind>;

/// Deterministic generator. The random kind draws one Rng::uniform() per
/// pair in lexicographic order and colors the pair red iff the draw is
/// below p_red. Paley colors {u, v} red iff u - v is a nonzero square
/// modulo the prime; it requires n == prime and prime = 1 mod 4.
EdgeColoring generate(std::size_t n, const GeneratorKind& kind);

bool is_prime(std::int64_t q);

// ---------------------------------------------------------------------------
// Serialization
//
// Text: line 1 = N, line 2 = N(N-1)/2 characters from {R,B} for pairs
// (0,1),(0,2),...,(N-2,N-1).
// Binary: "RBK1", little-endian u32 N, then one bit per pair in the same
// order (1 = red), bit i stored in byte i/8 at position i%8.

std::string to_text(const EdgeColoring& g);
EdgeColoring from_text(std::string_view text);
std::vector<std::uint8_t> to_binary(const EdgeColoring& g);
EdgeColoring from_binary(const std::vector<std::uint8_t>& bytes);

void save_coloring(const EdgeColoring& g, const std::string& path, bool binary);
// Detects the binary form by its magic; otherwise parses text.
EdgeColoring load_coloring(const std::string& path);

}  // namespace ramsey
