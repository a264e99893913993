#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "ramsey/coloring.hpp"

namespace ramsey {

struct CliqueWitness {
  Color color = Color::red;
  VertexSet vertices;
};

// A monochromatic B_{t,m}: the spine is a K_t in `color`, every spine-page
// edge has `color`, spine and pages are disjoint.
struct BookWitness {
  Color color = Color::red;
  VertexSet spine;
  VertexSet pages;
};

// Empty string when valid, otherwise the first violated condition.
std::string clique_violation(const EdgeColoring& g, const CliqueWitness& w);
std::string book_violation(const EdgeColoring& g, const BookWitness& w);
inline bool is_valid(const EdgeColoring& g, const CliqueWitness& w) {
  return clique_violation(g, w).empty();
}
inline bool is_valid(const EdgeColoring& g, const BookWitness& w) {
  return book_violation(g, w).empty();
}

// True iff every pair inside `s` has color c.
bool is_monochromatic(const EdgeColoring& g, Color c, const VertexSet& s);

/// Lexicographically least K_k in color c whose vertices lie in `within`.
std::optional<CliqueWitness> find_clique(const EdgeColoring& g, Color c, int k,
                                         const VertexSet& within);
std::optional<CliqueWitness> find_clique(const EdgeColoring& g, Color c, int k);

/// Monochromatic B_{t,m} with the lexicographically least spine; the pages
/// are the first m common c-neighbors of that spine.
std::optional<BookWitness> find_book(const EdgeColoring& g, Color c, int t,
                                     int m);

/// Turns a book in color c into a c-colored K_k or an other(c)-colored K_l.
/// The pages are searched first for the other color's K_l, then for a
/// c-colored K_{k-t} which is extended by the spine. Returns nullopt only
/// if the pages hold neither. Throws std::invalid_argument on an invalid
/// witness.
std::optional<CliqueWitness> book_to_clique(const EdgeColoring& g,
                                            const BookWitness& w, int k, int l);

// ---------------------------------------------------------------------------
// Exhaustive oracles for tiny parameters. Both build every coloring that
// avoids the target structure one vertex at a time, so the cost is the
// number of labeled extremal colorings; fine for r(3,3), r(3,4) and
// star/small books. Throw std::runtime_error past `max_n` vertices.

std::size_t ramsey_number(int k, int l, std::size_t max_n = 20);
std::size_t book_ramsey_number(int t, int m, std::size_t max_n = 20);

}  // namespace ramsey
