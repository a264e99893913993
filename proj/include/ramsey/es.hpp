#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

struct EsStep {
  Color kind = Color::red;
  int vertex = -1;
  std::size_t x_before = 0;
  std::size_t x_after = 0;
};

struct EsResult {
  std::optional<CliqueWitness> witness;  // empty on exhaustion
  VertexSet A, B, X;
  std::vector<EsStep> steps;
  int k = 0;
  int l = 0;
  std::size_t n = 0;
};

/// Diagonal exploration: the least vertex of X takes a red step when it has
/// at least ceil((|X|-1)/2) red neighbors in X, otherwise a blue step.
/// Stops when |X| <= 1, |A| >= k or |B| >= k.
EsResult run_es(const EdgeColoring& g, int k);

/// Off-diagonal exploration with gamma = l/(k+l): red step when the least
/// vertex has at least ceil(k(|X|-1)/(k+l)) red neighbors in X. Stops when
/// |X| <= 1, |A| >= k or |B| >= l. Requires 2 <= l <= k.
EsResult run_es_offdiag(const EdgeColoring& g, int k, int l);

/// Replays `r` against `g` and checks, step by step: A, B, X disjoint, A red
/// and B blue cliques, A-X red, B-X blue, |X| shrinking as recorded, the
/// step thresholds, and the exact size floor (see es_size_floor). Returns
/// the first violation, or an empty string.
std::string check_es_trace(const EdgeColoring& g, const EsResult& r);

/// Guaranteed lower bounds on |X| after each prefix of `kinds`, given
/// |X_0| = n and red fraction k/(k+l): a red step leaves at least
/// ceil(k(x-1)/(k+l)) vertices, a blue one at least floor(l(x-1)/(k+l)) + 1.
std::vector<std::size_t> es_size_floor(std::size_t n, int k, int l,
                                       const std::vector<Color>& kinds);

struct BookInductionResult {
  BookWitness witness;
  int depth = 0;  // recursion levels used, at most t
};

/// Monochromatic B_{t,m} found as in the classical inductive argument:
/// a B_{t-1,(t+1)m} is found first, then either one same-color step into its
/// pages or a greedy opposite-color chain of length t inside them.
/// Throws std::domain_error when N < (t+1)! m.
BookInductionResult ramsey_book_induction(const EdgeColoring& g, int t, int m);

}  // namespace ramsey
