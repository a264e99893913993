#include "ramsey/search.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace ramsey {

bool is_monochromatic(const EdgeColoring& g, Color c, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](int v) {
    if (!ok) return;
    VertexSet rest = s;
    rest.erase(v);
    if (!rest.subset_of(g.neighbors(v, c))) ok = false;
  });
  return ok;
}

std::string clique_violation(const EdgeColoring& g, const CliqueWitness& w) {
  if (w.vertices.universe() != g.size()) return "vertex set has wrong universe";
  if (!is_monochromatic(g, w.color, w.vertices))
    return "clique is not monochromatic in " + std::string(to_string(w.color));
  return {};
}

std::string book_violation(const EdgeColoring& g, const BookWitness& w) {
  if (w.spine.universe() != g.size() || w.pages.universe() != g.size())
    return "vertex set has wrong universe";
  if (w.spine.empty()) return "empty spine";
  if (!w.spine.disjoint(w.pages)) return "spine and pages overlap";
  if (!is_monochromatic(g, w.color, w.spine))
    return "spine is not monochromatic in " + std::string(to_string(w.color));
  std::string err;
  w.spine.for_each([&](int v) {
    if (err.empty() && !w.pages.subset_of(g.neighbors(v, w.color)))
      err = "spine vertex " + std::to_string(v) + " misses a page";
  });
  return err;
}

namespace {

bool clique_dfs(const EdgeColoring& g, Color c, std::size_t k,
                const VertexSet& cand, std::vector<int>& chosen) {
  if (chosen.size() == k) return true;
  VertexSet rest = cand;
  for (auto v = cand.first(); v; v = cand.next(*v)) {
    rest.erase(*v);
    if (chosen.size() + 1 + rest.count() < k) return false;
    chosen.push_back(*v);
    if (clique_dfs(g, c, k, rest & g.neighbors(*v, c), chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

CliqueWitness make_clique(const EdgeColoring& g, Color c,
                          const std::vector<int>& vs) {
  CliqueWitness w{c, g.empty_set()};
  for (int v : vs) w.vertices.insert(v);
  return w;
}

}  // namespace

std::optional<CliqueWitness> find_clique(const EdgeColoring& g, Color c, int k,
                                         const VertexSet& within) {
  if (k < 1) throw std::invalid_argument("find_clique: k must be >= 1");
  std::vector<int> chosen;
  if (within.count() < static_cast<std::size_t>(k)) return std::nullopt;
  if (!clique_dfs(g, c, static_cast<std::size_t>(k), within, chosen))
    return std::nullopt;
  return make_clique(g, c, chosen);
}

std::optional<CliqueWitness> find_clique(const EdgeColoring& g, Color c, int k) {
  return find_clique(g, c, k, g.all_vertices());
}

namespace {

// `common` is the common c-neighborhood of the spine so far (all vertices
// when the spine is empty). Later spine vertices and all pages lie in it.
bool book_dfs(const EdgeColoring& g, Color c, std::size_t t, std::size_t m,
              const VertexSet& common, std::vector<int>& spine) {
  if (spine.size() == t) return common.count() >= m;
  if (common.count() < (t - spine.size()) + m) return false;
  const int after = spine.empty() ? -1 : spine.back();
  for (auto v = common.next(after); v; v = common.next(*v)) {
    spine.push_back(*v);
    VertexSet next = common & g.neighbors(*v, c);
    if (book_dfs(g, c, t, m, next, spine)) return true;
    spine.pop_back();
  }
  return false;
}

}  // namespace

std::optional<BookWitness> find_book(const EdgeColoring& g, Color c, int t,
                                     int m) {
  if (t < 1 || m < 0) throw std::invalid_argument("find_book: need t >= 1, m >= 0");
  std::vector<int> spine;
  if (!book_dfs(g, c, static_cast<std::size_t>(t), static_cast<std::size_t>(m),
                g.all_vertices(), spine))
    return std::nullopt;
  BookWitness w{c, g.empty_set(), g.all_vertices()};
  for (int v : spine) {
    w.spine.insert(v);
    w.pages &= g.neighbors(v, c);
  }
  w.pages = w.pages.truncated(static_cast<std::size_t>(m));
  return w;
}

std::optional<CliqueWitness> book_to_clique(const EdgeColoring& g,
                                            const BookWitness& w, int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("book_to_clique: k, l >= 1");
  if (auto err = book_violation(g, w); !err.empty())
    throw std::invalid_argument("book_to_clique: " + err);
  const int t = static_cast<int>(w.spine.count());
  if (t >= k) {
    return CliqueWitness{w.color,
                         w.spine.truncated(static_cast<std::size_t>(k))};
  }
  if (auto other_clique = find_clique(g, other(w.color), l, w.pages))
    return other_clique;
  if (auto same = find_clique(g, w.color, k - t, w.pages)) {
    same->vertices |= w.spine;
    return same;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Oracles

namespace {

using Mask = std::uint64_t;

struct SmallColoring {
  std::size_t n = 0;
  std::array<Mask, 64> red{};
  std::array<Mask, 64> blue{};
};

bool has_clique(const std::array<Mask, 64>& adj, Mask cand, int size) {
  if (size <= 0) return true;
  if (std::popcount(cand) < size) return false;
  while (cand != 0) {
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (has_clique(adj, cand & adj[static_cast<std::size_t>(v)], size - 1))
      return true;
    if (std::popcount(cand) < size) return false;
  }
  return false;
}

bool has_book(const std::array<Mask, 64>& adj, Mask common, int depth, int t,
              int m, int after) {
  if (depth == t) return std::popcount(common) >= m;
  if (std::popcount(common) < (t - depth) + m) return false;
  Mask cand = after < 0 ? common : common & ~((Mask{2} << after) - 1);
  while (cand != 0) {
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (has_book(adj, common & adj[static_cast<std::size_t>(v)], depth + 1, t,
                 m, v))
      return true;
  }
  return false;
}

// Largest n admitting a coloring of K_n that `bad_after_adding` never
// rejects; the property must be hereditary.
std::size_t largest_good(
    std::size_t max_n,
    const std::function<bool(const SmallColoring&, int)>& bad_after_adding) {
  SmallColoring s;
  std::size_t best = 0;
  std::function<void()> extend = [&] {
    if (s.n > best) best = s.n;
    if (best >= max_n)
      throw std::runtime_error("oracle: search exceeded the vertex limit");
    const int v = static_cast<int>(s.n);
    const Mask all = (Mask{1} << v) - 1;
    for (Mask r = 0; r <= all; ++r) {
      s.red[static_cast<std::size_t>(v)] = r;
      s.blue[static_cast<std::size_t>(v)] = all & ~r;
      for (int u = 0; u < v; ++u) {
        const Mask bit = Mask{1} << v;
        const bool red = (r >> u) & 1;
        auto& ru = s.red[static_cast<std::size_t>(u)];
        auto& bu = s.blue[static_cast<std::size_t>(u)];
        ru = red ? (ru | bit) : (ru & ~bit);
        bu = red ? (bu & ~bit) : (bu | bit);
      }
      s.n = static_cast<std::size_t>(v) + 1;
      if (!bad_after_adding(s, v)) extend();
      s.n = static_cast<std::size_t>(v);
      if (v == 0) break;
    }
    for (int u = 0; u < v; ++u) {
      s.red[static_cast<std::size_t>(u)] &= ~(Mask{1} << v);
      s.blue[static_cast<std::size_t>(u)] &= ~(Mask{1} << v);
    }
  };
  extend();
  return best;
}

}  // namespace

std::size_t ramsey_number(int k, int l, std::size_t max_n) {
  if (k < 1 || l < 1) throw std::invalid_argument("ramsey_number: k, l >= 1");
  max_n = std::min<std::size_t>(max_n, 63);
  const std::size_t good = largest_good(max_n, [&](const SmallColoring& s, int v) {
    const auto vi = static_cast<std::size_t>(v);
    return has_clique(s.red, s.red[vi], k - 1) ||
           has_clique(s.blue, s.blue[vi], l - 1);
  });
  return good + 1;
}

std::size_t book_ramsey_number(int t, int m, std::size_t max_n) {
  if (t < 1 || m < 0) throw std::invalid_argument("book_ramsey_number: t >= 1, m >= 0");
  max_n = std::min<std::size_t>(max_n, 63);
  const std::size_t good = largest_good(max_n, [&](const SmallColoring& s, int) {
    const Mask all = (s.n == 64) ? ~Mask{0} : (Mask{1} << s.n) - 1;
    return has_book(s.red, all, 0, t, m, -1) ||
           has_book(s.blue, all, 0, t, m, -1);
  });
  return good + 1;
}

}  // namespace ramsey
