#include "ramsey/es.hpp"

#include <stdexcept>

namespace ramsey {

namespace {

// ceil(k(x-1)/(k+l)) as an integer.
std::size_t red_threshold(std::size_t x, int k, int l) {
  if (x == 0) return 0;
  return static_cast<std::size_t>(
      Rational(static_cast<std::int64_t>(k) * static_cast<std::int64_t>(x - 1),
               k + l)
          .ceil());
}

EsResult explore(const EdgeColoring& g, int k, int l) {
  EsResult r{std::nullopt, g.empty_set(), g.empty_set(), g.all_vertices(), {}, k, l,
             g.size()};
  while (true) {
    const std::size_t x = r.X.count();
    if (r.A.count() >= static_cast<std::size_t>(k)) {
      r.witness = CliqueWitness{Color::red, r.A};
      break;
    }
    if (r.B.count() >= static_cast<std::size_t>(l)) {
      r.witness = CliqueWitness{Color::blue, r.B};
      break;
    }
    if (x <= 1) break;
    const int v = *r.X.first();
    r.X.erase(v);
    const std::size_t red = intersection_count(g.neighbors(v, Color::red), r.X);
    const Color kind = red >= red_threshold(x, k, l) ? Color::red : Color::blue;
    (kind == Color::red ? r.A : r.B).insert(v);
    r.X &= g.neighbors(v, kind);
    r.steps.push_back({kind, v, x, r.X.count()});
  }
  return r;
}

}  // namespace

EsResult run_es(const EdgeColoring& g, int k) {
  if (k < 2) throw std::invalid_argument("run_es: k must be >= 2");
  return explore(g, k, k);
}

EsResult run_es_offdiag(const EdgeColoring& g, int k, int l) {
  if (l < 2 || l > k) throw std::invalid_argument("run_es_offdiag: need 2 <= l <= k");
  return explore(g, k, l);
}

std::vector<std::size_t> es_size_floor(std::size_t n, int k, int l,
                                       const std::vector<Color>& kinds) {
  std::vector<std::size_t> out{n};
  std::size_t x = n;
  for (Color c : kinds) {
    if (x == 0) {
      out.push_back(0);
      continue;
    }
    const std::size_t red = red_threshold(x, k, l);
    x = c == Color::red ? red : (x - 1) - red + 1;
    out.push_back(x);
  }
  return out;
}

std::string check_es_trace(const EdgeColoring& g, const EsResult& r) {
  VertexSet A = g.empty_set(), B = g.empty_set(), X = g.all_vertices();
  std::vector<Color> kinds;
  for (const auto& s : r.steps) kinds.push_back(s.kind);
  const auto floor = es_size_floor(g.size(), r.k, r.l, kinds);
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const auto& s = r.steps[i];
    const std::string at = "step " + std::to_string(i) + ": ";
    if (!X.contains(s.vertex)) return at + "vertex not in X";
    if (X.first() != s.vertex) return at + "vertex is not the least in X";
    if (X.count() != s.x_before) return at + "recorded |X| before is wrong";
    X.erase(s.vertex);
    const std::size_t red = intersection_count(g.neighbors(s.vertex, Color::red), X);
    const bool red_ok = red >= red_threshold(s.x_before, r.k, r.l);
    if (red_ok != (s.kind == Color::red)) return at + "step kind contradicts threshold";
    (s.kind == Color::red ? A : B).insert(s.vertex);
    X &= g.neighbors(s.vertex, s.kind);
    if (X.count() != s.x_after) return at + "recorded |X| after is wrong";
    if (X.count() < floor[i + 1]) return at + "|X| below guaranteed floor";
    if (!A.disjoint(B) || !A.disjoint(X) || !B.disjoint(X)) return at + "sets overlap";
    if (!is_monochromatic(g, Color::red, A)) return at + "A is not a red clique";
    if (!is_monochromatic(g, Color::blue, B)) return at + "B is not a blue clique";
    std::string err;
    A.for_each([&](int a) {
      if (err.empty() && !X.subset_of(g.neighbors(a, Color::red))) err = "A-X edge not red";
    });
    B.for_each([&](int b) {
      if (err.empty() && !X.subset_of(g.neighbors(b, Color::blue))) err = "B-X edge not blue";
    });
    if (!err.empty()) return at + err;
  }
  if (!(A == r.A && B == r.B && X == r.X)) return "final sets do not match replay";
  if (r.witness && !is_valid(g, *r.witness)) return "witness is not monochromatic";
  return {};
}

namespace {

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) {
    if (f > (std::int64_t{1} << 50) / i) throw std::domain_error("ramsey_book_induction: t too large");
    f *= i;
  }
  return f;
}

BookWitness induct(const EdgeColoring& g, int t, std::size_t m, const VertexSet& W,
                   int& depth, int level) {
  depth = std::max(depth, level);
  if (t == 1) {
    const int v = *W.first();
    VertexSet rest = W;
    rest.erase(v);
    const VertexSet red = rest & g.neighbors(v, Color::red);
    const Color c = red.count() >= m ? Color::red : Color::blue;
    const VertexSet pages = c == Color::red ? red : rest & g.neighbors(v, Color::blue);
    return {c, VertexSet(g.size(), {v}), pages.truncated(m)};
  }
  const BookWitness inner =
      induct(g, t - 1, static_cast<std::size_t>(t + 1) * m, W, depth, level + 1);
  const Color c = inner.color;
  const VertexSet& P = inner.pages;
  for (auto v = P.first(); v; v = P.next(*v)) {
    const VertexSet same = P & g.neighbors(*v, c);
    if (same.count() >= m) {
      BookWitness w{c, inner.spine, same.truncated(m)};
      w.spine.insert(*v);
      return w;
    }
  }
  // Every page has fewer than m same-color neighbors among the pages, so a
  // greedy opposite-color chain loses at most m candidates per vertex.
  const Color o = other(c);
  VertexSet spine(g.size());
  VertexSet rest = P;
  for (int i = 0; i < t; ++i) {
    const int v = *rest.first();
    spine.insert(v);
    rest.erase(v);
    rest &= g.neighbors(v, o);
  }
  return {o, spine, rest.truncated(m)};
}

}  // namespace

BookInductionResult ramsey_book_induction(const EdgeColoring& g, int t, int m) {
  if (t < 1 || m < 1) throw std::domain_error("ramsey_book_induction: need t, m >= 1");
  const std::int64_t need = factorial(t + 1) * m;
  if (static_cast<std::int64_t>(g.size()) < need) {
    throw std::domain_error("ramsey_book_induction: need N >= (t+1)! m = " +
                            std::to_string(need));
  }
  BookInductionResult r;
  r.witness = induct(g, t, static_cast<std::size_t>(m), g.all_vertices(), r.depth, 1);
  return r;
}

}  // namespace ramsey
