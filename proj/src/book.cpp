#include "ramsey/book.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ramsey {

double alpha_diagonal(const Rational& p, double eps, int k) {
  if (p <= Rational(1, 2) + Rational(1, k)) return eps / k;
  return eps * (p - Rational(1, 2)).to_double();
}

double alpha_offdiag(const Rational& p, double eps, int k, const Rational& p_initial) {
  if (p <= p_initial + Rational(1, k)) return eps / k;
  return eps * (p - p_initial).to_double();
}

std::string to_string(BookKind kind) {
  switch (kind) {
    case BookKind::v1: return "book-v1";
    case BookKind::cutoff: return "book-mu";
    case BookKind::offdiag: return "book-offdiag";
  }
  return "?";
}

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::red: return "red";
    case StepKind::blue: return "blue";
    case StepKind::boost: return "boost";
  }
  return "?";
}

std::string_view to_string(BookOutcome o) {
  switch (o) {
    case BookOutcome::red_clique: return "red_clique";
    case BookOutcome::blue_clique: return "blue_clique";
    case BookOutcome::exhausted: return "exhausted";
  }
  return "?";
}

namespace {

std::int64_t ceil_mul(const Rational& mu, std::size_t n) {
  return (mu * Rational(static_cast<std::int64_t>(n))).ceil();
}

class BookRun {
 public:
  BookRun(const EdgeColoring& g, const BookVariant& v, const BookOptions& o)
      : g_(g), v_(v), o_(o) {}

  BookResult run() {
    const std::size_t n = g_.size();
    BookState& st = result_.state;
    const int half = static_cast<int>((n + 1) / 2);
    st.A = g_.empty_set();
    st.B = g_.empty_set();
    st.X = VertexSet::range(n, 0, half);
    st.Y = VertexSet::range(n, half, static_cast<int>(n));
    st.mu = v_.mu;
    st.eps = o_.eps.value_or(std::pow(static_cast<double>(v_.k), -0.25));
    st.p = density(g_, Color::red, st.X, st.Y);
    if (v_.kind != BookKind::offdiag && st.p < Rational(1, 2)) {
      st.swapped = true;
      st.p = Rational(1) - st.p;
    }
    if (v_.kind == BookKind::offdiag) warm_up();
    st.p_initial = st.p;
    while (!stopped()) book_step();
    finish();
    return std::move(result_);
  }

 private:
  // Neighborhood in the color that plays role c during this run.
  Color role(Color c) const { return result_.state.swapped ? other(c) : c; }
  const VertexSet& nb(int v, Color c) const { return g_.neighbors(v, role(c)); }

  bool stopped() const {
    const BookState& st = result_.state;
    return st.X.count() <= 1 || st.Y.empty() ||
           st.A.count() >= static_cast<std::size_t>(v_.k) ||
           st.B.count() >= static_cast<std::size_t>(v_.blue_target());
  }

  double alpha() const {
    const BookState& st = result_.state;
    return v_.kind == BookKind::offdiag ? alpha_offdiag(st.p, st.eps, v_.k, st.p_initial)
                                        : alpha_diagonal(st.p, st.eps, v_.k);
  }

  void refresh_p() {
    BookState& st = result_.state;
    if (!st.X.empty() && !st.Y.empty()) st.p = density(g_, role(Color::red), st.X, st.Y);
  }

  void emit(StepRecord rec) {
    const BookState& st = result_.state;
    rec.x_after = st.X.count();
    rec.y_after = st.Y.count();
    if (!st.X.empty() && !st.Y.empty()) rec.p_after = st.p;
    result_.records.push_back(rec);
    if (o_.observer) o_.observer(st, result_.records.back());
  }

  // Off-diagonal exploration until p >= 1 - mu; Y follows red steps.
  void warm_up() {
    BookState& st = result_.state;
    const Rational target = Rational(1) - v_.mu;
    while (!stopped() && st.p < target) {
      StepRecord rec;
      rec.es_phase = true;
      rec.p_before = st.p;
      rec.x_before = st.X.count();
      rec.y_before = st.Y.count();
      const int v = *st.X.first();
      rec.vertex = v;
      st.X.erase(v);
      const std::size_t red = intersection_count(nb(v, Color::red), st.X);
      const auto threshold = ceil_mul(target, rec.x_before - 1);
      rec.beta = Rational(static_cast<std::int64_t>(st.X.count() - red),
                          static_cast<std::int64_t>(st.X.count()));
      if (static_cast<std::int64_t>(red) >= threshold) {
        rec.kind = StepKind::red;
        st.A.insert(v);
        st.X &= nb(v, Color::red);
        st.Y &= nb(v, Color::red);
      } else {
        rec.kind = StepKind::blue;
        st.B.insert(v);
        st.X &= nb(v, Color::blue);
      }
      refresh_p();
      emit(rec);
    }
  }

  void book_step() {
    BookState& st = result_.state;
    StepRecord rec;
    rec.p_before = st.p;
    rec.x_before = st.X.count();
    rec.y_before = st.Y.count();
    rec.alpha = alpha();
    const std::size_t rest = rec.x_before - 1;
    const auto blue_needed = ceil_mul(v_.mu, rest);

    // Blue step: least v with enough blue neighbors in X.
    for (auto v = st.X.first(); v; v = st.X.next(*v)) {
      const std::size_t blue = intersection_count(nb(*v, Color::blue), st.X);
      if (static_cast<std::int64_t>(blue) >= blue_needed) {
        rec.kind = StepKind::blue;
        rec.vertex = *v;
        rec.beta = Rational(static_cast<std::int64_t>(blue), static_cast<std::int64_t>(rest));
        st.B.insert(*v);
        st.X &= nb(*v, Color::blue);
        ++st.b;
        refresh_p();
        emit(rec);
        return;
      }
    }

    // Red step: least (or best) prosperous v.
    const double threshold = st.p.to_double() - rec.alpha - o_.guard;
    std::optional<int> chosen;
    Rational chosen_density{0};
    for (auto v = st.X.first(); v; v = st.X.next(*v)) {
      const VertexSet T = st.X & nb(*v, Color::red);
      const VertexSet U = st.Y & nb(*v, Color::red);
      if (T.empty() || U.empty()) continue;
      const Rational d_role = density(g_, role(Color::red), T, U);
      if (d_role.to_double() >= threshold) {
        if (!chosen || (o_.prefer_max_gain && d_role > chosen_density)) {
          chosen = *v;
          chosen_density = d_role;
        }
        if (!o_.prefer_max_gain) break;
      }
    }
    if (chosen) {
      const int v = *chosen;
      rec.kind = StepKind::red;
      rec.vertex = v;
      rec.prosperous = true;
      rec.t_size = intersection_count(st.X, nb(v, Color::red));
      rec.u_size = intersection_count(st.Y, nb(v, Color::red));
      st.A.insert(v);
      st.X &= nb(v, Color::red);
      st.Y &= nb(v, Color::red);
      ++st.t;
      refresh_p();
      emit(rec);
      return;
    }

    // Density boost on the least vertex.
    const int v = *st.X.first();
    const std::size_t blue = intersection_count(nb(v, Color::blue), st.X);
    rec.kind = StepKind::boost;
    rec.vertex = v;
    rec.beta = Rational(static_cast<std::int64_t>(blue), static_cast<std::int64_t>(rest));
    rec.s_size = blue;
    rec.t_size = intersection_count(st.X, nb(v, Color::red));
    rec.u_size = intersection_count(st.Y, nb(v, Color::red));
    st.B.insert(v);
    st.X &= nb(v, Color::blue);
    st.Y &= nb(v, Color::red);
    ++st.s;
    refresh_p();
    emit(rec);
  }

  void finish() {
    BookState& st = result_.state;
    const Color red = st.swapped ? Color::blue : Color::red;
    if (st.A.count() >= static_cast<std::size_t>(v_.k)) {
      result_.outcome = BookOutcome::red_clique;
      result_.clique = CliqueWitness{red, st.A};
    } else if (st.B.count() >= static_cast<std::size_t>(v_.blue_target())) {
      result_.outcome = BookOutcome::blue_clique;
      result_.clique = CliqueWitness{other(red), st.B};
    } else {
      result_.outcome = BookOutcome::exhausted;
    }
    if (!st.A.empty() && !st.Y.empty()) result_.book = BookWitness{red, st.A, st.Y};
  }

  const EdgeColoring& g_;
  BookVariant v_;
  const BookOptions& o_;
  BookResult result_;
};

}  // namespace

BookResult run_book(const EdgeColoring& g, const BookVariant& variant,
                    const BookOptions& options) {
  if (g.size() < 4) throw std::invalid_argument("run_book: need N >= 4");
  if (variant.k < 2) throw std::invalid_argument("run_book: need k >= 2");
  if (variant.mu <= Rational(0) || variant.mu > Rational(1))
    throw std::invalid_argument("run_book: mu must lie in (0, 1]");
  if (variant.kind == BookKind::offdiag && (variant.l < 2 || variant.l > variant.k))
    throw std::invalid_argument("run_book: need 2 <= l <= k");
  BookRun run(g, variant, options);
  BookResult r = run.run();
  r.variant = variant;
  r.n = g.size();
  return r;
}

std::string check_book_run(const EdgeColoring& g, const BookResult& r) {
  const std::size_t n = g.size();
  const bool sw = r.state.swapped;
  auto nb = [&](int v, Color c) -> const VertexSet& { return g.neighbors(v, sw ? other(c) : c); };
  const int half = static_cast<int>((n + 1) / 2);
  VertexSet A(n), B(n), X = VertexSet::range(n, 0, half), Y = VertexSet::range(n, half, static_cast<int>(n));
  auto role_density = [&](const VertexSet& P, const VertexSet& Q) {
    const Rational d = density(g, Color::red, P, Q);
    return sw ? Rational(1) - d : d;
  };
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const StepRecord& s = r.records[i];
    const std::string at = "step " + std::to_string(i) + ": ";
    if (!X.contains(s.vertex)) return at + "vertex not in X";
    if (s.x_before != X.count() || s.y_before != Y.count()) return at + "size before mismatch";
    if (s.p_before != role_density(X, Y)) return at + "p_before mismatch";
    const std::size_t rest = X.count() - 1;
    const std::size_t blue = intersection_count(nb(s.vertex, Color::blue), X);
    if (!s.es_phase) {
      const auto needed = (r.variant.mu * Rational(static_cast<std::int64_t>(rest))).ceil();
      if (s.kind == StepKind::blue && static_cast<std::int64_t>(blue) < needed)
        return at + "blue step below threshold";
      if (s.kind == StepKind::boost) {
        if (!(s.beta < r.variant.mu)) return at + "boost with beta >= mu";
        if (s.beta != Rational(static_cast<std::int64_t>(blue), static_cast<std::int64_t>(rest)))
          return at + "beta mismatch";
      }
    }
    X.erase(s.vertex);
    switch (s.kind) {
      case StepKind::red:
        A.insert(s.vertex);
        X &= nb(s.vertex, Color::red);
        Y &= nb(s.vertex, Color::red);
        break;
      case StepKind::blue:
        B.insert(s.vertex);
        X &= nb(s.vertex, Color::blue);
        break;
      case StepKind::boost:
        B.insert(s.vertex);
        X &= nb(s.vertex, Color::blue);
        Y &= nb(s.vertex, Color::red);
        break;
    }
    if (s.x_after != X.count() || s.y_after != Y.count()) return at + "size after mismatch";
    if (s.x_after >= s.x_before) return at + "X did not shrink";
    if (s.y_after > s.y_before) return at + "Y grew";
    if (!X.empty() && !Y.empty()) {
      if (!s.p_after || *s.p_after != role_density(X, Y)) return at + "p_after mismatch";
      if (s.kind == StepKind::red && !s.es_phase &&
          s.p_after->to_double() < s.p_before.to_double() - s.alpha)
        return at + "red step dropped p by more than alpha";
    }
    // Book structure: (A, X u Y) red, (B, X) blue, all disjoint.
    if (!A.disjoint(B) || !A.disjoint(X) || !A.disjoint(Y) || !B.disjoint(X) ||
        !B.disjoint(Y) || !X.disjoint(Y))
      return at + "sets overlap";
    if (!is_monochromatic(g, sw ? Color::blue : Color::red, A)) return at + "A not a red clique";
    if (!is_monochromatic(g, sw ? Color::red : Color::blue, B)) return at + "B not a blue clique";
    std::string err;
    const VertexSet XY = X | Y;
    A.for_each([&](int a) {
      if (err.empty() && !XY.subset_of(nb(a, Color::red))) err = "A to X u Y not red";
    });
    B.for_each([&](int b) {
      if (err.empty() && !X.subset_of(nb(b, Color::blue))) err = "B to X not blue";
    });
    if (!err.empty()) return at + err;
  }
  if (!(A == r.state.A && B == r.state.B && X == r.state.X && Y == r.state.Y))
    return "final state does not match replay";
  if (r.records.size() > n) return "more steps than vertices";
  if (r.clique && !is_valid(g, *r.clique)) return "clique witness invalid";
  if (r.book && !is_valid(g, *r.book)) return "book witness invalid";
  return {};
}

ReportParams report_params(const BookResult& r) {
  ReportParams p;
  p.k = r.variant.k;
  p.mu = r.variant.mu;
  p.eps = r.state.eps;
  p.reference = r.variant.kind == BookKind::offdiag ? r.state.p_initial : Rational(1, 2);
  p.n = r.n;
  return p;
}

TraceReport trace_report(const std::vector<StepRecord>& records, const ReportParams& params) {
  TraceReport rep;
  std::vector<const StepRecord*> book;
  for (const auto& r : records)
    if (!r.es_phase) book.push_back(&r);
  if (book.empty()) return rep;
  rep.empty = false;

  double min_p = std::numeric_limits<double>::infinity();
  double inv_beta = 0.0;
  rep.chain_consistent = true;
  for (std::size_t i = 0; i < book.size(); ++i) {
    const StepRecord& s = *book[i];
    min_p = std::min(min_p, s.p_before.to_double());
    if (s.p_after) min_p = std::min(min_p, s.p_after->to_double());
    if (i + 1 < book.size() &&
        (book[i + 1]->x_before != s.x_after || book[i + 1]->y_before != s.y_after))
      rep.chain_consistent = false;
    switch (s.kind) {
      case StepKind::red:
        ++rep.t;
        if (s.p_after && s.p_after->to_double() < s.p_before.to_double() - s.alpha)
          ++rep.red_violations;
        break;
      case StepKind::blue:
        ++rep.b;
        break;
      case StepKind::boost: {
        ++rep.s;
        const double beta = s.beta.to_double();
        if (beta == 0.0) {
          ++rep.zero_beta_boosts;
          break;
        }
        rep.zigzag += (1.0 - beta) / beta;
        inv_beta += 1.0 / beta;
        const double demanded = s.alpha * (1.0 - beta) / beta;
        if (!s.p_after || (*s.p_after - s.p_before).to_double() < demanded) ++rep.boost_violations;
        break;
      }
    }
  }
  const double ref = params.reference.to_double();
  rep.p_floor = {min_p, ref - params.eps, min_p >= ref - params.eps};

  const StepRecord& first = *book.front();
  const StepRecord& last = *book.back();
  auto lg = [](double v) { return v > 0 ? std::log2(v) : -std::numeric_limits<double>::infinity(); };
  const double mu = params.mu.to_double();
  const double y_base = ref;  // 1/2 on the diagonal, p_initial off it
  rep.y_size.realized = lg(static_cast<double>(last.y_after)) - lg(static_cast<double>(first.y_before));
  rep.y_size.bound = (rep.t + rep.s) * lg(y_base);
  rep.y_size.holds = rep.y_size.realized >= rep.y_size.bound;

  const int positive_boosts = rep.s - rep.zero_beta_boosts;
  rep.beta_harmonic = positive_boosts > 0 ? positive_boosts / inv_beta : 0.0;
  rep.x_size.realized = lg(static_cast<double>(last.x_after)) - lg(static_cast<double>(first.x_before));
  rep.x_size.bound = rep.t * lg(1.0 - mu) + rep.b * lg(mu) +
                     (positive_boosts > 0 ? positive_boosts * lg(rep.beta_harmonic) : 0.0);
  rep.x_size.holds = rep.x_size.realized >= rep.x_size.bound;

  rep.small_s = rep.s < std::sqrt(static_cast<double>(params.k));
  const double lb = rep.s + rep.t > 0 ? static_cast<double>(rep.s) / (rep.s + rep.t) : 0.0;
  rep.beta_lower = {rep.beta_harmonic, lb, rep.beta_harmonic >= lb};
  return rep;
}

}  // namespace ramsey
