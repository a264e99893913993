#include <doctest.h>

#include <cmath>

#include "ramsey/book.hpp"

using namespace ramsey;

TEST_CASE("alpha schedule") {
  CHECK(alpha_diagonal(Rational(1, 2), 0.1, 100) == doctest::Approx(0.001));
  CHECK(alpha_diagonal(Rational(3, 4), 0.1, 100) == doctest::Approx(0.025));
  CHECK(alpha_offdiag(Rational(2, 3), 0.2, 10, Rational(2, 3)) == doctest::Approx(0.02));
  CHECK(alpha_offdiag(Rational(9, 10), 0.2, 10, Rational(2, 3)) ==
        doctest::Approx(0.2 * (0.9 - 2.0 / 3.0)));
}

TEST_CASE("monochromatic colorings") {
  const auto red = generate(32, AllRedKind{});
  const auto r = run_book(red, BookVariant::v1(5));
  CHECK(r.outcome == BookOutcome::red_clique);
  CHECK(r.records.size() == 5);
  CHECK(r.state.t == 5);
  for (const auto& s : r.records) {
    CHECK(s.kind == StepKind::red);
    CHECK(*s.p_after == Rational(1));
  }
  CHECK(check_book_run(red, r).empty());
  const auto rep = trace_report(r.records, report_params(r));
  CHECK(rep.s == 0);
  CHECK(rep.p_floor.holds);
  CHECK(rep.red_violations == 0);
  CHECK(rep.boost_violations == 0);

  // All blue: colors are exchanged at the start, so the run sees all red.
  const auto blue = generate(32, AllBlueKind{});
  const auto b = run_book(blue, BookVariant::v1(5));
  CHECK(b.state.swapped);
  REQUIRE(b.clique);
  CHECK(b.clique->color == Color::blue);
  CHECK(check_book_run(blue, b).empty());

  // Off-diagonal never swaps: X-internal blue gives blue steps.
  const auto o = run_book(blue, BookVariant::offdiag(5, 3));
  REQUIRE(o.clique);
  CHECK(o.outcome == BookOutcome::blue_clique);
  CHECK(o.clique->color == Color::blue);
  CHECK(o.clique->vertices.count() == 3);
  CHECK(check_book_run(blue, o).empty());
}

namespace {

// X1, X2, Y1, Y2 blocks of size r. Red: X1-Y1, X2-Y2, X1-X2 and inside Y.
// Blue: inside X1, inside X2, X1-Y2, X2-Y1. Every vertex of X sees the same
// counts, and d_R(X, Y) = 1/2.
EdgeColoring bi_regular(int r) {
  return EdgeColoring(static_cast<std::size_t>(4 * r), [r](int u, int v) {
    const int bu = u / r, bv = v / r;  // 0=X1 1=X2 2=Y1 3=Y2
    if (bu >= 2 && bv >= 2) return Color::red;
    if (bu == bv) return Color::blue;
    if ((bu == 0 && bv == 1) || (bu == 0 && bv == 2) || (bu == 1 && bv == 3))
      return Color::red;
    return Color::blue;
  });
}

}  // namespace

TEST_CASE("bi-regular instance forces a density boost") {
  for (int r : {2, 3, 5, 8}) {
    const auto g = bi_regular(r);
    std::vector<StepRecord> boosts;
    BookOptions opt;
    opt.observer = [&](const BookState&, const StepRecord& s) {
      if (s.kind == StepKind::boost) boosts.push_back(s);
    };
    const auto res = run_book(g, BookVariant::v1(4), opt);
    REQUIRE(!res.records.empty());
    CHECK(res.records.front().kind == StepKind::boost);
    CHECK(res.records.front().p_before == Rational(1, 2));
    CHECK(res.records.front().beta == Rational(r - 1, 2 * r - 1));
    CHECK(check_book_run(g, res).empty());
    for (const auto& s : boosts) {
      REQUIRE(s.p_after);
      const double beta = s.beta.to_double();
      CHECK((*s.p_after - s.p_before).to_double() >= s.alpha * (1 - beta) / beta);
    }
  }
}

TEST_CASE("random runs satisfy every contract") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto g = generate(256, RandomKind{seed % 2 ? 0.5 : 0.7, seed});
    for (const auto& variant : {BookVariant::v1(6), BookVariant::cutoff(6, Rational(2, 5)),
                                BookVariant::offdiag(6, 3)}) {
      const auto r = run_book(g, variant);
      INFO("seed " << seed << " variant " << to_string(variant.kind));
      CHECK(check_book_run(g, r) == "");
      const auto rep = trace_report(r.records, report_params(r));
      CHECK(rep.red_violations == 0);
      CHECK(rep.chain_consistent);
      if (r.book) CHECK(is_valid(g, *r.book));
      if (r.clique) CHECK(is_valid(g, *r.clique));
    }
  }
}

TEST_CASE("max-gain choice and guard band still honor contracts") {
  const auto g = generate(200, RandomKind{0.55, 9});
  BookOptions opt;
  opt.prefer_max_gain = true;
  const auto r = run_book(g, BookVariant::cutoff(5, Rational(1, 3)), opt);
  CHECK(check_book_run(g, r).empty());
  CHECK_THROWS(run_book(g, BookVariant::cutoff(5, Rational(0))));
  CHECK_THROWS(run_book(generate(3, AllRedKind{}), BookVariant::v1(3)));
}

TEST_CASE("trace report arithmetic") {
  std::vector<StepRecord> recs;
  for (int i = 0; i < 4; ++i) {
    StepRecord s;
    s.kind = StepKind::boost;
    s.beta = Rational(1, 2);
    s.p_before = Rational(1, 2);
    s.p_after = Rational(3, 4);
    s.alpha = 0.01;
    s.x_before = 64u >> i;
    s.x_after = 32u >> i;
    s.y_before = s.y_after = 10;
    recs.push_back(s);
  }
  ReportParams p;
  p.k = 100;
  p.eps = 0.1;
  const auto rep = trace_report(recs, p);
  CHECK(rep.s == 4);
  CHECK(rep.zigzag == doctest::Approx(4.0));
  CHECK(rep.beta_harmonic == doctest::Approx(0.5));
  CHECK(rep.small_s);
  CHECK(rep.chain_consistent);
  CHECK(rep.boost_violations == 0);
  CHECK(trace_report({}, p).empty);
}
