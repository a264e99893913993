#include <doctest.h>

#include <cmath>

#include "ramsey/geometry.hpp"
#include "ramsey/rng.hpp"
#include "ramsey/symmetric.hpp"

using namespace ramsey;

namespace {

VectorFamily random_family(Rng& rng, std::size_t n, std::size_t d, double scale) {
  VectorFamily f(n, Vector(d));
  for (auto& v : f)
    for (auto& x : v) x = (2 * rng.uniform() - 1) * scale;
  return f;
}

// E[<y,y'>^a <z,z'>^b] = || mean_i y_i^{(x)a} (x) z_i^{(x)b} ||^2; the tensor is
// built explicitly by flattening the product coordinates.
double tensor_moment(const std::vector<VectorPair>& support, int a, int b) {
  std::vector<double> acc;
  for (const auto& p : support) {
    std::vector<double> t{1.0};
    auto extend = [&](const Vector& v, int times) {
      for (int r = 0; r < times; ++r) {
        std::vector<double> next;
        for (double x : t)
          for (double y : v) next.push_back(x * y);
        t = std::move(next);
      }
    };
    extend(p.y, a);
    extend(p.z, b);
    if (acc.empty()) acc.assign(t.size(), 0.0);
    for (std::size_t i = 0; i < t.size(); ++i) acc[i] += t[i] / static_cast<double>(support.size());
  }
  double s = 0;
  for (double x : acc) s += x * x;
  return s;
}

}  // namespace

TEST_CASE("inner product identity") {
  const auto g = generate(60, RandomKind{0.5, 4});
  const auto X = VertexSet::range(60, 0, 20), Y = VertexSet::range(60, 20, 60);
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const int v = static_cast<int>(rng.below(20)), w = static_cast<int>(rng.below(20));
    const auto [d, c] = inner_product_identity_check(g, X, Y, v, w);
    CHECK(d == c);
  }
  const auto red = generate(10, AllRedKind{});
  const auto both = inner_product_identity_check(red, VertexSet(10, {0, 1}), VertexSet(10, {5, 6, 7}), 0, 1);
  CHECK(both.first == 3);
  CHECK(both.second == 3);
  const auto blue = generate(10, AllBlueKind{});
  CHECK(inner_product_identity_check(blue, VertexSet(10, {0}), VertexSet(10, {5}), 0, 0).first == 0);
}

TEST_CASE("sigma embedding encodes common neighborhoods") {
  const auto g = generate(40, RandomKind{0.5, 2});
  const auto X = VertexSet::range(40, 0, 10), Y = VertexSet::range(40, 10, 40);
  const double p = density(g, Color::red, X, Y).to_double(), alpha = 0.05;
  const auto s = sigma_embedding(g, Color::red, X, Y, p, alpha);
  REQUIRE(s.size() == 10);
  for (int v = 0; v < 10; ++v)
    for (int w = 0; w < 10; ++w) {
      const double common = static_cast<double>(
          intersection_count(g.neighbors(v, Color::red), g.neighbors(w, Color::red), Y));
      const double dv = static_cast<double>(intersection_count(g.neighbors(v, Color::red), Y));
      const double dw = static_cast<double>(intersection_count(g.neighbors(w, Color::red), Y));
      const double expected = (common - p * dv - p * dw + p * p * 30) / (alpha * p * 30);
      CHECK(dot(s[v], s[w]) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("geometric and one-color witnesses") {
  const VectorFamily zeros(5, Vector(3, 0.0));
  const auto w = geometric_witness(zeros, zeros);
  REQUIRE(w);
  CHECK(w->probability == 1.0);
  CHECK(w->kappa == 0.0);

  const VectorFamily single{{3.0, 4.0}};
  const auto s = geometric_witness(single, single);
  REQUIRE(s);
  CHECK(s->probability == 1.0);

  const auto oc = one_color_witness(zeros);
  REQUIRE(oc);
  CHECK(oc->probability == 1.0);

  // Nine orthonormal vectors: every product is >= 0, so at kappa = 1 all
  // 81 pairs qualify.
  VectorFamily ortho(9, Vector(9, 0.0));
  for (int i = 0; i < 9; ++i) ortho[i][i] = 1.0;
  const auto o = one_color_witness(ortho, 1.0, 1.0, 0);
  REQUIRE(o);
  CHECK(o->kappa == 0.0);
  CHECK(o->probability == 1.0);

  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(64), d = 1 + rng.below(16);
    const double scale = 0.1 + 5 * rng.uniform();
    const auto fy = random_family(rng, n, d, scale), fz = random_family(rng, n, d, scale);
    const auto gw = geometric_witness(fy, fz);
    REQUIRE(gw);
    CHECK(gw->probability >= std::exp2(-6 * gw->kappa) / 8);
    const auto ow = one_color_witness(fy);
    REQUIRE(ow);
    const double k2 = ow->kappa * ow->kappa;
    CHECK(ow->probability * (k2 + 2) * (k2 + 2) >= 1.0 - 1e-12);
  }
}

TEST_CASE("f values, bounds and Taylor coefficients") {
  CHECK(f_eval(0, 0) == 1.0);
  CHECK(f_eval(-1, 0) == doctest::Approx(-2.0));
  CHECK(cosh_sqrt2(-0.5) == doctest::Approx(std::cos(1.0)));
  const auto r = f_taylor(20);
  CHECK(r[0][0] == 1);
  CHECK(r[1][0] == 3);
  CHECK(r[0][1] == 3);
  CHECK(r[1][1] == 2);
  CHECK(r[1][2] == BigRational(4, 24));
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = 0; a + b < r.size(); ++b) CHECK(r[a][b] >= 0);
  // The truncated series matches f near the origin.
  double series = 0;
  const double y = 0.3, z = -0.2;
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = 0; a + b < r.size(); ++b)
      series += static_cast<double>(r[a][b]) * std::pow(y, a) * std::pow(z, b);
  CHECK(series == doctest::Approx(f_eval(y, z)).epsilon(1e-12));
}

TEST_CASE("moments are non-negative and match the tensor form") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<VectorPair> support;
    for (int i = 0; i < 8; ++i) {
      VectorPair p{Vector(3), Vector(2)};
      for (auto& x : p.y) x = 2 * rng.uniform() - 1;
      for (auto& x : p.z) x = 2 * rng.uniform() - 1;
      support.push_back(p);
    }
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        const double exact = moment_exact(support, a, b);
        CHECK(exact >= -1e-12);
        CHECK(exact == doctest::Approx(tensor_moment(support, a, b)).epsilon(1e-9));
      }
    CHECK(moment_exact(support, 0, 0) == 1.0);
    const auto mc = moment_estimate(support, 1, 1, 20000, 3);
    CHECK(std::abs(mc.mean - moment_exact(support, 1, 1)) < 6 * mc.std_error + 1e-9);
  }
  const std::vector<VectorPair> point{{{1.0, 2.0}, {3.0}}};
  CHECK(moment_exact(point, 2, 1) == doctest::Approx(std::pow(5.0, 2) * 9.0));
}

namespace {

// X = [0, n/3), Y = [n/3, 2n/3), Z = rest. X-Y red, X-Z blue, X internal
// in `inside`; all other edges red.
EdgeColoring structured(int n, Color inside) {
  const int third = n / 3;
  return EdgeColoring(static_cast<std::size_t>(n), [=](int u, int v) {
    const auto block = [&](int x) { return x < third ? 0 : (x < 2 * third ? 1 : 2); };
    const int bu = block(u), bv = block(v);
    if (bu == 0 && bv == 0) return inside;
    if (bu == 0 && bv == 2) return Color::blue;
    return Color::red;
  });
}

}  // namespace

TEST_CASE("refinement witness on saturated instance") {
  const auto g = structured(30, Color::red);
  const auto X = VertexSet::range(30, 0, 10), Y = VertexSet::range(30, 10, 20),
             Z = VertexSet::range(30, 20, 30);
  const auto r = refinement_witness(g, X, Y, Z, 0.1, 0.1);
  REQUIRE(r.witness);
  CHECK(r.witness->vertex == 0);
  CHECK(r.witness->kappa == 0.0);
  CHECK(r.witness->x_prime == X);
  CHECK(r.witness->clause_b_red);
  CHECK(r.witness->clause_b_blue);
  CHECK(r.witness->clause_c.has_value());

  const auto one = refinement_witness(g, VertexSet(30, {0}), Y, Z, 0.1, 0.1);
  REQUIRE(one.witness);
  CHECK(one.witness->x_prime == VertexSet(30, {0}));
  CHECK_THROWS(refinement_witness(g, X, X, Z, 0.1, 0.1));
  CHECK(refinement_required(64, 0.0) == 8);
  CHECK(refinement_required(64, 100.0) == 1);
}

TEST_CASE("symmetric runs") {
  SymmetricParams p;
  p.k = 40;
  p.eta = Rational(1, 10);
  const auto red = structured(60, Color::red);
  const auto r = run_symmetric(red, p);
  CHECK(r.outcome == SymOutcome::red_book);
  CHECK(r.state.t_target == 4);
  CHECK(r.steps.size() == 4);
  CHECK(r.state.Y.count() == 20);
  REQUIRE(r.book);
  CHECK(is_valid(red, *r.book));
  CHECK(check_symmetric_run(red, r) == "");
  const auto rep = symmetric_trace_report(r.steps, p, r.state.t_target);
  CHECK(rep.s_r == 0);
  CHECK(rep.s_b == 0);
  CHECK(rep.x_factor_violations == 0);

  const auto blue = structured(60, Color::blue);
  const auto b = run_symmetric(blue, p);
  CHECK(b.outcome == SymOutcome::blue_book);
  REQUIRE(b.book);
  CHECK(b.book->color == Color::blue);
  CHECK(check_symmetric_run(blue, b) == "");

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = generate(150, RandomKind{0.5, seed});
    const auto s = run_symmetric(g, p);
    CHECK(check_symmetric_run(g, s) == "");
    if (s.book) CHECK(is_valid(g, *s.book));
  }
}

TEST_CASE("constraint system and kappa bookkeeping") {
  for (const auto& c : symmetric_constraints(Rational(1, 8000), Rational(400))) {
    INFO(c.name);
    CHECK(c.holds);
  }
  const auto loose = symmetric_constraints(Rational(1, 10), Rational(400));
  CHECK_FALSE(loose[2].holds);

  SymStep boost;
  boost.kind = SymStepKind::red_boost;
  boost.kappa = 500;
  boost.x_before = 1000;
  boost.x_prime_size = boost.x_after = 1;
  boost.y_before = boost.z_before = boost.z_after = 50;
  boost.y_after = 25;
  SymmetricParams p;
  p.k = 8000;
  const auto rep = symmetric_trace_report({boost}, p, 1);
  CHECK(rep.x_factor_violations == 0);
  CHECK(rep.s_r == 1);
  CHECK(rep.zigzag_r == doctest::Approx(500.0 * 500 - 1));
  CHECK(rep.log_y == doctest::Approx(-1.0));
  CHECK(rep.log_x_bound == doctest::Approx(-3.0 - 6 * 500));
}

TEST_CASE("simplex families need kappa > 0") {
  // Centered scaled basis: diagonal 2n - 2, off-diagonal -2, so at kappa = 0
  // only the n diagonal pairs qualify and 1/n < 1/8.
  const int n = 64;
  VectorFamily s(n, Vector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[i][j] = std::sqrt(2.0 * n) * ((i == j ? 1.0 : 0.0) - 1.0 / n);
  CHECK(dot(s[0], s[1]) == doctest::Approx(-2.0));
  const auto w = geometric_witness(s, s);
  REQUIRE(w);
  // 2^{-6 kappa}/8 <= 1/64 first holds at kappa = 1/2.
  CHECK(w->kappa == 0.5);
  CHECK(w->pairs == n);
  CHECK(w->probability >= std::exp2(-6 * w->kappa) / 8);
  const auto o = one_color_witness(s);
  REQUIRE(o);
  // 1/n >= 1/(k^2+2)^2 needs k^2 >= 6.
  CHECK(o->kappa * o->kappa >= 6.0);
  CHECK(o->kappa * o->kappa - 1 <= 2.0 * n - 2);
}

TEST_CASE("symmetric campaign N=300") {
  SymmetricParams p;
  p.k = 40;
  p.eta = Rational(1, 10);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = generate(300, RandomKind{0.5, seed});
    const auto r = run_symmetric(g, p);
    INFO(seed);
    CHECK(check_symmetric_run(g, r) == "");
    CHECK(r.steps.size() <= 300);
    if (r.outcome == SymOutcome::red_book || r.outcome == SymOutcome::blue_book) {
      REQUIRE(r.book);
      CHECK(is_valid(g, *r.book));
      CHECK(r.book->spine.count() >= static_cast<std::size_t>(r.state.t_target));
    }
    const auto rep = symmetric_trace_report(r.steps, p, r.state.t_target);
    CHECK(rep.t_red + rep.t_blue + rep.s_r + rep.s_b == static_cast<int>(r.steps.size()));
  }
}
