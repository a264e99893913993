#include <doctest.h>

#include <cmath>

#include "ramsey/es.hpp"

using namespace ramsey;

TEST_CASE("es on monochromatic colorings") {
  const auto r = run_es(generate(8, AllRedKind{}), 3);
  REQUIRE(r.witness);
  CHECK(r.witness->color == Color::red);
  CHECK(r.steps.size() == 3);
  CHECK(r.witness->vertices.members() == std::vector<int>{0, 1, 2});

  const auto b = run_es_offdiag(generate(10, AllBlueKind{}), 5, 3);
  REQUIRE(b.witness);
  CHECK(b.witness->color == Color::blue);
  CHECK(b.steps.size() == 3);
  CHECK(check_es_trace(generate(10, AllBlueKind{}), b).empty());
}

TEST_CASE("es finds K_5 at N = 4^5 and traces replay") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = generate(1024, RandomKind{0.5, seed});
    const auto r = run_es(g, 5);
    REQUIRE(r.witness);
    CHECK(r.witness->vertices.count() == 5);
    CHECK(is_valid(g, *r.witness));
    CHECK(check_es_trace(g, r).empty());
    // |X_j| >= floor(N / 2^j) after j steps.
    for (std::size_t j = 0; j < r.steps.size(); ++j)
      CHECK(r.steps[j].x_after >= (1024u >> (j + 1)));
  }
}

TEST_CASE("off-diagonal es with l = k matches diagonal es") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = generate(200, RandomKind{0.5, seed});
    const auto a = run_es(g, 4);
    const auto b = run_es_offdiag(g, 4, 4);
    REQUIRE(a.steps.size() == b.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
      CHECK(a.steps[i].kind == b.steps[i].kind);
      CHECK(a.steps[i].vertex == b.steps[i].vertex);
    }
  }
}

TEST_CASE("off-diagonal size bound with unit loss per step") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int k = 6, l = 3;
    const auto g = generate(600, RandomKind{0.65, seed});
    const auto r = run_es_offdiag(g, k, l);
    CHECK(check_es_trace(g, r).empty());
    const double gamma = static_cast<double>(l) / (k + l);
    int a = 0, b = 0;
    for (std::size_t j = 0; j < r.steps.size(); ++j) {
      (r.steps[j].kind == Color::red ? a : b) += 1;
      const double main = std::pow(1 - gamma, a) * std::pow(gamma, b) * 600.0;
      CHECK(static_cast<double>(r.steps[j].x_after) >= main - static_cast<double>(j + 1));
    }
  }
}

TEST_CASE("size floor recursion") {
  // Red steps keep at least floor(x/2), blue steps at least ceil(x/2).
  const auto f = es_size_floor(7, 3, 3, {Color::red, Color::blue, Color::red});
  CHECK(f == std::vector<std::size_t>{7, 3, 2, 1});
  CHECK_THROWS(run_es(generate(5, AllRedKind{}), 1));
  CHECK_THROWS(run_es_offdiag(generate(5, AllRedKind{}), 3, 4));
}

TEST_CASE("exhaustion returns the trace") {
  // C5-style coloring on 5 vertices has no monochromatic triangle.
  const EdgeColoring g(5, [](int u, int v) {
    const int d = v - u;
    return (d == 1 || d == 4) ? Color::red : Color::blue;
  });
  const auto r = run_es(g, 3);
  CHECK_FALSE(r.witness);
  CHECK_FALSE(r.steps.empty());
  CHECK(r.X.count() <= 1);
  CHECK(check_es_trace(g, r).empty());
}

TEST_CASE("inductive book construction") {
  const auto base = ramsey_book_induction(generate(6, RandomKind{0.5, 3}), 1, 3);
  CHECK(base.witness.pages.count() == 3);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = generate(12, RandomKind{0.5, seed});
    const auto r = ramsey_book_induction(g, 2, 2);
    CHECK(is_valid(g, r.witness));
    CHECK(r.witness.spine.count() == 2);
    CHECK(r.witness.pages.count() == 2);
    CHECK(r.depth <= 2);
  }
  const auto red = ramsey_book_induction(generate(48, AllRedKind{}), 3, 2);
  CHECK(red.witness.color == Color::red);
  CHECK(red.witness.spine.members() == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(ramsey_book_induction(generate(11, AllRedKind{}), 2, 2), std::domain_error);
}
