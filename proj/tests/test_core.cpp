#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "oracles.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/rng.hpp"
#include "ramsey/search.hpp"

using namespace ramsey;

TEST_CASE("splitmix reference value") {
  SplitMix64 sm(0);
  CHECK(sm() == 0xe220a8397b1dcdafull);
  CHECK(sm() == 0x6e789e6aa1b965f4ull);
}

TEST_CASE("rng is deterministic and in range") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform();
    CHECK(u == b.uniform());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  Rng c(3);
  for (int i = 0; i < 1000; ++i) CHECK(c.below(7) < 7);
}

TEST_CASE("rational arithmetic and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3) == Rational(-1, 3));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational::parse("0.4") == Rational(2, 5));
  CHECK(Rational::parse("3/9") == Rational(1, 3));
  CHECK(Rational::parse("-1.25") == Rational(-5, 4));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("vertex set operations") {
  VertexSet a(130, {0, 5, 64, 129});
  VertexSet b(130, {5, 6, 129});
  CHECK(a.count() == 4);
  CHECK(intersection_count(a, b) == 2);
  CHECK((a - b).members() == std::vector<int>{0, 64});
  CHECK((a | b).count() == 5);
  CHECK(a.next(5) == 64);
  CHECK(a.next(129) == std::nullopt);
  CHECK(a.truncated(2).members() == std::vector<int>{0, 5});
  CHECK_THROWS(a.insert(130));
  CHECK_THROWS(a &= VertexSet(10));
}

TEST_CASE("generated colorings are well formed") {
  for (const auto& g : {generate(40, RandomKind{0.3, 5}), generate(17, PaleyKind{17}),
                        generate(9, AllRedKind{}), generate(9, AllBlueKind{})}) {
    const int n = static_cast<int>(g.size());
    for (int v = 0; v < n; ++v) {
      CHECK_FALSE(g.neighbors(v, Color::red).contains(v));
      CHECK_FALSE(g.neighbors(v, Color::blue).contains(v));
      CHECK(g.neighbors(v, Color::red).count() + g.neighbors(v, Color::blue).count() ==
            g.size() - 1);
      for (int w = 0; w < n; ++w)
        CHECK(g.neighbors(v, Color::red).contains(w) == g.neighbors(w, Color::red).contains(v));
    }
  }
  CHECK_THROWS(generate(1, AllRedKind{}));
  CHECK_THROWS(generate(13, PaleyKind{11}));
  CHECK_THROWS(generate(15, PaleyKind{15}));
  CHECK_THROWS(generate(12, PaleyKind{13}));
  CHECK(generate(100, RandomKind{0.5, 7}) == generate(100, RandomKind{0.5, 7}));
  CHECK_FALSE(generate(100, RandomKind{0.5, 7}) == generate(100, RandomKind{0.5, 8}));
}

TEST_CASE("density is exact and matches a hand count") {
  const auto g = generate(10, RandomKind{0.5, 1});
  const auto X = VertexSet::range(10, 0, 5);
  const auto Y = VertexSet::range(10, 5, 10);
  const auto tab = oracle::table_of(g);
  int red = 0;
  for (int x = 0; x < 5; ++x)
    for (int y = 5; y < 10; ++y) red += tab.red[x][y] ? 1 : 0;
  CHECK(density(g, Color::red, X, Y) == Rational(red, 25));
  CHECK(density(g, Color::red, X, Y) == density(g, Color::red, Y, X));
  CHECK(density(g, Color::red, X, Y) + density(g, Color::blue, X, Y) == Rational(1));

  const auto r = generate(5, AllRedKind{});
  CHECK(density(r, Color::red, VertexSet(5, {0}), VertexSet(5, {1, 2})) == Rational(1));
  CHECK(density(r, Color::blue, VertexSet(5, {0}), VertexSet(5, {1, 2})) == Rational(0));
  CHECK_THROWS_AS(density(r, Color::red, VertexSet(5), VertexSet(5, {1})), std::domain_error);
  CHECK_THROWS_AS(density(r, Color::red, VertexSet(5, {1, 2}), VertexSet(5, {2})),
                  std::domain_error);
}

TEST_CASE("text and binary round trips") {
  for (std::size_t n : {2u, 3u, 9u, 40u}) {
    const auto g = generate(n, RandomKind{0.5, n});
    CHECK(from_text(to_text(g)) == g);
    CHECK(from_binary(to_binary(g)) == g);
  }
  const auto g = generate(3, AllRedKind{});
  CHECK(to_text(g) == "3\nRRR\n");
  const auto bin = to_binary(g);
  CHECK(bin.size() == 9);
  CHECK(bin[8] == 0x07);
  CHECK_THROWS(from_text("3\nRRX\n"));
  CHECK_THROWS(from_text("3\nRR\n"));
  CHECK_THROWS(from_binary({'R', 'B', 'K', '2', 3, 0, 0, 0, 7}));

  const auto path = std::filesystem::temp_directory_path() / "ramsey_io_test.bin";
  save_coloring(g, path.string(), true);
  CHECK(load_coloring(path.string()) == g);
  save_coloring(g, path.string(), false);
  CHECK(load_coloring(path.string()) == g);
  std::filesystem::remove(path);
}

namespace {

EdgeColoring c5() {
  return EdgeColoring(5, [](int u, int v) {
    const int d = (v - u + 5) % 5;
    return (d == 1 || d == 4) ? Color::red : Color::blue;
  });
}

}  // namespace

TEST_CASE("find_clique examples") {
  const auto r6 = generate(6, AllRedKind{});
  auto w = find_clique(r6, Color::red, 3);
  REQUIRE(w);
  CHECK(w->vertices.members() == std::vector<int>{0, 1, 2});
  CHECK_FALSE(find_clique(c5(), Color::red, 3));
  CHECK_FALSE(find_clique(c5(), Color::blue, 3));
  const auto paley = generate(17, PaleyKind{17});
  CHECK_FALSE(find_clique(paley, Color::red, 4));
  CHECK_FALSE(find_clique(paley, Color::blue, 4));
  CHECK(find_clique(paley, Color::red, 3));
}

TEST_CASE("find_clique agrees with subset enumeration") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 6 + seed % 7;
    const auto g = generate(n, RandomKind{0.5, seed});
    const auto tab = oracle::table_of(g);
    for (int k = 1; k <= 5; ++k) {
      for (Color c : {Color::red, Color::blue}) {
        const auto expected = oracle::least_clique(tab, k, c == Color::red);
        const auto got = find_clique(g, c, k);
        CHECK(got.has_value() == !expected.empty());
        if (got) {
          CHECK(got->vertices.members() == expected);
          CHECK(is_valid(g, *got));
        }
      }
    }
  }
}

TEST_CASE("every coloring of K_6 has a monochromatic triangle") {
  int failures = 0;
  for (std::uint32_t bits = 0; bits < (1u << 15); ++bits) {
    std::size_t i = 0;
    const EdgeColoring g(6, [&](int, int) {
      return ((bits >> i++) & 1) ? Color::red : Color::blue;
    });
    if (!find_clique(g, Color::red, 3) && !find_clique(g, Color::blue, 3)) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("find_book examples") {
  const auto r5 = generate(5, AllRedKind{});
  auto w = find_book(r5, Color::red, 1, 4);
  REQUIRE(w);
  CHECK(w->spine.members() == std::vector<int>{0});
  CHECK(w->pages.members() == std::vector<int>{1, 2, 3, 4});
  CHECK_FALSE(find_book(generate(3, AllRedKind{}), Color::red, 2, 2));

  // Every coloring of K_4 has a monochromatic B_{1,2}.
  for (std::uint32_t bits = 0; bits < 64; ++bits) {
    std::size_t i = 0;
    const EdgeColoring g(4, [&](int, int) {
      return ((bits >> i++) & 1) ? Color::red : Color::blue;
    });
    auto r = find_book(g, Color::red, 1, 2);
    auto b = find_book(g, Color::blue, 1, 2);
    CHECK((r || b));
    if (r) CHECK(is_valid(g, *r));
  }
}

TEST_CASE("find_book agrees with spine enumeration") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 6 + seed % 6;
    const auto g = generate(n, RandomKind{0.6, seed});
    const auto tab = oracle::table_of(g);
    for (int t = 1; t <= 3; ++t)
      for (int m = 0; m <= 4; ++m)
        for (Color c : {Color::red, Color::blue}) {
          const auto got = find_book(g, c, t, m);
          CHECK(got.has_value() == oracle::has_book(tab, t, m, c == Color::red));
          if (got) {
            CHECK(is_valid(g, *got));
            CHECK(got->spine.count() == static_cast<std::size_t>(t));
            CHECK(got->pages.count() == static_cast<std::size_t>(m));
          }
        }
  }
}

TEST_CASE("book_to_clique") {
  const auto r = generate(8, AllRedKind{});
  const BookWitness book{Color::red, VertexSet(8, {0, 1}), VertexSet(8, {2, 3, 4})};
  auto w = book_to_clique(r, book, 4, 3);
  REQUIRE(w);
  CHECK(w->color == Color::red);
  CHECK(w->vertices.members() == std::vector<int>{0, 1, 2, 3});

  // Pages {1,2,3} form a blue triangle; spine edges to pages are red.
  const EdgeColoring g(5, [](int u, int v) {
    return (u >= 1 && u <= 3 && v >= 1 && v <= 3) ? Color::blue : Color::red;
  });
  auto b = book_to_clique(g, BookWitness{Color::red, VertexSet(5, {0}), VertexSet(5, {1, 2, 3})},
                          5, 3);
  REQUIRE(b);
  CHECK(b->color == Color::blue);
  CHECK(b->vertices.members() == std::vector<int>{1, 2, 3});

  CHECK_THROWS(book_to_clique(g, BookWitness{Color::red, VertexSet(5, {1}),
                                             VertexSet(5, {2})}, 3, 3));

  // With m = r(3,3) = 6 pages the conversion never fails.
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto h = generate(14, RandomKind{0.7, seed});
    const auto book = find_book(h, Color::red, 1, 6);
    if (!book) continue;
    const auto clique = book_to_clique(h, *book, 4, 3);
    REQUIRE(clique);
    CHECK(is_valid(h, *clique));
    CHECK(clique->vertices.count() == (clique->color == Color::red ? 4u : 3u));
  }
}

TEST_CASE("ramsey oracles match brute force") {
  CHECK(ramsey_number(3, 3) == 6);
  CHECK(ramsey_number(1, 5) == 1);
  CHECK(ramsey_number(2, 4) == 4);
  CHECK(ramsey_number(3, 4) == 9);
  const int brute33 = oracle::exhaustive_threshold(6, [](const oracle::Table& t) {
    return oracle::has_clique(t, 3, true) || oracle::has_clique(t, 3, false);
  });
  CHECK(brute33 == 6);
  for (int m = 1; m <= 3; ++m) {
    const int brute = oracle::exhaustive_threshold(7, [&](const oracle::Table& t) {
      return oracle::has_book(t, 1, m, true) || oracle::has_book(t, 1, m, false);
    });
    CHECK(book_ramsey_number(1, m) == static_cast<std::size_t>(brute));
  }
  CHECK(book_ramsey_number(1, 4) == 7);
  // B_{2,1} is a triangle.
  CHECK(book_ramsey_number(2, 1) == 6);
}
