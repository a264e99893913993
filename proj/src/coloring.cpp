#include "ramsey/coloring.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "ramsey/rng.hpp"

namespace ramsey {

std::string_view to_string(Color c) {
  return c == Color::red ? "red" : "blue";
}

Color parse_color(std::string_view name) {
  if (name == "red" || name == "R") return Color::red;
  if (name == "blue" || name == "B") return Color::blue;
  throw std::invalid_argument("unknown color '" + std::string(name) + "'");
}

EdgeColoring::EdgeColoring(std::size_t n, const PairColor& color_of,
                           std::size_t max_vertices)
    : n_(n) {
  if (n == 0) throw std::invalid_argument("coloring needs at least one vertex");
  if (n > max_vertices) {
    throw std::invalid_argument("coloring has " + std::to_string(n) +
                                " vertices; limit is " +
                                std::to_string(max_vertices));
  }
  red_.assign(n, VertexSet(n));
  blue_.assign(n, VertexSet(n));
  const int ni = static_cast<int>(n);
  for (int u = 0; u < ni; ++u) {
    for (int v = u + 1; v < ni; ++v) {
      auto& rows = color_of(u, v) == Color::red ? red_ : blue_;
      rows[static_cast<std::size_t>(u)].insert(v);
      rows[static_cast<std::size_t>(v)].insert(u);
    }
  }
}

EdgeColoring EdgeColoring::swapped() const {
  EdgeColoring copy = *this;
  std::swap(copy.red_, copy.blue_);
  return copy;
}

std::int64_t edge_count(const EdgeColoring& g, Color c, const VertexSet& X,
                        const VertexSet& Y) {
  std::int64_t e = 0;
  X.for_each([&](int x) {
    e += static_cast<std::int64_t>(intersection_count(g.neighbors(x, c), Y));
  });
  return e;
}

Rational density(const EdgeColoring& g, Color c, const VertexSet& X,
                 const VertexSet& Y) {
  const auto nx = static_cast<std::int64_t>(X.count());
  const auto ny = static_cast<std::int64_t>(Y.count());
  if (nx == 0 || ny == 0) throw std::domain_error("density: empty vertex set");
  if (!X.disjoint(Y)) throw std::domain_error("density: sets overlap");
  return Rational(edge_count(g, c, X, Y), nx * ny);
}

bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

namespace {

struct GeneratorVisitor {
  std::size_t n;

  EdgeColoring operator()(const RandomKind& k) const {
    if (!(k.p_red >= 0.0 && k.p_red <= 1.0)) {
      throw std::invalid_argument("random coloring: p_red must be in [0,1]");
    }
    Rng rng(k.seed);
    return EdgeColoring(n, [&](int, int) {
      return rng.uniform() < k.p_red ? Color::red : Color::blue;
    });
  }
  EdgeColoring operator()(const AllRedKind&) const {
    return EdgeColoring(n, [](int, int) { return Color::red; });
  }
  EdgeColoring operator()(const AllBlueKind&) const {
    return EdgeColoring(n, [](int, int) { return Color::blue; });
  }
  EdgeColoring operator()(const PaleyKind& k) const {
    if (!is_prime(k.prime) || k.prime % 4 != 1) {
      throw std::invalid_argument("paley: " + std::to_string(k.prime) +
                                  " is not a prime congruent to 1 mod 4");
    }
    if (static_cast<std::int64_t>(n) != k.prime) {
      throw std::invalid_argument("paley: vertex count must equal the prime");
    }
    std::vector<bool> square(static_cast<std::size_t>(k.prime), false);
    for (std::int64_t x = 1; x < k.prime; ++x)
      square[static_cast<std::size_t>((x * x) % k.prime)] = true;
    return EdgeColoring(n, [&](int u, int v) {
      return square[static_cast<std::size_t>(v - u)] ? Color::red : Color::blue;
    });
  }
};

}  // namespace

EdgeColoring generate(std::size_t n, const GeneratorKind& kind) {
  if (n < 2) throw std::invalid_argument("generate: need n >= 2");
  return std::visit(GeneratorVisitor{n}, kind);
}

std::string to_text(const EdgeColoring& g) {
  const int n = static_cast<int>(g.size());
  std::string out = std::to_string(n) + "\n";
  out.reserve(out.size() + g.size() * (g.size() - 1) / 2 + 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      out.push_back(g.color(u, v) == Color::red ? 'R' : 'B');
  out.push_back('\n');
  return out;
}

EdgeColoring from_text(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_space();
  std::size_t n = 0;
  bool any_digit = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    n = n * 10 + static_cast<std::size_t>(text[pos] - '0');
    if (n > kDefaultMaxVertices) throw std::invalid_argument("coloring: N too large");
    any_digit = true;
    ++pos;
  }
  if (!any_digit) throw std::invalid_argument("coloring text: missing N");
  skip_space();
  const std::size_t pairs = n * (n - 1) / 2;
  if (text.size() - pos < pairs) {
    throw std::invalid_argument("coloring text: expected " +
                                std::to_string(pairs) + " pair colors");
  }
  const std::string_view body = text.substr(pos, pairs);
  for (char ch : body) {
    if (ch != 'R' && ch != 'B') {
      throw std::invalid_argument("coloring text: invalid character");
    }
  }
  pos += pairs;
  skip_space();
  if (pos != text.size()) throw std::invalid_argument("coloring text: trailing data");
  std::size_t i = 0;
  return EdgeColoring(n, [&](int, int) {
    return body[i++] == 'R' ? Color::red : Color::blue;
  });
}

std::vector<std::uint8_t> to_binary(const EdgeColoring& g) {
  const auto n = static_cast<std::uint32_t>(g.size());
  std::vector<std::uint8_t> out = {'R', 'B', 'K', '1'};
  for (int shift = 0; shift < 32; shift += 8)
    out.push_back(static_cast<std::uint8_t>((n >> shift) & 0xffu));
  const std::size_t pairs = g.size() * (g.size() - 1) / 2;
  std::vector<std::uint8_t> bits((pairs + 7) / 8, 0);
  std::size_t i = 0;
  const int ni = static_cast<int>(n);
  for (int u = 0; u < ni; ++u) {
    for (int v = u + 1; v < ni; ++v, ++i) {
      if (g.color(u, v) == Color::red)
        bits[i / 8] = static_cast<std::uint8_t>(bits[i / 8] | (1u << (i % 8)));
    }
  }
  out.insert(out.end(), bits.begin(), bits.end());
  return out;
}

EdgeColoring from_binary(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 8 || bytes[0] != 'R' || bytes[1] != 'B' ||
      bytes[2] != 'K' || bytes[3] != '1') {
    throw std::invalid_argument("coloring binary: bad magic");
  }
  std::uint32_t n = 0;
  for (int b = 0; b < 4; ++b)
    n |= static_cast<std::uint32_t>(bytes[4 + static_cast<std::size_t>(b)]) << (8 * b);
  if (n > kDefaultMaxVertices) throw std::invalid_argument("coloring binary: N too large");
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  if (bytes.size() != 8 + (pairs + 7) / 8) {
    throw std::invalid_argument("coloring binary: wrong payload length");
  }
  std::size_t i = 0;
  return EdgeColoring(n, [&](int, int) {
    const bool red = (bytes[8 + i / 8] >> (i % 8)) & 1u;
    ++i;
    return red ? Color::red : Color::blue;
  });
}

void save_coloring(const EdgeColoring& g, const std::string& path, bool binary) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  if (binary) {
    const auto bytes = to_binary(g);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  } else {
    out << to_text(g);
  }
}

EdgeColoring load_coloring(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (bytes.size() >= 4 && bytes[0] == 'R' && bytes[1] == 'B' &&
      bytes[2] == 'K' && bytes[3] == '1') {
    return from_binary(bytes);
  }
  return from_text(std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                    bytes.size()));
}

}  // namespace ramsey
