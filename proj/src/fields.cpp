#include "ramsey/fields.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ramsey {

double entropy(double z) {
  if (!(z >= 0.0 && z <= 1.0)) throw std::domain_error("entropy: argument outside [0,1]");
  if (z == 0.0 || z == 1.0) return 0.0;
  return -z * std::log2(z) - (1 - z) * std::log2(1 - z);
}

double ylog(double x, double y) {
  if (y == 0.0) return 0.0;
  return y * std::log2((x + y) / y);
}

namespace {

// (2-x) H((1-x)/(2-x)); decreasing on [0,1].
double f_entropy_term(double x) { return (2 - x) * entropy((1 - x) / (2 - x)); }

// a H(r/a) with a = 1 - x + r; decreasing in x.
double f_tilde_entropy_term(double x, double r) {
  const double a = 1 - x + r;
  return a * entropy(std::min(1.0, r / a));
}

struct MuConsts {
  double a, b, r;  // log2 1/(1-mu), log2 1/mu, mu/(1-mu)
};

MuConsts consts(const Rational& mu) {
  const double m = mu.to_double();
  if (!(m > 0.0 && m < 1.0)) throw std::domain_error("field: mu must lie in (0,1)");
  return {-std::log2(1 - m), -std::log2(m), m / (1 - m)};
}

void check_domain(double x, double y) {
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0))
    throw std::domain_error("field: point outside [0,1]^2");
}

constexpr double kHatDrop = 2.0 / 9.0;

}  // namespace

std::string field_name(const Field& f) {
  switch (f.kind) {
    case FieldKind::G: return "G";
    case FieldKind::F: return "F";
    case FieldKind::F_hat: return "F_hat";
    case FieldKind::G_mu: return "G_mu(" + f.mu.to_string() + ")";
    case FieldKind::F_tilde: return "F_tilde(" + f.mu.to_string() + ")";
    case FieldKind::G_tilde: return "G_tilde(" + f.mu.to_string() + ")";
    case FieldKind::min_of: {
      std::string s = "min(";
      for (std::size_t i = 0; i < f.parts.size(); ++i) s += (i ? "," : "") + field_name(f.parts[i]);
      return s + ")";
    }
  }
  return "?";
}

Field parse_field(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("parse_field: cannot parse '" + std::string(text) + "'"); };
  if (text == "G") return Field::g();
  if (text == "F") return Field::f();
  if (text == "F_hat") return Field::f_hat();
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') throw bad();
  const auto head = text.substr(0, open);
  const auto body = text.substr(open + 1, text.size() - open - 2);
  if (head == "min") {
    std::vector<Field> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i == body.size() || (body[i] == ',' && depth == 0)) {
        parts.push_back(parse_field(body.substr(start, i - start)));
        start = i + 1;
      } else if (body[i] == '(') {
        ++depth;
      } else if (body[i] == ')') {
        --depth;
      }
    }
    if (parts.empty()) throw bad();
    return Field::min_of(std::move(parts));
  }
  Rational mu{0};
  try {
    mu = Rational::parse(std::string(body));
  } catch (const std::exception&) {
    throw bad();
  }
  if (!(mu > Rational(0) && mu < Rational(1))) throw bad();
  if (head == "G_mu") return Field::g_mu(mu);
  if (head == "F_tilde") return Field::f_tilde(mu);
  if (head == "G_tilde") return Field::g_tilde(mu);
  throw bad();
}

double field_eval(const Field& f, double x, double y) {
  check_domain(x, y);
  switch (f.kind) {
    case FieldKind::G: return (x - y) + ylog(x, y);
    case FieldKind::F: return -1 + (x + y) + f_entropy_term(x);
    case FieldKind::F_hat:
      return field_eval(Field::f(), x, y) - (x >= 0.75 ? kHatDrop * (1 - x) : 0.0);
    case FieldKind::G_mu: {
      const auto k = consts(f.mu);
      return -1 + x * k.a + (1 - y) * k.b + ylog(x, y);
    }
    case FieldKind::F_tilde: {
      const auto k = consts(f.mu);
      return -1 + (x + y) * k.a + f_tilde_entropy_term(x, k.r);
    }
    case FieldKind::G_tilde: {
      const auto k = consts(f.mu);
      return -1 + x * k.a + (k.r - y) * k.b + ylog(x, y);
    }
    case FieldKind::min_of: {
      if (f.parts.empty()) throw std::invalid_argument("field_eval: empty min_of");
      double m = field_eval(f.parts[0], x, y);
      for (std::size_t i = 1; i < f.parts.size(); ++i) m = std::min(m, field_eval(f.parts[i], x, y));
      return m;
    }
  }
  return 0.0;
}

double field_upper(const Field& f, const Cell& c) {
  check_domain(c.x0, c.y0);
  check_domain(c.x1, c.y1);
  switch (f.kind) {
    case FieldKind::G: return (c.x1 - c.y0) + ylog(c.x1, c.y1);
    case FieldKind::F: return -1 + (c.x1 + c.y1) + f_entropy_term(c.x0);
    case FieldKind::F_hat: {
      // -(2/9)(1-x) is increasing; the indicator only switches it on.
      const double drop = c.x0 >= 0.75 ? -kHatDrop * (1 - c.x1) : 0.0;
      return field_upper(Field::f(), c) + drop;
    }
    case FieldKind::G_mu: {
      const auto k = consts(f.mu);
      return -1 + c.x1 * k.a + (1 - c.y0) * k.b + ylog(c.x1, c.y1);
    }
    case FieldKind::F_tilde: {
      const auto k = consts(f.mu);
      return -1 + (c.x1 + c.y1) * k.a + f_tilde_entropy_term(c.x0, k.r);
    }
    case FieldKind::G_tilde: {
      const auto k = consts(f.mu);
      return -1 + c.x1 * k.a + (k.r - c.y0) * k.b + ylog(c.x1, c.y1);
    }
    case FieldKind::min_of: {
      if (f.parts.empty()) throw std::invalid_argument("field_upper: empty min_of");
      double m = field_upper(f.parts[0], c);
      for (std::size_t i = 1; i < f.parts.size(); ++i) m = std::min(m, field_upper(f.parts[i], c));
      return m;
    }
  }
  return 0.0;
}

}  // namespace ramsey
