#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ramsey/rational.hpp"

namespace ramsey {

/// Binary entropy in bits; H(0) = H(1) = 0. Throws domain_error outside [0,1].
double entropy(double z);

// y log2((x+y)/y), extended by 0 at y = 0. Increasing in both x and y.
double ylog(double x, double y);

enum class FieldKind { G, F, G_mu, F_tilde, G_tilde, F_hat, min_of };

struct Field {
  FieldKind kind = FieldKind::G;
  Rational mu{1, 2};         // G_mu, F_tilde, G_tilde
  std::vector<Field> parts;  // min_of

  static Field g() { return {FieldKind::G, {1, 2}, {}}; }
  static Field f() { return {FieldKind::F, {1, 2}, {}}; }
  static Field f_hat() { return {FieldKind::F_hat, {1, 2}, {}}; }
  static Field g_mu(Rational m) { return {FieldKind::G_mu, m, {}}; }
  static Field f_tilde(Rational m) { return {FieldKind::F_tilde, m, {}}; }
  static Field g_tilde(Rational m) { return {FieldKind::G_tilde, m, {}}; }
  static Field min_of(std::vector<Field> fs) { return {FieldKind::min_of, {1, 2}, std::move(fs)}; }
};

// Names: G, F, F_hat, G_mu(2/5), F_tilde(1/5), G_tilde(1/5), min(F,G_mu(2/5)).
std::string field_name(const Field& f);
Field parse_field(std::string_view text);

/// Throws domain_error outside [0,1]^2.
double field_eval(const Field& f, double x, double y);

struct Cell {
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Upper bound of f over the closed cell (supremum for F_hat, which jumps at
/// x = 3/4). Each field is a sum of terms monotone in x and in y, so every
/// term is bounded at a corner; min_of takes the min of its parts' bounds.
/// Exact up to floating-point rounding of the corner evaluations.
double field_upper(const Field& f, const Cell& c);

}  // namespace ramsey
