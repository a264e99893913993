#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramsey/fields.hpp"

namespace ramsey {

inline constexpr double kDefaultTol = 1e-4;
inline constexpr double kRoundingSlack = 1e-12;
inline constexpr std::size_t kDefaultCellBudget = 4'000'000;

struct CertifyOptions {
  double tol = kDefaultTol;
  std::size_t cell_budget = kDefaultCellBudget;  // cells evaluated, root included
  double rho = kRoundingSlack;
  Cell region{};
};

struct CellBound {
  Cell cell;
  double bound = 0.0;  // field_upper + rho
};

struct CertifiedBound {
  std::string field;
  Cell region;
  double tol = 0.0, rho = 0.0;
  double lower = 0.0;  // attained value at (arg_x, arg_y), minus rho
  double upper = 0.0;  // max leaf bound
  double certified_max = 0.0, error_radius = 0.0;
  double arg_x = 0.0, arg_y = 0.0;
  bool converged = false;  // false: cell budget ran out, [lower, upper] still valid
  std::size_t evaluated = 0;
  std::vector<CellBound> leaves;  // tiling of the region, sorted
  double wall_seconds = 0.0;      // not part of the certificate
};

/// Best-first dyadic subdivision: split the leaf with the largest bound until
/// upper - lower <= tol or the budget is spent. The true supremum lies in
/// [lower, upper] either way.
CertifiedBound certify_max(const Field& f, const CertifyOptions& opt = {});

// Certificate JSON: field, region, tol, rho, lower, upper, witness, cells as
// [x0,x1,y0,y1,bound]. Deterministic for a given field and options.
nlohmann::json certificate_json(const CertifiedBound& b);

/// Re-derives every cell bound, checks the cells tile the region exactly
/// (dyadic quadtree), that upper is the largest bound and that lower is
/// attained at the witness. Returns "" when the certificate is sound.
std::string check_certificate(const nlohmann::json& cert);

struct OffdiagEntry {
  Rational mu{0};
  double rhs = 0.0;  // (1+r) H(mu) - 1 - delta r, r = mu/(1-mu)
  double sup_lower = 0.0, sup_upper = 0.0;
  double margin = 0.0;             // rhs - sup_upper
  double normalized_margin = 0.0;  // margin / r: slack left in delta
  bool holds = false;
  bool converged = false;
};

struct OffdiagReport {
  double delta = 0.0;
  std::vector<OffdiagEntry> entries;
  bool all_hold = false;
  std::optional<Rational> worst_mu;  // least normalized margin
};

/// Certifies sup min{F_tilde(mu), G_tilde(mu)} < rhs for each mu in (0, 1/5].
OffdiagReport verify_offdiag_inequality(const std::vector<Rational>& mus, double delta,
                                        const CertifyOptions& opt = {});

// d(x) = (x + x^2/4) + (2-x) H(1/(2-x)) - (2 - x^2/10) and its derivatives.
double taylor_difference(double x);
double taylor_difference_d1(double x);
double taylor_difference_d2(double x);

struct TaylorReport {
  double tol = 0.0;
  double max_bound = 0.0;  // over all cells, rho included
  double max_d2 = 0.0;     // sup of d'' on [0,1], attained at 0
  bool concave = false;
  bool certified = false;  // concave and max_bound <= tol
  std::size_t cells = 0;
  std::vector<double> coefficients;  // d(x) = sum c_n x^n
  bool coefficients_nonpositive = false;
};

/// Tangent-line bounds on a concave d: on [a,b], d <= d(a) + max(0, d'(a)) (b-a)
/// and d <= d(b) + max(0, -d'(b)) (b-a). Concavity is checked from the
/// closed form of d'', which is decreasing in x.
TaylorReport verify_taylor_inequality(double tol = 1e-6, int degree = 12);

struct ContourRow {
  double x, y, value;
};

/// Uniform grid x_i = i/(resolution-1); value is 1{f > threshold} when a
/// threshold is given.
std::vector<ContourRow> contour(const Field& f, int resolution,
                                std::optional<double> threshold = std::nullopt);
void write_contour_csv(std::ostream& os, const std::vector<ContourRow>& rows);

struct ClaimResult {
  std::string name;
  std::string statement;
  bool holds = false;
  std::string detail;
  double seconds = 0.0;
  std::optional<CertifiedBound> bound;
};

std::vector<std::string> claim_names();
ClaimResult check_claim(const std::string& name, const CertifyOptions& opt = {});

}  // namespace ramsey
