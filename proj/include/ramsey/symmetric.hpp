#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/geometry.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

// Fixed constants of the refinement step: |X'| >= c 2^{-C kappa} |X|.
inline constexpr int kRefineC = 6;
inline const Rational kRefineSmallC{1, 8};

struct RefinementWitness {
  int vertex = -1;
  VertexSet x_prime;
  double kappa = 0.0;
  Orientation orientation = Orientation::YZ;  // YZ: red side carries the boost
  // Exact re-verification of the lemma's density clauses.
  bool clause_b_red = false;
  bool clause_b_blue = false;
  std::optional<Color> clause_c;  // color whose boost clause holds, if any
};

struct RefinementFailure {
  int best_vertex = -1;
  double best_kappa = 0.0;
  double best_ratio = 0.0;  // max |X'| / required over all tried (v, kappa)
  double final_step = 0.0;
};

struct RefinementSearch {
  double step = 0.25;
  double kappa_max = 1200.0;
  int max_halvings = 4;
};

struct RefinementResult {
  std::optional<RefinementWitness> witness;
  RefinementFailure failure;  // meaningful only without a witness
};

/// Smallest |X'| allowed by clause (a): ceil(|X| 2^{-C kappa} / 8).
std::size_t refinement_required(std::size_t x, double kappa);

/// Least (kappa, v) on the grid (YZ before ZY) whose set
///   X'(v,kappa) = {w in X : |N_R(v) cap N_R(w) cap Y| >= (p_R + (k^2-1) a_R) p_R |Y|
///                            and |N_B(v) cap N_B(w) cap Z| >= (p_B - a_B) p_B |Z|}
/// (or its color-exchanged analogue) satisfies clause (a). Clauses (b) and (c)
/// are then checked with exact densities and recorded, not enforced.
RefinementResult refinement_witness(const EdgeColoring& g, const VertexSet& X,
                                    const VertexSet& Y, const VertexSet& Z, double alpha_r,
                                    double alpha_b, const RefinementSearch& search = {});

struct SymmetricParams {
  int k = 0;
  Rational eta{1, 8000};
  Rational kappa_cutoff{400};
  std::optional<double> eps;  // default t^{-1/4}
  RefinementSearch search;
  std::size_t step_limit = 0;  // 0 = 4N
};

enum class SymStepKind { red, blue, red_boost, blue_boost };
std::string_view to_string(SymStepKind kind);

struct SymStep {
  SymStepKind kind = SymStepKind::red;
  int vertex = -1;
  double kappa = 0.0;
  Orientation orientation = Orientation::YZ;
  std::size_t x_prime_size = 0;
  bool clause_b_red = false, clause_b_blue = false;
  std::optional<Color> clause_c;
  Rational pr_before{0}, pb_before{0};
  std::optional<Rational> pr_after, pb_after;
  double alpha_r = 0.0, alpha_b = 0.0;
  std::size_t x_before = 0, x_after = 0;
  std::size_t y_before = 0, y_after = 0;
  std::size_t z_before = 0, z_after = 0;
};

enum class SymOutcome { red_book, blue_book, exhausted, refinement_failed, boost_failed, step_limit };
std::string_view to_string(SymOutcome o);

struct SymmetricState {
  VertexSet A, B, X, Y, Z;
  Rational p_r{0}, p_b{0};
  int t_target = 0;
  double eps = 0.0;
  int t_red = 0, t_blue = 0, s_r = 0, s_b = 0;
  std::vector<double> kappa_r, kappa_b;  // kappa of each boost
};

struct SymmetricResult {
  SymOutcome outcome = SymOutcome::exhausted;
  SymmetricState state;
  std::vector<SymStep> steps;
  std::optional<BookWitness> book;
  std::optional<RefinementFailure> failure;
  SymmetricParams params;
  std::size_t n = 0;
};

/// alpha with t in place of k: eps/t when p <= 1/2 + 1/t, else eps (p - 1/2).
double alpha_symmetric(const Rational& p, double eps, int t);

/// X, Y, Z are consecutive blocks of sizes floor(N/3), floor(N/3), rest.
/// Stops when |X| <= 1, |A| >= t, |B| >= t, or Y or Z runs empty.
SymmetricResult run_symmetric(const EdgeColoring& g, const SymmetricParams& params);

// Replays the run: book structure after each step and recorded sizes.
std::string check_symmetric_run(const EdgeColoring& g, const SymmetricResult& r);

struct ConstraintCheck {
  std::string name;
  bool holds = false;
};

// The four constant conditions for (c = 1/8, C = 6, eta, kappa_cutoff), exactly.
std::vector<ConstraintCheck> symmetric_constraints(const Rational& eta,
                                                   const Rational& kappa_cutoff);

struct SymmetricReport {
  std::vector<ConstraintCheck> constraints;
  int t_red = 0, t_blue = 0, s_r = 0, s_b = 0;
  double kappa_r_mean = 0.0, kappa_b_mean = 0.0;
  double zigzag_r = 0.0, zigzag_b = 0.0;  // sum (kappa^2 - 1) over boosts of that color
  double kappa_contribution = 0.0;        // s_R kappa_R, compared with 4t/kappa_cutoff
  double kappa_contribution_bound = 0.0;
  // log2 of realized shrink factors and of each lemma's main term.
  double log_y = 0.0, log_y_bound = 0.0;
  double log_z = 0.0, log_z_bound = 0.0;
  double log_x = 0.0, log_x_bound = 0.0;
  int x_factor_violations = 0;  // refinements with |X'| < c 2^{-C kappa} |X|
};

SymmetricReport symmetric_trace_report(const std::vector<SymStep>& steps,
                                       const SymmetricParams& params, int t_target);

}  // namespace ramsey
