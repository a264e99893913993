#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

// alpha(p) with the diagonal reference point 1/2 or, off the diagonal, the
// density p_initial at the start of the book phase.
double alpha_diagonal(const Rational& p, double eps, int k);
double alpha_offdiag(const Rational& p, double eps, int k, const Rational& p_initial);

enum class BookKind { v1, cutoff, offdiag };

struct BookVariant {
  BookKind kind = BookKind::v1;
  int k = 0;
  int l = 0;       // offdiag only
  Rational mu{1, 2};

  static BookVariant v1(int k) { return {BookKind::v1, k, k, Rational(1, 2)}; }
  static BookVariant cutoff(int k, Rational mu) { return {BookKind::cutoff, k, k, mu}; }
  // mu = l/(k+l)
  static BookVariant offdiag(int k, int l) {
    return {BookKind::offdiag, k, l, Rational(l, k + l)};
  }
  int blue_target() const { return kind == BookKind::offdiag ? l : k; }
};

std::string to_string(BookKind kind);

enum class StepKind { red, blue, boost };
std::string_view to_string(StepKind kind);

struct StepRecord {
  StepKind kind = StepKind::red;
  int vertex = -1;
  Rational beta{0};   // |N_B(v) cap X'| / |X'| with X' = X \ {v}
  std::size_t s_size = 0, t_size = 0, u_size = 0;
  Rational p_before{0};
  std::optional<Rational> p_after;  // empty once X or Y is empty
  std::size_t x_before = 0, x_after = 0;
  std::size_t y_before = 0, y_after = 0;
  double alpha = 0.0;
  bool prosperous = false;
  bool es_phase = false;  // off-diagonal warm-up step, not a book step
};

struct BookState {
  VertexSet A, B, X, Y;
  Rational p{0};
  Rational p_initial{0};
  double eps = 0.0;
  Rational mu{1, 2};
  int t = 0, s = 0, b = 0;  // red, boost and blue steps so far
  bool swapped = false;     // colors were exchanged at the start
};

enum class BookOutcome { red_clique, blue_clique, exhausted };
std::string_view to_string(BookOutcome o);

struct BookOptions {
  std::optional<double> eps;   // default k^{-1/4}
  double guard = 0.0;          // widens the prosperity threshold downward
  bool prefer_max_gain = false;  // pick the prosperous v with the largest d_R(T,U)
  std::function<void(const BookState&, const StepRecord&)> observer;
};

struct BookResult {
  BookOutcome outcome = BookOutcome::exhausted;
  BookState state;
  std::vector<StepRecord> records;
  // Colors refer to the input coloring even when the run swapped them.
  std::optional<CliqueWitness> clique;
  std::optional<BookWitness> book;  // (A, Y) when both are non-empty
  BookVariant variant;
  std::size_t n = 0;
};

/// Initial split X = {0..ceil(N/2)-1}, Y = rest. The v1 and cutoff variants
/// exchange the colors when d_R(X,Y) < 1/2. The off-diagonal variant first
/// runs off-diagonal exploration steps while d_R(X,Y) < 1 - mu.
BookResult run_book(const EdgeColoring& g, const BookVariant& variant,
                    const BookOptions& options = {});

// Replays a run and returns the first broken invariant or contract, or "".
// Checks the book structure after every step, the blue threshold, beta < mu
// on boosts, and p_after >= p_before - alpha on red steps.
std::string check_book_run(const EdgeColoring& g, const BookResult& r);

struct LemmaCheck {
  double realized = 0.0;
  double bound = 0.0;
  bool holds = false;
};

struct TraceReport {
  bool empty = true;
  int t = 0, s = 0, b = 0;
  LemmaCheck p_floor;        // min p vs reference - eps
  LemmaCheck y_size;         // log2(|Y_end|/|Y_0|) vs (t+s) log2(reference density)
  LemmaCheck x_size;         // log2(|X_end|/|X_0|) vs t log2(1-mu) + b log2(mu) + s log2(beta)
  double zigzag = 0.0;       // sum (1-beta)/beta over boosts with beta > 0
  int zero_beta_boosts = 0;
  double beta_harmonic = 0.0;  // s / sum 1/beta
  LemmaCheck beta_lower;     // beta vs s/(s+t)
  bool small_s = false;      // s < sqrt(k): beta bound not meaningful
  int boost_violations = 0;  // gain < alpha(1-beta)/beta
  int red_violations = 0;    // p_after < p_before - alpha
  bool chain_consistent = true;  // sizes telescope step to step
};

struct ReportParams {
  int k = 0;
  Rational mu{1, 2};
  double eps = 0.0;
  Rational reference{1, 2};  // 1/2, or p_initial off the diagonal
  std::size_t n = 0;
};

ReportParams report_params(const BookResult& r);
TraceReport trace_report(const std::vector<StepRecord>& records, const ReportParams& params);

}  // namespace ramsey
