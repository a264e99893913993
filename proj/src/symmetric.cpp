#include "ramsey/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ramsey {

std::string_view to_string(SymStepKind kind) {
  switch (kind) {
    case SymStepKind::red: return "red";
    case SymStepKind::blue: return "blue";
    case SymStepKind::red_boost: return "red_boost";
    case SymStepKind::blue_boost: return "blue_boost";
  }
  return "?";
}

std::string_view to_string(SymOutcome o) {
  switch (o) {
    case SymOutcome::red_book: return "red_book";
    case SymOutcome::blue_book: return "blue_book";
    case SymOutcome::exhausted: return "exhausted";
    case SymOutcome::refinement_failed: return "refinement_failed";
    case SymOutcome::boost_failed: return "boost_failed";
    case SymOutcome::step_limit: return "step_limit";
  }
  return "?";
}

std::size_t refinement_required(std::size_t x, double kappa) {
  const long double need =
      static_cast<long double>(x) * std::exp2(-static_cast<long double>(kRefineC) * kappa) / 8.0L;
  return static_cast<std::size_t>(std::max(1.0L, std::ceil(need)));
}

RefinementResult refinement_witness(const EdgeColoring& g, const VertexSet& X,
                                    const VertexSet& Y, const VertexSet& Z, double alpha_r,
                                    double alpha_b, const RefinementSearch& search) {
  if (X.empty() || Y.empty() || Z.empty() || !X.disjoint(Y) || !X.disjoint(Z) || !Y.disjoint(Z))
    throw std::domain_error("refinement_witness: X, Y, Z must be disjoint and non-empty");
  if (!(alpha_r > 0 && alpha_r < 1 && alpha_b > 0 && alpha_b < 1))
    throw std::domain_error("refinement_witness: alphas must lie in (0, 1)");

  const Rational pr_exact = density(g, Color::red, X, Y);
  const Rational pb_exact = density(g, Color::blue, X, Z);
  const double pr = pr_exact.to_double(), pb = pb_exact.to_double();
  const double ny = static_cast<double>(Y.count()), nz = static_cast<double>(Z.count());
  const auto xs = X.members();
  const std::size_t n = xs.size();
  std::vector<std::vector<std::size_t>> cy(n, std::vector<std::size_t>(n)), cz = cy;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      cy[i][j] = cy[j][i] = intersection_count(g.neighbors(xs[i], Color::red),
                                               g.neighbors(xs[j], Color::red), Y);
      cz[i][j] = cz[j][i] = intersection_count(g.neighbors(xs[i], Color::blue),
                                               g.neighbors(xs[j], Color::blue), Z);
    }

  RefinementResult result;
  RefinementFailure& best = result.failure;
  double h = search.step;
  for (int round = 0; round <= search.max_halvings && !result.witness; ++round, h /= 2) {
    best.final_step = h;
    const auto points = static_cast<std::int64_t>(std::floor(search.kappa_max / h + 1e-9));
    for (std::int64_t gi = 0; gi <= points && !result.witness; ++gi) {
      const double kappa = static_cast<double>(gi) * h;
      const double boost = kappa * kappa - 1.0;
      const double ty_boost = (pr + boost * alpha_r) * pr * ny;
      const double tz_boost = (pb + boost * alpha_b) * pb * nz;
      const double ty_keep = (pr - alpha_r) * pr * ny;
      const double tz_keep = (pb - alpha_b) * pb * nz;
      // Boosted thresholds only grow with kappa; once both exceed every
      // possible count no later grid point can succeed.
      if (ty_boost > ny && tz_boost > nz) break;
      const std::size_t required = refinement_required(n, kappa);
      for (std::size_t i = 0; i < n && !result.witness; ++i) {
        for (Orientation o : {Orientation::YZ, Orientation::ZY}) {
          const double ty = o == Orientation::YZ ? ty_boost : ty_keep;
          const double tz = o == Orientation::YZ ? tz_keep : tz_boost;
          std::size_t size = 0;
          for (std::size_t j = 0; j < n; ++j)
            if (static_cast<double>(cy[i][j]) >= ty && static_cast<double>(cz[i][j]) >= tz) ++size;
          const double ratio = static_cast<double>(size) / static_cast<double>(required);
          if (ratio > best.best_ratio) best = {xs[i], kappa, ratio, h};
          if (size < required) continue;
          RefinementWitness w;
          w.vertex = xs[i];
          w.kappa = kappa;
          w.orientation = o;
          w.x_prime = g.empty_set();
          for (std::size_t j = 0; j < n; ++j)
            if (static_cast<double>(cy[i][j]) >= ty && static_cast<double>(cz[i][j]) >= tz)
              w.x_prime.insert(xs[j]);
          const VertexSet y1 = Y & g.neighbors(xs[i], Color::red);
          const VertexSet z1 = Z & g.neighbors(xs[i], Color::blue);
          const double dr = y1.empty() ? -1.0 : density(g, Color::red, w.x_prime, y1).to_double();
          const double db = z1.empty() ? -1.0 : density(g, Color::blue, w.x_prime, z1).to_double();
          w.clause_b_red = dr >= pr - alpha_r;
          w.clause_b_blue = db >= pb - alpha_b;
          if (dr >= pr + boost * alpha_r)
            w.clause_c = Color::red;
          else if (db >= pb + boost * alpha_b)
            w.clause_c = Color::blue;
          result.witness = w;
          break;
        }
      }
    }
  }
  return result;
}

double alpha_symmetric(const Rational& p, double eps, int t) {
  if (p <= Rational(1, 2) + Rational(1, t)) return eps / t;
  return eps * (p - Rational(1, 2)).to_double();
}

SymmetricResult run_symmetric(const EdgeColoring& g, const SymmetricParams& params) {
  const std::size_t n = g.size();
  if (n < 6) throw std::invalid_argument("run_symmetric: need N >= 6");
  if (params.k < 1 || params.eta <= Rational(0))
    throw std::invalid_argument("run_symmetric: need k >= 1 and eta > 0");
  SymmetricResult r;
  r.params = params;
  r.n = n;
  SymmetricState& st = r.state;
  st.t_target = static_cast<int>((params.eta * Rational(params.k)).ceil());
  st.eps = params.eps.value_or(std::pow(static_cast<double>(st.t_target), -0.25));
  const int third = static_cast<int>(n / 3);
  st.A = g.empty_set();
  st.B = g.empty_set();
  st.X = VertexSet::range(n, 0, third);
  st.Y = VertexSet::range(n, third, 2 * third);
  st.Z = VertexSet::range(n, 2 * third, static_cast<int>(n));
  const double cutoff = params.kappa_cutoff.to_double();
  const std::size_t limit = params.step_limit ? params.step_limit : 4 * n;
  const auto t = static_cast<std::size_t>(st.t_target);

  while (true) {
    if (st.A.count() >= t) {
      r.outcome = SymOutcome::red_book;
      break;
    }
    if (st.B.count() >= t) {
      r.outcome = SymOutcome::blue_book;
      break;
    }
    if (st.X.count() <= 1 || st.Y.empty() || st.Z.empty()) {
      r.outcome = SymOutcome::exhausted;
      break;
    }
    if (r.steps.size() >= limit) {
      r.outcome = SymOutcome::step_limit;
      break;
    }
    st.p_r = density(g, Color::red, st.X, st.Y);
    st.p_b = density(g, Color::blue, st.X, st.Z);
    SymStep s;
    s.pr_before = st.p_r;
    s.pb_before = st.p_b;
    s.alpha_r = alpha_symmetric(st.p_r, st.eps, st.t_target);
    s.alpha_b = alpha_symmetric(st.p_b, st.eps, st.t_target);
    s.x_before = st.X.count();
    s.y_before = st.Y.count();
    s.z_before = st.Z.count();
    const auto ref = refinement_witness(g, st.X, st.Y, st.Z, std::min(s.alpha_r, 0.999),
                                        std::min(s.alpha_b, 0.999), params.search);
    if (!ref.witness) {
      r.outcome = SymOutcome::refinement_failed;
      r.failure = ref.failure;
      break;
    }
    const RefinementWitness& w = *ref.witness;
    const int v = w.vertex;
    s.vertex = v;
    s.kappa = w.kappa;
    s.orientation = w.orientation;
    s.x_prime_size = w.x_prime.count();
    s.clause_b_red = w.clause_b_red;
    s.clause_b_blue = w.clause_b_blue;
    s.clause_c = w.clause_c;
    const VertexSet y1 = st.Y & g.neighbors(v, Color::red);
    const VertexSet z1 = st.Z & g.neighbors(v, Color::blue);

    if (w.kappa >= cutoff) {
      const double gain = (w.kappa * w.kappa - 1.0);
      const bool red_ok = !y1.empty() && density(g, Color::red, w.x_prime, y1).to_double() >=
                                             st.p_r.to_double() + gain * s.alpha_r;
      const bool blue_ok = !z1.empty() && density(g, Color::blue, w.x_prime, z1).to_double() >=
                                              st.p_b.to_double() + gain * s.alpha_b;
      if (red_ok) {
        s.kind = SymStepKind::red_boost;
        st.X = w.x_prime;
        st.Y = y1;
        ++st.s_r;
        st.kappa_r.push_back(w.kappa);
      } else if (blue_ok) {
        s.kind = SymStepKind::blue_boost;
        st.X = w.x_prime;
        st.Z = z1;
        ++st.s_b;
        st.kappa_b.push_back(w.kappa);
      } else {
        r.outcome = SymOutcome::boost_failed;
        r.steps.push_back(s);
        break;
      }
    } else {
      VertexSet rest = w.x_prime;
      rest.erase(v);
      const std::size_t red = intersection_count(g.neighbors(v, Color::red), rest);
      if (red >= (rest.count() + 1) / 2) {
        s.kind = SymStepKind::red;
        st.A.insert(v);
        st.X = w.x_prime & g.neighbors(v, Color::red);
        st.Y = y1;
        ++st.t_red;
      } else {
        s.kind = SymStepKind::blue;
        st.B.insert(v);
        st.X = w.x_prime & g.neighbors(v, Color::blue);
        st.Z = z1;
        ++st.t_blue;
      }
    }
    s.x_after = st.X.count();
    s.y_after = st.Y.count();
    s.z_after = st.Z.count();
    if (!st.X.empty() && !st.Y.empty()) s.pr_after = density(g, Color::red, st.X, st.Y);
    if (!st.X.empty() && !st.Z.empty()) s.pb_after = density(g, Color::blue, st.X, st.Z);
    r.steps.push_back(s);
  }
  if (r.outcome == SymOutcome::red_book && !st.Y.empty())
    r.book = BookWitness{Color::red, st.A, st.Y};
  if (r.outcome == SymOutcome::blue_book && !st.Z.empty())
    r.book = BookWitness{Color::blue, st.B, st.Z};
  return r;
}

std::string check_symmetric_run(const EdgeColoring& g, const SymmetricResult& r) {
  const std::size_t n = g.size();
  const int third = static_cast<int>(n / 3);
  VertexSet A(n), B(n);
  VertexSet X = VertexSet::range(n, 0, third), Y = VertexSet::range(n, third, 2 * third),
            Z = VertexSet::range(n, 2 * third, static_cast<int>(n));
  // The replay cannot rebuild X' without rerunning the search, so it checks
  // the structure and sizes of the recorded final state against each step's
  // numbers, and the book invariants on the final state.
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const SymStep& s = r.steps[i];
    const std::string at = "step " + std::to_string(i) + ": ";
    if (s.x_before != X.count() || s.y_before != Y.count() || s.z_before != Z.count())
      return at + "size before mismatch";
    if (s.pr_before != density(g, Color::red, X, Y) || s.pb_before != density(g, Color::blue, X, Z))
      return at + "density before mismatch";
    const auto ref = refinement_witness(g, X, Y, Z, std::min(s.alpha_r, 0.999),
                                        std::min(s.alpha_b, 0.999), r.params.search);
    if (!ref.witness || ref.witness->vertex != s.vertex || ref.witness->kappa != s.kappa)
      return at + "refinement witness differs on replay";
    const VertexSet& xp = ref.witness->x_prime;
    if (xp.count() < refinement_required(X.count(), s.kappa)) return at + "clause (a) fails";
    const int v = s.vertex;
    switch (s.kind) {
      case SymStepKind::red:
        A.insert(v);
        X = xp & g.neighbors(v, Color::red);
        Y &= g.neighbors(v, Color::red);
        break;
      case SymStepKind::blue:
        B.insert(v);
        X = xp & g.neighbors(v, Color::blue);
        Z &= g.neighbors(v, Color::blue);
        break;
      case SymStepKind::red_boost:
        X = xp;
        Y &= g.neighbors(v, Color::red);
        break;
      case SymStepKind::blue_boost:
        X = xp;
        Z &= g.neighbors(v, Color::blue);
        break;
    }
    if (r.outcome == SymOutcome::boost_failed && i + 1 == r.steps.size()) break;
    if (s.x_after != X.count() || s.y_after != Y.count() || s.z_after != Z.count())
      return at + "size after mismatch";
    const VertexSet XY = X | Y, XZ = X | Z;
    if (!A.disjoint(B) || !A.disjoint(XY) || !A.disjoint(Z) || !B.disjoint(XZ) ||
        !B.disjoint(Y) || !X.disjoint(Y) || !X.disjoint(Z) || !Y.disjoint(Z))
      return at + "sets overlap";
    if (!is_monochromatic(g, Color::red, A)) return at + "A not a red clique";
    if (!is_monochromatic(g, Color::blue, B)) return at + "B not a blue clique";
    std::string err;
    A.for_each([&](int a) {
      if (err.empty() && !XY.subset_of(g.neighbors(a, Color::red))) err = "A to X u Y not red";
    });
    B.for_each([&](int b) {
      if (err.empty() && !XZ.subset_of(g.neighbors(b, Color::blue))) err = "B to X u Z not blue";
    });
    if (!err.empty()) return at + err;
  }
  if (r.outcome != SymOutcome::boost_failed &&
      !(A == r.state.A && B == r.state.B && X == r.state.X && Y == r.state.Y && Z == r.state.Z))
    return "final state does not match replay";
  if (r.book && !is_valid(g, *r.book)) return "book witness invalid";
  return {};
}

std::vector<ConstraintCheck> symmetric_constraints(const Rational& eta,
                                                   const Rational& kappa_cutoff) {
  const Rational log_inv_c(3);  // log2(1/c) with c = 1/8
  const Rational C(kRefineC);
  const Rational k2 = kappa_cutoff * kappa_cutoff;
  const Rational inv_eta = Rational(1) / eta;
  return {
      {"kappa_cutoff >= 8C", kappa_cutoff >= Rational(8) * C},
      {"kappa_cutoff^2 >= 8 log2(1/c)", k2 >= Rational(8) * log_inv_c},
      {"2(log2(1/c) + C kappa_cutoff) + 5 < 1/eta",
       Rational(2) * (log_inv_c + C * kappa_cutoff) + Rational(5) < inv_eta},
      {"kappa_cutoff^2 >= 20/eta", k2 >= Rational(20) * inv_eta},
  };
}

SymmetricReport symmetric_trace_report(const std::vector<SymStep>& steps,
                                       const SymmetricParams& params, int t_target) {
  SymmetricReport rep;
  rep.constraints = symmetric_constraints(params.eta, params.kappa_cutoff);
  double sum_kr = 0, sum_kb = 0;
  const double cutoff = params.kappa_cutoff.to_double();
  const double lc = std::log2(kRefineSmallC.to_double());
  for (const auto& s : steps) {
    const double need_log = lc - kRefineC * s.kappa;
    if (s.x_prime_size == 0 ||
        std::log2(static_cast<double>(s.x_prime_size)) <
            need_log + std::log2(static_cast<double>(s.x_before)) - 1e-12)
      ++rep.x_factor_violations;
    switch (s.kind) {
      case SymStepKind::red:
        ++rep.t_red;
        rep.log_x_bound += -1.0 + lc - kRefineC * cutoff;
        break;
      case SymStepKind::blue:
        ++rep.t_blue;
        rep.log_x_bound += -1.0 + lc - kRefineC * cutoff;
        break;
      case SymStepKind::red_boost:
        ++rep.s_r;
        sum_kr += s.kappa;
        rep.zigzag_r += s.kappa * s.kappa - 1;
        rep.log_x_bound += need_log;
        break;
      case SymStepKind::blue_boost:
        ++rep.s_b;
        sum_kb += s.kappa;
        rep.zigzag_b += s.kappa * s.kappa - 1;
        rep.log_x_bound += need_log;
        break;
    }
  }
  if (rep.s_r) rep.kappa_r_mean = sum_kr / rep.s_r;
  if (rep.s_b) rep.kappa_b_mean = sum_kb / rep.s_b;
  rep.kappa_contribution = rep.s_r * rep.kappa_r_mean;
  rep.kappa_contribution_bound = 4.0 * t_target / cutoff;
  if (!steps.empty()) {
    auto ratio = [](std::size_t a, std::size_t b) {
      return std::log2(static_cast<double>(std::max<std::size_t>(a, 1))) -
             std::log2(static_cast<double>(b));
    };
    rep.log_x = ratio(steps.back().x_after, steps.front().x_before);
    rep.log_y = ratio(steps.back().y_after, steps.front().y_before);
    rep.log_z = ratio(steps.back().z_after, steps.front().z_before);
  }
  rep.log_y_bound = -static_cast<double>(rep.t_red + rep.s_r);
  rep.log_z_bound = -static_cast<double>(rep.t_blue + rep.s_b);
  return rep;
}

}  // namespace ramsey
