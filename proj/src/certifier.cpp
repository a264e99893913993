#include "ramsey/certifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

namespace ramsey {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

auto key(const Cell& c) { return std::make_tuple(c.x0, c.x1, c.y0, c.y1); }

struct ByBound {
  bool operator()(const CellBound& a, const CellBound& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    return key(a.cell) > key(b.cell);  // ties: smaller cell coordinates first
  }
};

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

CertifiedBound certify_max(const Field& f, const CertifyOptions& opt) {
  if (!(opt.tol > 0.0)) throw std::invalid_argument("certify_max: tol must be positive");
  if (opt.cell_budget < 1) throw std::invalid_argument("certify_max: empty cell budget");
  const auto t0 = Clock::now();
  CertifiedBound out;
  out.field = field_name(f);
  out.region = opt.region;
  out.tol = opt.tol;
  out.rho = opt.rho;

  double best = -INFINITY;
  auto consider = [&](const Cell& c) {
    const double cx = (c.x0 + c.x1) / 2, cy = (c.y0 + c.y1) / 2;
    const double v = field_eval(f, cx, cy);
    if (v > best) {
      best = v;
      out.arg_x = cx;
      out.arg_y = cy;
    }
    ++out.evaluated;
    return CellBound{c, field_upper(f, c) + opt.rho};
  };

  std::priority_queue<CellBound, std::vector<CellBound>, ByBound> heap;
  heap.push(consider(opt.region));
  while (true) {
    const auto top = heap.top();
    if (top.bound - (best - opt.rho) <= opt.tol) {
      out.converged = true;
      break;
    }
    if (out.evaluated + 4 > opt.cell_budget) break;
    heap.pop();
    const Cell& c = top.cell;
    const double mx = (c.x0 + c.x1) / 2, my = (c.y0 + c.y1) / 2;
    for (const Cell& child : {Cell{c.x0, mx, c.y0, my}, Cell{mx, c.x1, c.y0, my},
                              Cell{c.x0, mx, my, c.y1}, Cell{mx, c.x1, my, c.y1}})
      heap.push(consider(child));
  }
  out.upper = heap.top().bound;
  out.lower = best - opt.rho;
  out.certified_max = (out.upper + out.lower) / 2;
  out.error_radius = (out.upper - out.lower) / 2;
  out.leaves.reserve(heap.size());
  while (!heap.empty()) {
    out.leaves.push_back(heap.top());
    heap.pop();
  }
  std::sort(out.leaves.begin(), out.leaves.end(),
            [](const CellBound& a, const CellBound& b) { return key(a.cell) < key(b.cell); });
  out.wall_seconds = seconds_since(t0);
  return out;
}

nlohmann::json certificate_json(const CertifiedBound& b) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& l : b.leaves)
    cells.push_back({l.cell.x0, l.cell.x1, l.cell.y0, l.cell.y1, l.bound});
  return {
      {"field", b.field},
      {"region", {b.region.x0, b.region.x1, b.region.y0, b.region.y1}},
      {"tol", b.tol},
      {"rho", b.rho},
      {"converged", b.converged},
      {"lower", b.lower},
      {"upper", b.upper},
      {"certified_max", b.certified_max},
      {"error_radius", b.error_radius},
      {"witness", {b.arg_x, b.arg_y}},
      {"cells", std::move(cells)},
  };
}

std::string check_certificate(const nlohmann::json& cert) {
  try {
    const Field f = parse_field(cert.at("field").get<std::string>());
    const auto& r = cert.at("region");
    const Cell region{r.at(0).get<double>(), r.at(1).get<double>(), r.at(2).get<double>(),
                      r.at(3).get<double>()};
    const double rho = cert.at("rho").get<double>();
    const double upper = cert.at("upper").get<double>();
    const double lower = cert.at("lower").get<double>();

    std::set<std::tuple<double, double, double, double>> cells;
    double max_bound = -INFINITY;
    std::size_t index = 0;
    for (const auto& row : cert.at("cells")) {
      const Cell c{row.at(0).get<double>(), row.at(1).get<double>(), row.at(2).get<double>(),
                   row.at(3).get<double>()};
      const double bound = row.at(4).get<double>();
      if (!(c.x0 < c.x1 && c.y0 < c.y1)) return "cell " + std::to_string(index) + " is degenerate";
      const double recomputed = field_upper(f, c) + rho;
      if (recomputed > bound)
        return "cell " + std::to_string(index) + ": recorded bound below recomputed bound";
      if (!cells.insert(key(c)).second) return "cell " + std::to_string(index) + " repeated";
      max_bound = std::max(max_bound, bound);
      ++index;
    }
    if (cells.empty()) return "no cells";
    if (max_bound != upper) return "upper is not the largest cell bound";

    // Every cell must be a node of the dyadic quadtree over the region; its
    // proper ancestors are internal nodes. Leaves tile the region iff walking
    // down from the root through internal nodes reaches every leaf and
    // nothing else.
    std::set<std::tuple<double, double, double, double>> internal;
    for (const auto& k : cells) {
      const Cell target{std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k)};
      Cell c = region;
      for (int depth = 0; !(c == target); ++depth) {
        if (depth > 60 || target.x0 < c.x0 || target.x1 > c.x1 || target.y0 < c.y0 || target.y1 > c.y1)
          return "cell outside the dyadic quadtree of the region";
        internal.insert(key(c));
        const double mx = (c.x0 + c.x1) / 2, my = (c.y0 + c.y1) / 2;
        c = {target.x0 < mx ? c.x0 : mx, target.x0 < mx ? mx : c.x1,
             target.y0 < my ? c.y0 : my, target.y0 < my ? my : c.y1};
      }
    }
    for (const auto& k : cells)
      if (internal.count(k)) return "overlapping cells";
    std::function<bool(const Cell&)> covered = [&](const Cell& c) {
      if (cells.count(key(c))) return true;
      if (!internal.count(key(c))) return false;
      const double mx = (c.x0 + c.x1) / 2, my = (c.y0 + c.y1) / 2;
      return covered({c.x0, mx, c.y0, my}) && covered({mx, c.x1, c.y0, my}) &&
             covered({c.x0, mx, my, c.y1}) && covered({mx, c.x1, my, c.y1});
    };
    if (!covered(region)) return "cells do not tile the region";

    const auto& w = cert.at("witness");
    const double wx = w.at(0).get<double>(), wy = w.at(1).get<double>();
    if (wx < region.x0 || wx > region.x1 || wy < region.y0 || wy > region.y1)
      return "witness outside region";
    if (field_eval(f, wx, wy) - rho != lower) return "lower is not attained at the witness";
    if (lower > upper) return "lower exceeds upper";
  } catch (const std::exception& e) {
    return std::string("malformed certificate: ") + e.what();
  }
  return "";
}

OffdiagReport verify_offdiag_inequality(const std::vector<Rational>& mus, double delta,
                                        const CertifyOptions& opt) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("verify_offdiag: delta in (0,1)");
  OffdiagReport rep;
  rep.delta = delta;
  rep.all_hold = !mus.empty();
  double worst = INFINITY;
  for (const auto& mu : mus) {
    if (!(mu > Rational(0) && mu <= Rational(1, 5)))
      throw std::invalid_argument("verify_offdiag: mu must lie in (0, 1/5]");
    const double m = mu.to_double(), r = m / (1 - m);
    OffdiagEntry e;
    e.mu = mu;
    e.rhs = (1 + r) * entropy(m) - 1 - delta * r;
    const auto b = certify_max(Field::min_of({Field::f_tilde(mu), Field::g_tilde(mu)}), opt);
    e.sup_lower = b.lower;
    e.sup_upper = b.upper;
    e.converged = b.converged;
    e.margin = e.rhs - e.sup_upper;
    e.normalized_margin = e.margin / r;
    e.holds = e.margin > opt.rho;
    rep.all_hold = rep.all_hold && e.holds;
    if (e.normalized_margin < worst) {
      worst = e.normalized_margin;
      rep.worst_mu = mu;
    }
    rep.entries.push_back(e);
  }
  return rep;
}

double taylor_difference(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("taylor_difference: x outside [0,1]");
  return (x + x * x / 4) + (2 - x) * entropy(1 / (2 - x)) - (2 - x * x / 10);
}

double taylor_difference_d1(double x) {
  if (x >= 1.0) return -INFINITY;
  return 1 + 0.7 * x + std::log2((1 - x) / (2 - x));
}

double taylor_difference_d2(double x) {
  if (x >= 1.0) return -INFINITY;
  return 0.7 - 1 / (std::log(2.0) * (1 - x) * (2 - x));
}

TaylorReport verify_taylor_inequality(double tol, int degree) {
  if (!(tol > 0.0) || degree < 2) throw std::invalid_argument("verify_taylor: bad arguments");
  TaylorReport rep;
  rep.tol = tol;
  // (1-x)(2-x) decreases on [0,1], so d'' is largest at 0.
  rep.max_d2 = taylor_difference_d2(0.0);
  rep.concave = rep.max_d2 < 0.0;

  auto bound = [](double a, double b) {
    const double left = taylor_difference(a) + std::max(0.0, taylor_difference_d1(a)) * (b - a);
    const double right = taylor_difference(b) + std::max(0.0, -taylor_difference_d1(b)) * (b - a);
    return std::min(left, right) + kRoundingSlack;
  };
  rep.max_bound = -INFINITY;
  std::vector<std::pair<double, double>> stack;
  constexpr int kInitial = 1024;
  for (int i = kInitial - 1; i >= 0; --i)
    stack.emplace_back(static_cast<double>(i) / kInitial, static_cast<double>(i + 1) / kInitial);
  bool ok = true;
  while (!stack.empty()) {
    const auto [a, b] = stack.back();
    stack.pop_back();
    const double u = bound(a, b);
    if (u > tol && b - a > 1e-12) {
      const double m = (a + b) / 2;
      stack.emplace_back(m, b);
      stack.emplace_back(a, m);
      continue;
    }
    if (u > tol) ok = false;
    rep.max_bound = std::max(rep.max_bound, u);
    ++rep.cells;
  }
  rep.certified = rep.concave && ok;

  // d = 0.35 x^2 + sum_{n>=2} (2^{1-n} - 1) x^n / (n (n-1) ln 2); c_0 = c_1 = 0.
  rep.coefficients.assign(static_cast<std::size_t>(degree) + 1, 0.0);
  for (int n = 2; n <= degree; ++n)
    rep.coefficients[static_cast<std::size_t>(n)] =
        (std::exp2(1 - n) - 1) / (n * (n - 1) * std::log(2.0));
  rep.coefficients[2] += 0.25 + 0.1;
  rep.coefficients_nonpositive =
      std::all_of(rep.coefficients.begin(), rep.coefficients.end(), [](double c) { return c <= 0; });
  return rep;
}

std::vector<ContourRow> contour(const Field& f, int resolution, std::optional<double> threshold) {
  if (resolution < 2) throw std::invalid_argument("contour: resolution must be >= 2");
  std::vector<ContourRow> rows;
  rows.reserve(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution));
  const double h = 1.0 / (resolution - 1);
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j) {
      // Exact endpoints: i*h may round above 1.
      const double x = i == resolution - 1 ? 1.0 : i * h;
      const double y = j == resolution - 1 ? 1.0 : j * h;
      const double v = field_eval(f, x, y);
      rows.push_back({x, y, threshold ? (v > *threshold ? 1.0 : 0.0) : v});
    }
  return rows;
}

void write_contour_csv(std::ostream& os, const std::vector<ContourRow>& rows) {
  os << "x,y,value\n";
  char buf[96];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.12g\n", r.x, r.y, r.value);
    os << buf;
  }
}

std::vector<std::string> claim_names() {
  return {"max_G", "max_min_F_G", "max_min_F_Gmu", "max_min_Fhat_Gmu", "offdiag_delta", "taylor"};
}

ClaimResult check_claim(const std::string& name, const CertifyOptions& opt) {
  const auto t0 = Clock::now();
  ClaimResult res;
  res.name = name;
  // Window claims need an interval narrower than the window itself.
  auto window = [&](const Field& f, double lo, double hi) {
    res.statement = "max " + field_name(f) + " in [" + fmt(lo, 4) + ", " + fmt(hi, 4) + "]";
    CertifyOptions o = opt;
    o.tol = std::min(opt.tol, (hi - lo) / 10);
    const auto b = certify_max(f, o);
    res.holds = b.converged && b.lower >= lo && b.upper <= hi;
    res.detail = "certified " + fmt(b.certified_max) + " +- " + fmt(b.error_radius, 8) +
                 " (cells " + std::to_string(b.leaves.size()) + (b.converged ? "" : ", budget exceeded") + ")";
    res.bound = b;
  };
  const Rational two_fifths{2, 5};
  if (name == "max_G") {
    window(Field::g(), 1.32, 1.34);
  } else if (name == "max_min_F_G") {
    window(Field::min_of({Field::f(), Field::g()}), 1.049, 1.059);
  } else if (name == "max_min_F_Gmu") {
    window(Field::min_of({Field::f(), Field::g_mu(two_fifths)}), 1.0012, 1.0022);
  } else if (name == "max_min_Fhat_Gmu") {
    const auto f = Field::min_of({Field::f_hat(), Field::g_mu(two_fifths)});
    res.statement = "max " + field_name(f) + " < 0.985";
    const auto b = certify_max(f, opt);
    res.holds = b.upper < 0.985;
    res.detail = "certified " + fmt(b.certified_max) + " +- " + fmt(b.error_radius, 8) +
                 ", attained near (" + fmt(b.arg_x, 4) + ", " + fmt(b.arg_y, 4) + ")" +
                 (b.converged ? "" : ", budget exceeded");
    res.bound = b;
    // Where the supremum sits relative to the jump of F_hat at x = 3/4.
    CertifyOptions left = opt;
    left.tol = std::min(opt.tol, 1e-4);
    CertifyOptions right = left;
    left.region = {0, 0.75, 0, 1};
    right.region = {0.75, 1, 0, 1};
    const auto bl = certify_max(f, left), br = certify_max(f, right);
    res.detail += "; x<3/4: sup <= " + fmt(bl.upper) + ", x>=3/4: max <= " + fmt(br.upper);
  } else if (name == "offdiag_delta") {
    const std::vector<Rational> mus{{1, 100}, {1, 20}, {1, 10}, {1, 5}};
    res.statement = "min(F_tilde,G_tilde) below rhs with delta=2/9, mu in {1/100,1/20,1/10,1/5}, worst at 1/5";
    // Margins at mu = 1/100 are near 1e-3, so compare them at a finer tol.
    CertifyOptions o = opt;
    o.tol = std::min(opt.tol, 1e-5);
    const auto rep = verify_offdiag_inequality(mus, 2.0 / 9.0, o);
    res.holds = rep.all_hold && rep.worst_mu && *rep.worst_mu == Rational(1, 5);
    for (const auto& e : rep.entries)
      res.detail += "mu=" + e.mu.to_string() + " margin " + fmt(e.margin) + " (per r " +
                    fmt(e.normalized_margin, 4) + ") ";
    if (!res.detail.empty()) res.detail.pop_back();
  } else if (name == "taylor") {
    res.statement = "(x + x^2/4) + (2-x) H(1/(2-x)) <= 2 - x^2/10 on [0,1]";
    const auto rep = verify_taylor_inequality(1e-6, 12);
    res.holds = rep.certified && rep.coefficients_nonpositive;
    res.detail = "max cell bound " + fmt(rep.max_bound, 9) + ", sup d'' " + fmt(rep.max_d2) +
                 ", coefficients to degree 12 " + (rep.coefficients_nonpositive ? "non-positive" : "mixed sign");
  } else {
    throw std::invalid_argument("unknown claim '" + name + "'");
  }
  res.seconds = seconds_since(t0);
  return res;
}

}  // namespace ramsey
