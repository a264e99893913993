#include "ramsey/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ramsey/rng.hpp"

namespace ramsey {

VectorFamily sigma_embedding(const EdgeColoring& g, Color c, const VertexSet& X,
                             const VertexSet& Y, double p, double alpha) {
  if (!(alpha > 0.0) || !(p > 0.0) || Y.empty())
    throw std::domain_error("sigma_embedding: need alpha, p > 0 and Y non-empty");
  const double scale = 1.0 / std::sqrt(alpha * p * static_cast<double>(Y.count()));
  const auto ys = Y.members();
  VectorFamily out;
  X.for_each([&](int v) {
    Vector s(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) {
      const double ind = g.neighbors(v, c).contains(ys[i]) ? 1.0 : 0.0;
      s[i] = (ind - p) * scale;
    }
    out.push_back(std::move(s));
  });
  return out;
}

double dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::pair<std::int64_t, std::int64_t> inner_product_identity_check(
    const EdgeColoring& g, const VertexSet& X, const VertexSet& Y, int v, int w) {
  if (!X.contains(v) || !X.contains(w))
    throw std::invalid_argument("inner_product_identity_check: v, w must lie in X");
  std::int64_t dot_product = 0;
  Y.for_each([&](int y) {
    const int a = g.neighbors(v, Color::red).contains(y) ? 1 : 0;
    const int b = g.neighbors(w, Color::red).contains(y) ? 1 : 0;
    dot_product += a * b;
  });
  const auto count = static_cast<std::int64_t>(
      intersection_count(g.neighbors(v, Color::red), g.neighbors(w, Color::red), Y));
  return {dot_product, count};
}

namespace {

// Values sorted descending; returns how many are >= threshold.
std::int64_t count_at_least(const std::vector<double>& desc, double threshold) {
  const auto it = std::partition_point(desc.begin(), desc.end(),
                                       [&](double v) { return v >= threshold; });
  return static_cast<std::int64_t>(it - desc.begin());
}

// Scans kappa = 0, h, 2h, ... <= kappa_max, halving h on a miss.
template <class Try>
bool scan_grid(double step, double kappa_max, int max_halvings, Try&& attempt) {
  double h = step;
  for (int round = 0; round <= max_halvings; ++round, h /= 2) {
    const auto points = static_cast<std::int64_t>(std::floor(kappa_max / h + 1e-9));
    for (std::int64_t i = 0; i <= points; ++i)
      if (attempt(static_cast<double>(i) * h, h)) return true;
  }
  return false;
}

std::vector<std::vector<double>> gram(const VectorFamily& s) {
  std::vector<std::vector<double>> m(s.size(), std::vector<double>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j) m[i][j] = m[j][i] = dot(s[i], s[j]);
  return m;
}

}  // namespace

std::optional<GeometricWitness> geometric_witness(const VectorFamily& sigma_y,
                                                  const VectorFamily& sigma_z, double step,
                                                  double kappa_max, int max_halvings) {
  if (sigma_y.size() != sigma_z.size() || sigma_y.empty())
    throw std::invalid_argument("geometric_witness: families must be non-empty, same size");
  const auto gy = gram(sigma_y), gz = gram(sigma_z);
  const std::size_t n = sigma_y.size();
  // Boosted-side products over pairs whose other side is >= -1.
  std::vector<double> yz, zy;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (gz[i][j] >= -1.0) yz.push_back(gy[i][j]);
      if (gy[i][j] >= -1.0) zy.push_back(gz[i][j]);
    }
  std::sort(yz.rbegin(), yz.rend());
  std::sort(zy.rbegin(), zy.rend());
  const double total = static_cast<double>(n * n);
  GeometricWitness w;
  const bool found = scan_grid(step, kappa_max, max_halvings, [&](double kappa, double h) {
    const double need = std::exp2(-6.0 * kappa) / 8.0;
    for (Orientation o : {Orientation::YZ, Orientation::ZY}) {
      const auto count = count_at_least(o == Orientation::YZ ? yz : zy, kappa * kappa - 1.0);
      if (static_cast<double>(count) >= need * total) {
        w = {kappa, o, count, static_cast<double>(count) / total, h};
        return true;
      }
    }
    return false;
  });
  if (!found) return std::nullopt;
  return w;
}

std::optional<OneColorWitness> one_color_witness(const VectorFamily& sigma, double step,
                                                 double kappa_max, int max_halvings) {
  if (sigma.empty()) throw std::invalid_argument("one_color_witness: empty family");
  const auto gm = gram(sigma);
  std::vector<double> all;
  for (const auto& row : gm) all.insert(all.end(), row.begin(), row.end());
  std::sort(all.rbegin(), all.rend());
  const double total = static_cast<double>(all.size());
  OneColorWitness w;
  const bool found = scan_grid(step, kappa_max, max_halvings, [&](double kappa, double) {
    const double k2 = kappa * kappa;
    const auto count = count_at_least(all, k2 - 1.0);
    if (static_cast<double>(count) * (k2 + 2) * (k2 + 2) >= total) {
      w = {kappa, count, static_cast<double>(count) / total};
      return true;
    }
    return false;
  });
  if (!found) return std::nullopt;
  return w;
}

double cosh_sqrt2(double u) {
  return u >= 0 ? std::cosh(std::sqrt(2 * u)) : std::cos(std::sqrt(-2 * u));
}

double f_eval(double y, double z) {
  return 1 + y * (2 + cosh_sqrt2(z)) + z * (2 + cosh_sqrt2(y));
}

std::vector<std::vector<BigRational>> f_taylor(int total_degree) {
  if (total_degree < 0) throw std::invalid_argument("f_taylor: negative degree");
  const auto d = static_cast<std::size_t>(total_degree);
  std::vector<std::vector<BigRational>> r(d + 1, std::vector<BigRational>(d + 1, 0));
  // cosh sqrt(2u) = sum_m 2^m u^m / (2m)!
  auto series = [](int m) {
    BigRational c = 1;
    for (int i = 1; i <= 2 * m; ++i) c /= i;
    for (int i = 0; i < m; ++i) c *= 2;
    return c;
  };
  r[0][0] = 1;
  if (total_degree >= 1) {
    r[1][0] += 2;
    r[0][1] += 2;
  }
  for (int m = 0; m + 1 <= total_degree; ++m) {
    const auto c = series(m);
    r[1][static_cast<std::size_t>(m)] += c;  // y * cosh sqrt(2z)
    r[static_cast<std::size_t>(m)][1] += c;  // z * cosh sqrt(2y)
  }
  return r;
}

double moment_exact(const std::vector<VectorPair>& support, int a, int b) {
  if (support.empty() || a < 0 || b < 0) throw std::invalid_argument("moment_exact: bad input");
  long double sum = 0;
  for (const auto& p : support)
    for (const auto& q : support)
      sum += std::pow(static_cast<long double>(dot(p.y, q.y)), a) *
             std::pow(static_cast<long double>(dot(p.z, q.z)), b);
  const auto n = static_cast<long double>(support.size());
  return static_cast<double>(sum / (n * n));
}

MomentEstimate moment_estimate(const std::vector<VectorPair>& support, int a, int b,
                               std::size_t n_samples, std::uint64_t seed) {
  if (support.empty() || a < 0 || b < 0 || n_samples < 2)
    throw std::invalid_argument("moment_estimate: bad input");
  Rng rng(seed);
  double mean = 0, m2 = 0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const auto& p = support[rng.below(support.size())];
    const auto& q = support[rng.below(support.size())];
    const double x = std::pow(dot(p.y, q.y), a) * std::pow(dot(p.z, q.z), b);
    const double delta = x - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (x - mean);
  }
  const double var = m2 / static_cast<double>(n_samples - 1);
  return {mean, std::sqrt(var / static_cast<double>(n_samples))};
}

}  // namespace ramsey
