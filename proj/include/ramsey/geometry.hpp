#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ramsey/coloring.hpp"

namespace ramsey {

using Vector = std::vector<double>;
using VectorFamily = std::vector<Vector>;

/// sigma(v) = (1(v) - p 1) / sqrt(alpha p |Y|) for each v in X (ascending),
/// where 1(v) indicates N_c(v) cap Y over the members of Y in ascending order.
VectorFamily sigma_embedding(const EdgeColoring& g, Color c, const VertexSet& X,
                             const VertexSet& Y, double p, double alpha);

double dot(const Vector& a, const Vector& b);

/// (<1(v), 1(w)>, |N_R(v) cap N_R(w) cap Y|), computed independently.
std::pair<std::int64_t, std::int64_t> inner_product_identity_check(
    const EdgeColoring& g, const VertexSet& X, const VertexSet& Y, int v, int w);

enum class Orientation { YZ, ZY };

struct GeometricWitness {
  double kappa = 0.0;
  Orientation orientation = Orientation::YZ;
  std::int64_t pairs = 0;   // ordered pairs (v, w), v = w allowed
  double probability = 0.0;
  double grid_step = 0.0;   // step of the grid that produced kappa
};

/// Least grid kappa >= 0 such that, over uniform ordered pairs (v, w),
/// Pr(<sY(v),sY(w)> >= kappa^2 - 1 and <sZ(v),sZ(w)> >= -1) >= 2^{-6 kappa}/8
/// (orientation YZ, or with the roles of Y and Z exchanged). The step is
/// halved up to `max_halvings` times when the grid misses.
std::optional<GeometricWitness> geometric_witness(const VectorFamily& sigma_y,
                                                  const VectorFamily& sigma_z,
                                                  double step = 0.25, double kappa_max = 64.0,
                                                  int max_halvings = 12);

struct OneColorWitness {
  double kappa = 0.0;
  std::int64_t pairs = 0;
  double probability = 0.0;
};

/// Least grid kappa >= 0 with Pr(<s(v),s(w)> >= kappa^2 - 1) >= 1/(kappa^2+2)^2.
std::optional<OneColorWitness> one_color_witness(const VectorFamily& sigma,
                                                 double step = 0.25, double kappa_max = 64.0,
                                                 int max_halvings = 12);

// cosh(sqrt(2u)) extended to u < 0 as cos(sqrt(-2u)).
double cosh_sqrt2(double u);

// f(y, z) = 1 + y (2 + cosh sqrt(2z)) + z (2 + cosh sqrt(2y)).
double f_eval(double y, double z);

using BigRational = boost::multiprecision::cpp_rational;

/// Taylor coefficients r[a][b] of f for a + b <= total_degree, exact.
std::vector<std::vector<BigRational>> f_taylor(int total_degree);

struct VectorPair {
  Vector y;
  Vector z;
};

struct MomentEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// E[<y,y'>^a <z,z'>^b] for two independent draws from the uniform
/// distribution on `support`: summed over all ordered support pairs.
double moment_exact(const std::vector<VectorPair>& support, int a, int b);

/// Monte Carlo version of moment_exact from `n_samples` independent pairs.
MomentEstimate moment_estimate(const std::vector<VectorPair>& support, int a, int b,
                               std::size_t n_samples, std::uint64_t seed);

}  // namespace ramsey
