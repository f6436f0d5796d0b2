#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gkm/params.hpp"

namespace gkm {

struct IntegrationResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::int64_t evaluations = 0;
};

struct Integration3dResult : IntegrationResult {
  double mc_value = 0.0;
  double mc_std_error = 0.0;
  int tensor_nodes = 0;  // per axis
};

inline constexpr std::int64_t kEvaluationBudget1d = 10'000'000;
inline constexpr std::int64_t kCellBudget3d = 100'000'000;
inline constexpr std::uint64_t kMonteCarloSeed = 0x6B65'7374'656E'6D63ULL;

using Integrand1d = std::function<double(double)>;
using Integrand2d = std::function<double(double, double)>;
using Integrand3d = std::function<double(double, double, double)>;

/// Integral of (2/pi) sqrt(1-x^2) g(x) over [-1, 1].
///
/// Substitutes x = cos(theta), which turns the weight into (2/pi) sin^2(theta)
/// and removes the endpoint square-root singularity, then runs adaptive
/// composite Simpson with bisection until every panel's Richardson estimate
/// is below its share of `tol` (absolute). Throws NonConvergence when the
/// evaluation budget runs out.
IntegrationResult integrate_weighted(const Integrand1d& g, double tol,
                                     std::int64_t budget = kEvaluationBudget1d);

/// Plain integral of h over [-1, 1], same substitution and refinement.
IntegrationResult integrate_plain(const Integrand1d& h, double tol,
                                  std::int64_t budget = kEvaluationBudget1d);

/// Double integral of h over [-1, 1]^2: adaptive in each axis, the inner
/// integral recomputed per outer node.
IntegrationResult integrate_2d(const Integrand2d& h, double tol,
                               std::int64_t budget = kEvaluationBudget1d * 10);

/// Triple integral of h over [-1, 1]^3. Tensor Gauss-Legendre in the angle
/// variables, refined until successive resolutions agree to `tol`, confirmed
/// by a randomized Halton estimate with `mc_samples` points. Throws
/// EstimatorDisagreement when the two differ by more than three combined
/// standard errors.
Integration3dResult integrate_3d(const Integrand3d& h, double tol, std::int64_t mc_samples,
                                 std::uint64_t seed = kMonteCarloSeed);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

/// 1 / integral of the density with the normalizing constant set to 1.
double normalizer_numeric(const ParamSet& p);
double normalizer_numeric(const ConjParamSet& p);

}  // namespace gkm
