#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gkm/kesten_mckay.hpp"
#include "gkm/params.hpp"

namespace gkm {

inline constexpr int kDefaultCdfPoints = 2048;

/// Tabulated CDF of the unit-scale density on the Chebyshev extrema grid
/// x_i = -cos(i pi / (N-1)). Scaled parameter sets are tabulated for Y = X/c.
class CdfTable {
 public:
  /// cells[i] is the mass between xs[i-1] and xs[i] (cells[0] unused).
  CdfTable(KestenMcKay density, std::vector<double> xs, std::vector<double> cells);

  std::span<const double> xs() const { return xs_; }
  std::span<const double> fs() const { return fs_; }
  const ParamSet& params() const { return density_.params(); }
  int size() const { return static_cast<int>(xs_.size()); }

  /// F(x) for any x; the partial cell is integrated, not interpolated.
  double cdf(double x) const;

  /// Monotone cubic (Fritsch-Carlson) interpolation of x as a function of F.
  double inverse(double u) const;

 private:
  KestenMcKay density_;
  std::vector<double> xs_;
  std::vector<double> fs_;
  std::vector<double> slopes_;  // dx/dF at each knot
  double total_;                // unnormalized mass before rescaling F(1) to 1
};

/// Needs n_points >= 64.
CdfTable build_cdf(const ParamSet& p, int n_points = kDefaultCdfPoints);

/// Draw i is inverse(CounterRng(seed).uniform(i)); values lie in [-1, 1].
std::vector<double> sample(const CdfTable& t, std::int64_t count, std::uint64_t seed);

/// sup_x |F_empirical(x) - F(x)|.
double ks_statistic(std::span<const double> samples, const CdfTable& t);

/// Asymptotic Kolmogorov critical value c_alpha / sqrt(count); c = 1.628 at 0.01.
double ks_critical_value(std::int64_t count, double alpha = 0.01);

}  // namespace gkm
