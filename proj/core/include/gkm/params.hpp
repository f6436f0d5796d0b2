#pragma once

#include <span>
#include <vector>

namespace gkm {

/// Closed partial-fraction forms are refused when two parameters are closer
/// than this.
inline constexpr double kDistinctnessTolerance = 1e-6;

/// Scale c and parameters a_1..a_n of the generalized Kesten-McKay density.
/// Immutable; the constructor enforces c > 0 and |a_i| < 1.
class ParamSet {
 public:
  explicit ParamSet(std::vector<double> a, double c = 1.0);

  double c() const { return c_; }
  std::span<const double> a() const { return a_; }
  int n() const { return static_cast<int>(a_.size()); }

  /// min_{i<j} |a_i - a_j|, +inf for n < 2.
  double min_gap() const { return min_gap_; }
  bool distinct() const { return min_gap_ > kDistinctnessTolerance; }
  double max_abs() const { return max_abs_; }

  /// Same parameters at unit scale.
  ParamSet unit_scale() const { return ParamSet(a_, 1.0); }

 private:
  std::vector<double> a_;
  double c_;
  double min_gap_;
  double max_abs_;
};

/// Conjugate-pair parameterization: pair i stands for
/// a = rho_i (y_i +/- i sqrt(1 - y_i^2)).
class ConjParamSet {
 public:
  ConjParamSet(std::vector<double> rho, std::vector<double> y);

  std::span<const double> rho() const { return rho_; }
  std::span<const double> y() const { return y_; }
  int k() const { return static_cast<int>(rho_.size()); }

 private:
  std::vector<double> rho_;
  std::vector<double> y_;
};

}  // namespace gkm
