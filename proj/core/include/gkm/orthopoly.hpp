#pragma once

#include <vector>

#include "gkm/chebyshev.hpp"
#include "gkm/params.hpp"
#include "gkm/symfun.hpp"

namespace gkm {

/// One contribution (-1)^j S_j U_{m-j} after resolving a negative index.
struct OrthoTerm {
  int j;
  int u_index;
  double coefficient;
};

/// Degree-m member of the family orthogonal with respect to f_Kn, kept in
/// the U basis and not normalized.
class OrthoPoly {
 public:
  enum class Route {
    kSymmetricSum,  // sum_{j <= min(n, 2m+2)} (-1)^j S_j U_{m-j}, valid for n <= 2m+2
    kGramSolve,     // U_m + lower terms solved against the exact Gram matrix
  };

  OrthoPoly(int degree, USeries series, std::vector<OrthoTerm> terms, Route route)
      : degree_(degree), series_(std::move(series)), terms_(std::move(terms)), route_(route) {}

  int degree() const { return degree_; }
  const USeries& series() const { return series_; }
  const std::vector<OrthoTerm>& terms() const { return terms_; }
  Route route() const { return route_; }

  /// Coefficient of U_m; 1 unless the j = 2m+2 term folds back onto U_m.
  double leading_coefficient() const { return series_.coeff(degree_); }

  double operator()(double x) const { return series_(x); }

 private:
  int degree_;
  USeries series_;
  std::vector<OrthoTerm> terms_;
  Route route_;
};

/// The signed symmetric sum sum_{j=0}^{min(n, upper)} (-1)^j S_j U_{m-j},
/// negative indices folded with U_{-1} = 0 and U_{-k-2} = -U_k.
USeries symmetric_sum_series(int m, const SymTable& s, int upper);

/// P_m for f_Kn. For n <= 2m+2 this is the symmetric sum truncated at
/// j = min(n, 2m+2). For n >= 2m+3 that sum is not orthogonal, and P_m is
/// instead U_m + sum_{i<m} c_i U_i with c solved from the Gram matrix of
/// the U_i under f_Kn (needs pairwise distinct parameters).
OrthoPoly p_coeffs(int m, const ParamSet& p);

double p_eval(int m, const ParamSet& p, double x);

/// 2x P_m - P_{m+1} - P_{m-1}; vanishes for m >= n >= 1.
double p_recur_check(int m, const ParamSet& p, double x);

/// Integral of P_m P_k f_Kn, computed bilinearly from the B coefficients.
double gram(int m, int k, const ParamSet& p);

}  // namespace gkm
