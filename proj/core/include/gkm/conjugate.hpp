#pragma once

#include <vector>

#include "gkm/params.hpp"

namespace gkm {

/// w(x, y | rho) = (1 - rho^2)^2 - 4 x y rho (1 + rho^2) + 4 rho^2 (x^2 + y^2),
/// the squared modulus of one conjugate factor pair. Positive on the square.
/// Throws DomainError unless |x|, |y| <= 1. Evaluated in a cancellation-free
/// factored form.
double w_eval(double x, double y, double rho);

/// Trivariate polynomial appearing in A_6 and in the 3D density g3.
double w3_eval(double y1, double y2, double y3, double r1, double r2, double r3);

/// Wigner (semicircle) density (2/pi) sqrt(1 - x^2).
double wigner_density(double x);

/// f_M1(x | y, rho) = (1 - rho^2) (2/pi) sqrt(1 - x^2) / w(x, y | rho).
double fm1(double x, double y, double rho);

/// Closed normalizer A_{2k} for k = 1, 2, 3 conjugate pairs (k = 0 gives 1).
/// Throws Unsupported for k > 3.
double a2k_closed(const ConjParamSet& p);

/// a2k_closed where available, otherwise the numeric oracle.
double conj_normalizer(const ConjParamSet& p);

/// f_Mk(x | y, rho) = A_{2k} 2 sqrt(1 - x^2) / (pi prod_i w(x, y_i | rho_i)).
class ConjugateDensity {
 public:
  explicit ConjugateDensity(ConjParamSet p);

  const ConjParamSet& params() const { return p_; }
  double normalizer() const { return a2k_; }
  double pdf(double x) const;

 private:
  ConjParamSet p_;
  double a2k_;
};

double fm_density(const ConjParamSet& p, double x);

/// S_0..S_{2k} of the complex parameter vector, from the real quadratic
/// factors 1 + 2 rho_i y_i t + rho_i^2 t^2.
std::vector<double> conj_elementary(const ConjParamSet& p);

/// The same values from the explicit k = 2 and k = 3 polynomial formulas.
std::vector<double> conj_elementary_closed(const ConjParamSet& p);

/// sum_j rho^j U_j(x) U_j(y), summed until a bound on the remainder drops
/// below tol. Equals (1 - rho^2)/w(x, y | rho).
double poisson_mehler(double x, double y, double rho, double tol);

/// Bivariate density f_M1(x | y, rho) f_M0(y)
///   = 4 (1 - rho^2) sqrt((1 - x^2)(1 - y^2)) / (pi^2 w(x, y | rho)).
/// Both marginals are Wigner.
double f2m(double x, double y, double rho);

/// Trivariate density with bivariate marginals f2m(y_i, y_j | r_i r_j).
double g3(double y1, double y2, double y3, double r1, double r2, double r3);

/// Smallest w3 over a points^3 grid of the cube; negative means g3 would not
/// be a density for these parameters.
double w3_grid_minimum(double r1, double r2, double r3, int points);

/// Throws InvalidParameters if w3_grid_minimum is negative.
void require_g3_nonnegative(double r1, double r2, double r3, int points = 21);

/// int f_M1(x | y1, r1) f_M1(y1 | y2, r2) dy1 - f_M1(x | y2, r1 r2), with the
/// integral done by the weighted oracle quadrature.
double chapman_residual(double x, double y2, double r1, double r2);

/// f_M1(y1 | x, r1) f_M1(x | y2, r2) f_M0(y2) / (f_M1(y1 | y2, r1 r2) f_M0(y2)),
/// the conditional density of the middle state of a three-step chain.
/// Needs |y1|, |y2| < 1.
double conditional_bridge(double x, double y1, double y2, double r1, double r2);

}  // namespace gkm
