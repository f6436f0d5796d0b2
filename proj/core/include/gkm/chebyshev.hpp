#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gkm {

/// Chebyshev polynomial of the second kind U_k(x), k >= 0, |x| <= 1.
///
/// Evaluated with the forward recurrence U_{j+1} = 2x U_j - U_{j-1}, which is
/// stable on [-1, 1]. Throws DomainError for |x| > 1 and PreconditionViolation
/// for k < 0.
double eval_u(int k, double x);

/// U_k(x) for any integer k, with U_{-1} = 0 and U_{-k-2} = -U_k.
double eval_u_signed(int k, double x);

/// Chebyshev polynomial of the first kind T_k(x), k >= 0, |x| <= 1.
double eval_t(int k, double x);

/// Binomial coefficient C(n, k) by the multiplicative recurrence in double
/// precision. Zero outside 0 <= k <= n. Refuses n > kMaxBinomialN.
double binomial(int n, int k);

inline constexpr int kMaxBinomialN = 65;
inline constexpr int kMaxPowerDegree = 64;

/// Finite expansion sum_j coeffs[j] U_j(x).
class USeries {
 public:
  USeries() = default;
  explicit USeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

  /// Highest index with a nonzero coefficient, or -1 for the zero series.
  int degree() const;

  /// Coefficient of U_j; zero beyond the stored range.
  double coeff(int j) const;
  std::span<const double> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  /// Adds c to the coefficient of U_j, growing the storage as needed.
  void add(int j, double c);

  /// Evaluates the series at |x| <= 1.
  double operator()(double x) const;

 private:
  std::vector<double> coeffs_;
};

/// U-basis coefficients of the monomial x^k (k <= kMaxPowerDegree):
/// x^k = sum_j (k-2j+1) C(k+1,j) / ((k+1) 2^k) U_{k-2j}.
USeries power_to_u(int k);

/// Linearization U_k U_m = sum_{j=0}^{min(k,m)} U_{|k-m|+2j}.
USeries product_linearize(int k, int m);

/// Node/weight pairs approximating the integral against (2/pi) sqrt(1-x^2).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double apply(F&& g) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * g(nodes[i]);
    return sum;
  }
};

/// N-point Gauss rule for the weight (2/pi) sqrt(1-x^2):
/// x_i = cos(i pi/(N+1)), w_i = 2/(N+1) sin^2(i pi/(N+1)), i = 1..N.
/// Exact for polynomials of degree <= 2N-1.
QuadratureRule gauss_cheb_u_rule(int n);

}  // namespace gkm
