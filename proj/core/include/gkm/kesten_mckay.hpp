#pragma once

#include <vector>

#include "gkm/params.hpp"
#include "gkm/symfun.hpp"

namespace gkm {

/// Partial-fraction weights w_i = a_i^{n-1} / prod_{j != i} (a_i - a_j)(1 - a_i a_j).
///
/// Everything with a closed form in this header is a linear functional of
/// these weights: 1/A_n = sum_i w_i and B_{n,k} = A_n sum_i w_i a_i^k.
/// Throws DegenerateParameters when min_gap <= kDistinctnessTolerance.
std::vector<double> partial_fraction_weights(const ParamSet& p);

/// A_n from the partial-fraction sum. Requires pairwise distinct parameters.
double a_closed(const ParamSet& p);

/// A_n from the explicit n <= 6 product formulas (no a_i - a_j
/// denominators, so coincident parameters are fine). Throws Unsupported for
/// n > 6.
double a_special(const ParamSet& p);

/// Preferred normalizer: a_special for n <= 6, else a_closed, else the
/// numeric oracle.
double normalizer(const ParamSet& p);

/// Density with its normalizer resolved once.
class KestenMcKay {
 public:
  explicit KestenMcKay(ParamSet p);
  KestenMcKay(ParamSet p, double normalizer);

  const ParamSet& params() const { return p_; }
  double normalizer() const { return a_n_; }

  /// 2 A_n c^{n-2} sqrt(c^2 - x^2) / (pi prod_j (c(1 + a_j^2) - 2 a_j x)).
  /// Throws DomainError for |x| > c.
  double pdf(double x) const;

 private:
  ParamSet p_;
  double a_n_;
};

double density(const ParamSet& p, double x);

/// v sqrt(4(v-1) - x^2) / (2 pi (v^2 - x^2)), |x| <= 2 sqrt(v-1), v > 1.
/// For v > 2 this is density(ParamSet({a, -a}, 2/a), x) with a = 1/sqrt(v-1).
double density_classical_km(double v, double x);

/// B_{n,k} = integral of U_k f_Kn, from the closed form. B_{0,k} = [k == 0].
double b_coeff(const ParamSet& p, int k);

/// B_{n,k} for any integer k, extended by U_{-1} = 0, U_{-k-2} = -U_k.
double b_coeff_signed(const ParamSet& p, int k);

/// Truncated coefficient sequence B_{n,0..K}.
struct BSeq {
  std::vector<double> values;
  int order() const { return static_cast<int>(values.size()) - 1; }
};

BSeq b_sequence(const ParamSet& p, int K);

/// (2/pi) sqrt(1 - x^2) sum_k B_{n,k} U_k(x), truncated once a rigorous
/// geometric bound on the remainder falls below tol. Unit scale only.
double density_series(const ParamSet& p, double x, double tol);

/// k-th raw moment, sum over B_{n,k-2j}; multiplied by c^k for scaled sets.
double moment(const ParamSet& p, int k);

/// Integral of U_k U_m f_Kn = sum_{j <= min(k,m)} B_{n,|m-k|+2j}.
double inner_uu(const ParamSet& p, int k, int m);

/// Same, reusing a precomputed prefix (needs order >= k + m).
double inner_uu(const BSeq& b, int k, int m);

/// Coefficients (ascending powers of t) of the numerator Q_n(t) of the
/// B-generating function; degree max(n-2, 0). Throws InternalInconsistency
/// if the formally degree-(n-1) coefficient does not cancel.
std::vector<double> q_poly(const ParamSet& p);

/// B_{n,0..K} by power-series division of Q_n(t) by prod_i (1 - t a_i).
BSeq b_from_genfun(const ParamSet& p, int K);

/// sum_i a_i^{n-2} / prod_{j != i} (a_i - a_j)(1 - a_i a_j); identically 0.
double residual_an2(std::span<const double> a);

/// sum_i a_i^{n-2} S_k(g(a without a_i)) / prod_{j != i} (a_j - a_i)(1 - a_i a_j),
/// g(x) = (1 + x^2)/(2x); identically 0 for 1 <= k <= n-1.
double residual_id(int k, std::span<const double> a);

/// sum_{j=0}^{n} (-1)^j S_j B_{n,m-j} with signed-index B; identically 0.
double residual_id2(int m, const ParamSet& p);

}  // namespace gkm
