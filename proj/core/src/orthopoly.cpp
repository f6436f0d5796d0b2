#include "gkm/orthopoly.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "gkm/errors.hpp"
#include "gkm/kesten_mckay.hpp"

namespace gkm {
namespace {

std::vector<OrthoTerm> symmetric_terms(int m, const SymTable& s, int upper) {
  std::vector<OrthoTerm> terms;
  const int top = std::min(s.n(), upper);
  for (int j = 0; j <= top; ++j) {
    int index = m - j;
    double coefficient = ((j % 2 == 0) ? 1.0 : -1.0) * s[j];
    if (index == -1) continue;
    if (index < -1) {
      index = -index - 2;
      coefficient = -coefficient;
    }
    terms.push_back({j, index, coefficient});
  }
  return terms;
}

USeries collect(const std::vector<OrthoTerm>& terms) {
  USeries series;
  for (const auto& t : terms) series.add(t.u_index, t.coefficient);
  return series;
}

OrthoPoly gram_solve(int m, const ParamSet& p) {
  const BSeq b = b_sequence(p, 2 * m);
  Eigen::MatrixXd g(m, m);
  Eigen::VectorXd rhs(m);
  for (int l = 0; l < m; ++l) {
    for (int i = 0; i < m; ++i) g(l, i) = inner_uu(b, l, i);
    rhs(l) = -inner_uu(b, l, m);
  }
  const Eigen::VectorXd c = g.ldlt().solve(rhs);
  std::vector<OrthoTerm> terms;
  terms.push_back({0, m, 1.0});
  for (int i = m - 1; i >= 0; --i) terms.push_back({m - i, i, c(i)});
  USeries series = collect(terms);
  return OrthoPoly(m, std::move(series), std::move(terms), OrthoPoly::Route::kGramSolve);
}

}  // namespace

USeries symmetric_sum_series(int m, const SymTable& s, int upper) {
  return collect(symmetric_terms(m, s, upper));
}

OrthoPoly p_coeffs(int m, const ParamSet& p) {
  if (m < 0) throw PreconditionViolation("p_coeffs: m >= 0 required");
  if (m == 0) return OrthoPoly(0, USeries({1.0}), {{0, 0, 1.0}}, OrthoPoly::Route::kSymmetricSum);
  const int n = p.n();
  if (n >= 2 * m + 3) return gram_solve(m, p);
  const SymTable s = elementary_all(p.a());
  std::vector<OrthoTerm> terms = symmetric_terms(m, s, 2 * m + 2);
  USeries series = collect(terms);
  return OrthoPoly(m, std::move(series), std::move(terms), OrthoPoly::Route::kSymmetricSum);
}

double p_eval(int m, const ParamSet& p, double x) { return p_coeffs(m, p)(x); }

double p_recur_check(int m, const ParamSet& p, double x) {
  const int n = p.n();
  if (n < 1 || m < n) {
    throw PreconditionViolation("p_recur_check: m >= n >= 1 required (m = " + std::to_string(m) +
                                ", n = " + std::to_string(n) + ")");
  }
  return 2.0 * x * p_eval(m, p, x) - p_eval(m + 1, p, x) - p_eval(m - 1, p, x);
}

double gram(int m, int k, const ParamSet& p) {
  if (m < 0 || k < 0) throw PreconditionViolation("gram: m, k >= 0 required");
  const USeries pm = p_coeffs(m, p).series();
  const USeries pk = p_coeffs(k, p).series();
  const BSeq b = b_sequence(p, std::max(0, pm.degree()) + std::max(0, pk.degree()));
  double sum = 0.0;
  for (int i = 0; i <= pm.degree(); ++i) {
    if (pm.coeff(i) == 0.0) continue;
    for (int j = 0; j <= pk.degree(); ++j) {
      if (pk.coeff(j) == 0.0) continue;
      sum += pm.coeff(i) * pk.coeff(j) * inner_uu(b, i, j);
    }
  }
  return sum;
}

}  // namespace gkm
