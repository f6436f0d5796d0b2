#include "gkm/chebyshev.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "gkm/errors.hpp"

namespace gkm {
namespace {

void require_unit_interval(double x, const char* who) {
  if (!(std::abs(x) <= 1.0)) {
    throw DomainError(std::string(who) + ": |x| <= 1 required, got x = " + std::to_string(x));
  }
}

}  // namespace

double eval_u(int k, double x) {
  if (k < 0) throw PreconditionViolation("eval_u: k >= 0 required; use eval_u_signed");
  require_unit_interval(x, "eval_u");
  if (k == 0) return 1.0;
  const double two_x = 2.0 * x;
  double prev = 1.0;
  double curr = two_x;
  for (int j = 1; j < k; ++j) {
    const double next = two_x * curr - prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

double eval_u_signed(int k, double x) {
  if (k >= 0) return eval_u(k, x);
  require_unit_interval(x, "eval_u_signed");
  if (k == -1) return 0.0;
  return -eval_u(-k - 2, x);
}

double eval_t(int k, double x) {
  if (k < 0) throw PreconditionViolation("eval_t: k >= 0 required");
  require_unit_interval(x, "eval_t");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double curr = x;
  for (int j = 1; j < k; ++j) {
    const double next = 2.0 * x * curr - prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

double binomial(int n, int k) {
  if (n > kMaxBinomialN) {
    throw Unsupported("binomial: n = " + std::to_string(n) + " exceeds the double-precision cap " +
                      std::to_string(kMaxBinomialN));
  }
  if (n < 0 || k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(c);
}

int USeries::degree() const {
  for (int j = static_cast<int>(coeffs_.size()) - 1; j >= 0; --j) {
    if (coeffs_[j] != 0.0) return j;
  }
  return -1;
}

double USeries::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[j];
}

void USeries::add(int j, double c) {
  if (j < 0) throw PreconditionViolation("USeries::add: negative index");
  if (j >= static_cast<int>(coeffs_.size())) coeffs_.resize(j + 1, 0.0);
  coeffs_[j] += c;
}

double USeries::operator()(double x) const {
  require_unit_interval(x, "USeries");
  if (coeffs_.empty()) return 0.0;
  const double two_x = 2.0 * x;
  double prev = 1.0;
  double curr = two_x;
  double sum = coeffs_[0];
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    sum += coeffs_[j] * curr;
    const double next = two_x * curr - prev;
    prev = curr;
    curr = next;
  }
  return sum;
}

USeries power_to_u(int k) {
  if (k < 0) throw PreconditionViolation("power_to_u: k >= 0 required");
  if (k > kMaxPowerDegree) {
    throw Unsupported("power_to_u: degree " + std::to_string(k) + " exceeds cap " +
                      std::to_string(kMaxPowerDegree));
  }
  USeries out(std::vector<double>(k + 1, 0.0));
  const double scale = std::ldexp(1.0, -k) / static_cast<double>(k + 1);
  for (int j = 0; 2 * j <= k; ++j) {
    out.add(k - 2 * j, static_cast<double>(k - 2 * j + 1) * binomial(k + 1, j) * scale);
  }
  return out;
}

USeries product_linearize(int k, int m) {
  if (k < 0 || m < 0) throw PreconditionViolation("product_linearize: k, m >= 0 required");
  USeries out(std::vector<double>(k + m + 1, 0.0));
  const int base = std::abs(k - m);
  for (int j = 0; j <= std::min(k, m); ++j) out.add(base + 2 * j, 1.0);
  return out;
}

QuadratureRule gauss_cheb_u_rule(int n) {
  if (n < 1) throw PreconditionViolation("gauss_cheb_u_rule: N >= 1 required");
  QuadratureRule rule;
  rule.nodes.reserve(n);
  rule.weights.reserve(n);
  const double step = std::numbers::pi / static_cast<double>(n + 1);
  for (int i = 1; i <= n; ++i) {
    const double theta = step * i;
    const double s = std::sin(theta);
    rule.nodes.push_back(std::cos(theta));
    rule.weights.push_back(2.0 / static_cast<double>(n + 1) * s * s);
  }
  return rule;
}

}  // namespace gkm
