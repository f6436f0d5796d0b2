#include "gkm/kesten_mckay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gkm/chebyshev.hpp"
#include "gkm/errors.hpp"
#include "gkm/oracle.hpp"

namespace gkm {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTopCoefficientLimit = 1e-8;

double span_min_gap(std::span<const double> a) {
  std::vector<double> sorted(a.begin(), a.end());
  std::sort(sorted.begin(), sorted.end());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < sorted.size(); ++i) gap = std::min(gap, sorted[i] - sorted[i - 1]);
  return gap;
}

void require_distinct(std::span<const double> a, const char* who) {
  const double gap = span_min_gap(a);
  if (!(gap > kDistinctnessTolerance)) {
    throw DegenerateParameters(std::string(who) + ": parameters must be pairwise distinct (min gap " +
                               std::to_string(gap) + " <= " + std::to_string(kDistinctnessTolerance) +
                               "); use the numeric normalizer");
  }
}

// prod_{j != i} (a_i - a_j)(1 - a_i a_j)
double pair_denominator(std::span<const double> a, std::size_t i) {
  double d = 1.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j != i) d *= (a[i] - a[j]) * (1.0 - a[i] * a[j]);
  }
  return d;
}

// Closed-form B_{n,k}, k >= 0, from precomputed weights.
struct ClosedForm {
  std::vector<double> weights;
  std::span<const double> a;
  double a_n;

  explicit ClosedForm(const ParamSet& p)
      : weights(partial_fraction_weights(p)), a(p.a()), a_n(p.n() == 0 ? 1.0 : a_closed(p)) {}

  double b(int k) const {
    if (a.empty()) return k == 0 ? 1.0 : 0.0;
    if (k == 0) return 1.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += weights[i] * std::pow(a[i], k);
    return a_n * sum;
  }

  double b_signed(int k) const {
    if (k >= 0) return b(k);
    if (k == -1) return 0.0;
    return -b(-k - 2);
  }

  BSeq sequence(int K) const {
    BSeq out;
    out.values.assign(K + 1, 0.0);
    out.values[0] = 1.0;
    if (a.empty()) return out;
    std::vector<double> terms(weights);
    for (int k = 1; k <= K; ++k) {
      double sum = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        terms[i] *= a[i];
        sum += terms[i];
      }
      out.values[k] = a_n * sum;
    }
    return out;
  }
};

}  // namespace

std::vector<double> partial_fraction_weights(const ParamSet& p) {
  const auto a = p.a();
  require_distinct(a, "partial_fraction_weights");
  std::vector<double> w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    w[i] = std::pow(a[i], static_cast<int>(a.size()) - 1) / pair_denominator(a, i);
  }
  return w;
}

double a_closed(const ParamSet& p) {
  if (p.n() == 0) return 1.0;
  const std::vector<double> w = partial_fraction_weights(p);
  double sum = 0.0;
  for (double wi : w) sum += wi;
  const double a_n = 1.0 / sum;
  if (!(a_n > 0.0) || !std::isfinite(a_n)) {
    throw InternalInconsistency("a_closed: non-positive normalizer " + std::to_string(a_n));
  }
  return a_n;
}

double a_special(const ParamSet& p) {
  const int n = p.n();
  if (n > 6) throw Unsupported("a_special: explicit formulas exist only for n <= 6, got n = " + std::to_string(n));
  const auto a = p.a();
  double pairs = 1.0;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) pairs *= 1.0 - a[j] * a[k];
  }
  if (n <= 3) return pairs;
  const SymTable s = elementary_all(a);
  const double s1 = s[1], s2 = s[2], s4 = s[4], s5 = s[5], s6 = s[6];
  switch (n) {
    case 4:
      return pairs / (1.0 - s4);
    case 5:
      return pairs / (1.0 - s4 + s1 * s5 - s5 * s5);
    default:
      return pairs / (1.0 - s4 + s1 * s5 - s5 * s5 - s6 - s1 * s1 * s6 + s2 * s6 + s4 * s6 +
                      s1 * s5 * s6 - s6 * s6 - s2 * s6 * s6 + s6 * s6 * s6);
  }
}

double normalizer(const ParamSet& p) {
  if (p.n() <= 6) return a_special(p);
  if (p.distinct()) return a_closed(p);
  return normalizer_numeric(p);
}

KestenMcKay::KestenMcKay(ParamSet p) : p_(std::move(p)), a_n_(gkm::normalizer(p_)) {}

KestenMcKay::KestenMcKay(ParamSet p, double normalizer) : p_(std::move(p)), a_n_(normalizer) {}

double KestenMcKay::pdf(double x) const {
  const double c = p_.c();
  if (!(std::abs(x) <= c)) {
    throw DomainError("density: |x| <= c required, got x = " + std::to_string(x) +
                      ", c = " + std::to_string(c));
  }
  double denom = 1.0;
  for (double aj : p_.a()) denom *= c * (1.0 + aj * aj) - 2.0 * aj * x;
  return 2.0 * a_n_ * std::pow(c, p_.n() - 2) * std::sqrt(c * c - x * x) / (kPi * denom);
}

double density(const ParamSet& p, double x) { return KestenMcKay(p).pdf(x); }

double density_classical_km(double v, double x) {
  if (!(v > 1.0)) throw InvalidParameters("density_classical_km: v > 1 required");
  const double half_width = 2.0 * std::sqrt(v - 1.0);
  if (!(std::abs(x) <= half_width)) {
    throw DomainError("density_classical_km: |x| <= 2 sqrt(v-1) required, got x = " + std::to_string(x));
  }
  const double r = std::max(0.0, 4.0 * (v - 1.0) - x * x);
  const double denom = v * v - x * x;
  // Only v = 2 reaches denom = 0, at x = +-2, where the density behaves like
  // 1/(pi sqrt(4 - x^2)).
  if (denom <= 0.0) return std::numeric_limits<double>::infinity();
  return v * std::sqrt(r) / (2.0 * kPi * denom);
}

double b_coeff(const ParamSet& p, int k) {
  if (k < 0) throw PreconditionViolation("b_coeff: k >= 0 required; use b_coeff_signed");
  return ClosedForm(p).b(k);
}

double b_coeff_signed(const ParamSet& p, int k) { return ClosedForm(p).b_signed(k); }

BSeq b_sequence(const ParamSet& p, int K) {
  if (K < 0) throw PreconditionViolation("b_sequence: K >= 0 required");
  return ClosedForm(p).sequence(K);
}

double density_series(const ParamSet& p, double x, double tol) {
  if (!(tol > 0.0)) throw PreconditionViolation("density_series: tol > 0 required");
  const double c = p.c();
  if (!(std::abs(x) <= c)) throw DomainError("density_series: |x| <= c required");
  const double t = x / c;
  const double weight = (2.0 / kPi) * std::sqrt(std::max(0.0, 1.0 - t * t));
  if (p.n() == 0) return weight / c;

  const ClosedForm cf(p);
  // |B_k| <= C r^k with C = A sum |w_i|, and |U_k| <= k + 1 on [-1, 1].
  double bound_const = 0.0;
  for (double w : cf.weights) bound_const += std::abs(w);
  bound_const *= cf.a_n * (2.0 / kPi);
  const double r = p.max_abs();
  int order = 0;
  if (r > 0.0) {
    double r_pow = r;  // r^{K+1}
    while (bound_const * r_pow * ((order + 2) / (1.0 - r) + r / ((1.0 - r) * (1.0 - r))) >= tol) {
      ++order;
      r_pow *= r;
      if (order > 1'000'000) throw NonConvergence("density_series: truncation order exceeds 1e6");
    }
  }
  const BSeq b = cf.sequence(order);
  double prev = 1.0, curr = 2.0 * t;
  double sum = b.values[0];
  for (int k = 1; k <= order; ++k) {
    sum += b.values[k] * curr;
    const double next = 2.0 * t * curr - prev;
    prev = curr;
    curr = next;
  }
  return weight * sum / c;
}

double moment(const ParamSet& p, int k) {
  if (k < 0) throw PreconditionViolation("moment: k >= 0 required");
  const USeries mono = power_to_u(k);
  const BSeq b = b_sequence(p, k);
  double sum = 0.0;
  for (int j = k; j >= 0; j -= 2) sum += mono.coeff(j) * b.values[j];
  return sum * std::pow(p.c(), k);
}

double inner_uu(const BSeq& b, int k, int m) {
  if (k < 0 || m < 0) throw PreconditionViolation("inner_uu: k, m >= 0 required");
  if (b.order() < k + m) throw PreconditionViolation("inner_uu: B prefix too short");
  const int base = std::abs(m - k);
  double sum = 0.0;
  for (int j = 0; j <= std::min(k, m); ++j) sum += b.values[base + 2 * j];
  return sum;
}

double inner_uu(const ParamSet& p, int k, int m) {
  if (k < 0 || m < 0) throw PreconditionViolation("inner_uu: k, m >= 0 required");
  return inner_uu(b_sequence(p, k + m), k, m);
}

std::vector<double> q_poly(const ParamSet& p) {
  const int n = p.n();
  if (n <= 1) return {1.0};
  const auto a = p.a();
  const std::vector<double> w = partial_fraction_weights(p);
  const double a_n = a_closed(p);

  std::vector<double> q(n, 0.0);
  std::vector<double> others;
  others.reserve(n - 1);
  for (int i = 0; i < n; ++i) {
    others.clear();
    for (int j = 0; j < n; ++j) {
      if (j != i) others.push_back(-a[j]);
    }
    // prod_{j != i} (1 - a_j t)
    const std::vector<double> poly = elementary_symmetric<double>(others);
    for (int d = 0; d < n; ++d) q[d] += a_n * w[i] * poly[d];
  }
  const double top = q[n - 1];
  if (!(std::abs(top) <= kTopCoefficientLimit)) {
    throw InternalInconsistency("q_poly: degree-" + std::to_string(n - 1) +
                                " coefficient failed to cancel (" + std::to_string(top) + ")");
  }
  q.pop_back();
  return q;
}

BSeq b_from_genfun(const ParamSet& p, int K) {
  if (K < 0) throw PreconditionViolation("b_from_genfun: K >= 0 required");
  const std::vector<double> q = q_poly(p);
  const SymTable s = elementary_all(p.a());
  const int n = p.n();
  BSeq out;
  out.values.assign(K + 1, 0.0);
  for (int k = 0; k <= K; ++k) {
    double v = k < static_cast<int>(q.size()) ? q[k] : 0.0;
    for (int j = 1; j <= std::min(k, n); ++j) {
      v -= ((j % 2 == 0) ? 1.0 : -1.0) * s[j] * out.values[k - j];
    }
    out.values[k] = v;
  }
  return out;
}

double residual_an2(std::span<const double> a) {
  const int n = static_cast<int>(a.size());
  if (n < 2) throw PreconditionViolation("residual_an2: n >= 2 required");
  require_distinct(a, "residual_an2");
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += std::pow(a[i], n - 2) / pair_denominator(a, i);
  return sum;
}

double residual_id(int k, std::span<const double> a) {
  const int n = static_cast<int>(a.size());
  if (k < 1 || k > n - 1) {
    throw PreconditionViolation("residual_id: 1 <= k <= n-1 required (k = " + std::to_string(k) +
                                ", n = " + std::to_string(n) + ")");
  }
  require_distinct(a, "residual_id");
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0.0) throw ZeroParameter("residual_id: a_" + std::to_string(i + 1) + " = 0");
  }
  std::vector<double> g;
  g.reserve(n - 1);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    g.clear();
    double denom = 1.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      g.push_back((1.0 + a[j] * a[j]) / (2.0 * a[j]));
      denom *= (a[j] - a[i]) * (1.0 - a[i] * a[j]);
    }
    const std::vector<double> s = elementary_symmetric<double>(g);
    sum += std::pow(a[i], n - 2) * s[k] / denom;
  }
  return sum;
}

double residual_id2(int m, const ParamSet& p) {
  const int n = p.n();
  if (n < 2) throw PreconditionViolation("residual_id2: n >= 2 required");
  if (m < 1) throw PreconditionViolation("residual_id2: m >= 1 required");
  const ClosedForm cf(p);
  const SymTable s = elementary_all(p.a());
  double sum = 0.0;
  for (int j = 0; j <= n; ++j) sum += ((j % 2 == 0) ? 1.0 : -1.0) * s[j] * cf.b_signed(m - j);
  return sum;
}

}  // namespace gkm
