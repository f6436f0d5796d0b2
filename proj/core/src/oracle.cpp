#include "gkm/oracle.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "gkm/counter_rng.hpp"
#include "gkm/errors.hpp"

namespace gkm {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kInitialPanels = 16;
constexpr int kMinDepth = 2;
constexpr int kMaxDepth = 48;

// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Adaptive Simpson on [lo, hi] for a smooth integrand f.
template <class F>
IntegrationResult adaptive_simpson(const F& f, double lo, double hi, double tol,
                                   std::int64_t budget) {
  if (!(tol > 0.0)) throw PreconditionViolation("quadrature tolerance must be positive");

  struct Panel {
    double a, b, fa, fm, fb, whole;
    int depth;
  };

  std::int64_t evals = 0;
  auto eval = [&](double t) {
    if (++evals > budget) {
      throw NonConvergence("adaptive Simpson: evaluation budget " + std::to_string(budget) +
                           " exhausted before tolerance " + std::to_string(tol));
    }
    return f(t);
  };

  const double length = hi - lo;
  std::vector<Panel> stack;
  stack.reserve(2 * kMaxDepth + kInitialPanels);

  std::vector<double> edge(kInitialPanels + 1);
  for (int i = 0; i <= kInitialPanels; ++i) edge[i] = eval(lo + length * i / kInitialPanels);
  for (int i = kInitialPanels - 1; i >= 0; --i) {
    const double a = lo + length * i / kInitialPanels;
    const double b = lo + length * (i + 1) / kInitialPanels;
    const double fm = eval(0.5 * (a + b));
    stack.push_back({a, b, edge[i], fm, edge[i + 1], (b - a) / 6.0 * (edge[i] + 4.0 * fm + edge[i + 1]), 0});
  }

  CompensatedSum total;
  double err = 0.0;
  double magnitude = 0.0;
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double m = 0.5 * (p.a + p.b);
    const double flm = eval(0.5 * (p.a + m));
    const double frm = eval(0.5 * (m + p.b));
    const double left = (m - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm);
    const double right = (p.b - m) / 6.0 * (p.fm + 4.0 * frm + p.fb);
    const double diff = left + right - p.whole;
    const double local_tol = tol * (p.b - p.a) / length;
    if ((p.depth >= kMinDepth && std::abs(diff) <= 15.0 * local_tol) || p.depth >= kMaxDepth) {
      const double v = left + right + diff / 15.0;
      total.add(v);
      err += std::abs(diff) / 15.0;
      magnitude += std::abs(left) + std::abs(right);
    } else {
      // Right half pushed first so panels are accepted left to right.
      stack.push_back({m, p.b, p.fm, frm, p.fb, right, p.depth + 1});
      stack.push_back({p.a, m, p.fa, flm, p.fm, left, p.depth + 1});
    }
  }
  // Rounding floor: the panel sums themselves carry a few ulps each.
  err += 16.0 * std::numeric_limits<double>::epsilon() * magnitude;
  return {total.value(), err, evals};
}

double radical_inverse(std::uint64_t i, std::uint64_t base) {
  double inv = 1.0 / static_cast<double>(base);
  double f = inv;
  double r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

double tensor_rule(const Integrand3d& h, const GaussLegendre& gl) {
  const int n = static_cast<int>(gl.nodes.size());
  // Angle nodes theta = (pi/2)(t + 1); dx = sin(theta) dtheta.
  std::vector<double> x(n), w(n);
  for (int i = 0; i < n; ++i) {
    const double theta = 0.5 * kPi * (gl.nodes[i] + 1.0);
    x[i] = std::cos(theta);
    w[i] = 0.5 * kPi * gl.weights[i] * std::sin(theta);
  }
  CompensatedSum total;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double row = 0.0;
      for (int k = 0; k < n; ++k) row += w[k] * h(x[i], x[j], x[k]);
      total.add(w[i] * w[j] * row);
    }
  }
  return total.value();
}

}  // namespace

IntegrationResult integrate_weighted(const Integrand1d& g, double tol, std::int64_t budget) {
  auto integrand = [&g](double theta) {
    const double s = std::sin(theta);
    return (2.0 / kPi) * s * s * g(std::cos(theta));
  };
  return adaptive_simpson(integrand, 0.0, kPi, tol, budget);
}

IntegrationResult integrate_plain(const Integrand1d& h, double tol, std::int64_t budget) {
  auto integrand = [&h](double theta) { return std::sin(theta) * h(std::cos(theta)); };
  return adaptive_simpson(integrand, 0.0, kPi, tol, budget);
}

IntegrationResult integrate_2d(const Integrand2d& h, double tol, std::int64_t budget) {
  const double inner_tol = tol * 1e-2 / kPi;
  std::int64_t evals = 0;
  double inner_err = 0.0;
  auto outer = [&](double theta_y) {
    const double y = std::cos(theta_y);
    const IntegrationResult inner =
        integrate_plain([&](double x) { return h(x, y); }, inner_tol, budget - evals);
    evals += inner.evaluations;
    inner_err = std::max(inner_err, inner.abs_error_estimate);
    return std::sin(theta_y) * inner.value;
  };
  IntegrationResult r = adaptive_simpson(outer, 0.0, kPi, 0.5 * tol, budget);
  r.abs_error_estimate += kPi * inner_err;
  r.evaluations = evals;
  return r;
}

Integration3dResult integrate_3d(const Integrand3d& h, double tol, std::int64_t mc_samples,
                                 std::uint64_t seed) {
  if (!(tol > 0.0)) throw PreconditionViolation("integrate_3d: tolerance must be positive");
  if (mc_samples < 64) throw PreconditionViolation("integrate_3d: at least 64 Monte-Carlo samples");

  Integration3dResult out;
  static constexpr int kResolutions[] = {16, 24, 32, 48, 64, 96, 128, 192, 256, 384, 464};
  double previous = std::numeric_limits<double>::quiet_NaN();
  bool converged = false;
  for (int n : kResolutions) {
    const std::int64_t cells = static_cast<std::int64_t>(n) * n * n;
    if (out.evaluations + cells > kCellBudget3d) break;
    const double current = tensor_rule(h, gauss_legendre(n));
    out.evaluations += cells;
    if (!std::isnan(previous)) {
      const double diff = std::abs(current - previous);
      out.value = current;
      out.abs_error_estimate = diff;
      out.tensor_nodes = n;
      if (diff <= tol) {
        converged = true;
        break;
      }
    }
    previous = current;
  }
  if (!converged) {
    throw NonConvergence("integrate_3d: tensor rule did not reach tolerance " +
                         std::to_string(tol) + " within the cell budget");
  }

  // Randomized QMC: R Cranley-Patterson shifts of one Halton point set.
  constexpr int kShifts = 16;
  const std::int64_t per_shift = mc_samples / kShifts;
  const CounterRng rng(seed);
  std::vector<double> estimates(kShifts);
  for (int r = 0; r < kShifts; ++r) {
    const double s0 = rng.uniform(3 * r);
    const double s1 = rng.uniform(3 * r + 1);
    const double s2 = rng.uniform(3 * r + 2);
    CompensatedSum acc;
    for (std::int64_t i = 1; i <= per_shift; ++i) {
      const auto idx = static_cast<std::uint64_t>(i);
      const double u0 = std::fmod(radical_inverse(idx, 2) + s0, 1.0);
      const double u1 = std::fmod(radical_inverse(idx, 3) + s1, 1.0);
      const double u2 = std::fmod(radical_inverse(idx, 5) + s2, 1.0);
      const double t0 = kPi * u0, t1 = kPi * u1, t2 = kPi * u2;
      acc.add(h(std::cos(t0), std::cos(t1), std::cos(t2)) * std::sin(t0) * std::sin(t1) *
              std::sin(t2));
    }
    estimates[r] = kPi * kPi * kPi * acc.value() / static_cast<double>(per_shift);
  }
  out.evaluations += per_shift * kShifts;
  double mean = 0.0;
  for (double e : estimates) mean += e;
  mean /= kShifts;
  double var = 0.0;
  for (double e : estimates) var += (e - mean) * (e - mean);
  var /= (kShifts - 1);
  out.mc_value = mean;
  out.mc_std_error = std::sqrt(var / kShifts);

  const double combined = std::sqrt(out.mc_std_error * out.mc_std_error +
                                    out.abs_error_estimate * out.abs_error_estimate);
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(out.value);
  if (std::abs(out.value - out.mc_value) > 3.0 * combined + floor) {
    throw EstimatorDisagreement("integrate_3d: tensor " + std::to_string(out.value) + " vs Monte-Carlo " +
                                std::to_string(out.mc_value) + " +/- " +
                                std::to_string(out.mc_std_error));
  }
  return out;
}

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw PreconditionViolation("gauss_legendre: n >= 1 required");
  // P_n(z) and P_n'(z) by the three-term recurrence.
  auto legendre = [n](double z) {
    double p0 = 1.0, p1 = z;
    for (int j = 2; j <= n; ++j) {
      const double p2 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, n * (z * p1 - p0) / (z * z - 1.0)};
  };
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(z);
      const double dz = p / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double dp = legendre(z).second;
    gl.nodes[i] = -z;
    gl.nodes[n - 1 - i] = z;
    gl.weights[i] = gl.weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return gl;
}

namespace {

template <class G>
double reciprocal_weighted_integral(const G& g) {
  // Coarse pass fixes the scale so the tolerance below is relative.
  const IntegrationResult coarse = integrate_weighted(g, 1e-6);
  const double scale = std::max(1.0, std::abs(coarse.value));
  return 1.0 / integrate_weighted(g, 1e-14 * scale).value;
}

}  // namespace

double normalizer_numeric(const ParamSet& p) {
  const auto a = p.a();
  if (a.empty()) return 1.0;
  return reciprocal_weighted_integral([a](double x) {
    double prod = 1.0;
    for (double ai : a) prod *= 1.0 + ai * ai - 2.0 * ai * x;
    return 1.0 / prod;
  });
}

double normalizer_numeric(const ConjParamSet& p) {
  const auto rho = p.rho();
  const auto y = p.y();
  if (rho.empty()) return 1.0;
  // |1 - 2 x a + a^2|^2 with a = rho (y + i sqrt(1 - y^2)), kept independent
  // of the real closed form of the kernel.
  return reciprocal_weighted_integral([rho, y](double x) {
    double prod = 1.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
      const std::complex<double> a = rho[i] * std::complex<double>(y[i], std::sqrt(1.0 - y[i] * y[i]));
      prod *= std::norm(1.0 - 2.0 * x * a + a * a);
    }
    return 1.0 / prod;
  });
}

}  // namespace gkm
