#include "gkm/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "gkm/chebyshev.hpp"
#include "gkm/errors.hpp"
#include "gkm/oracle.hpp"

namespace gkm {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kChapmanTol = 1e-12;

void require_unit(double x, const char* who) {
  if (!(std::abs(x) <= 1.0)) {
    throw DomainError(std::string(who) + ": argument must lie in [-1, 1], got " + std::to_string(x));
  }
}

}  // namespace

double w_eval(double x, double y, double rho) {
  // Expanded, w cancels badly near x = y = +/-1 as |rho| -> 1. With
  // x = cos(alpha), y = cos(beta) it factors as F(alpha - beta) F(alpha + beta),
  // F(phi) = 1 + rho^2 - 2 rho cos(phi), and each F is a sum of nonnegative terms.
  require_unit(x, "w_eval");
  require_unit(y, "w_eval");
  const double alpha = std::acos(x);
  const double beta = std::acos(y);
  auto factor = [rho](double phi) {
    if (rho >= 0.0) {
      const double s = std::sin(0.5 * phi);
      return (1.0 - rho) * (1.0 - rho) + 4.0 * rho * s * s;
    }
    const double c = std::cos(0.5 * phi);
    return (1.0 + rho) * (1.0 + rho) - 4.0 * rho * c * c;
  };
  return factor(alpha - beta) * factor(alpha + beta);
}

double w3_eval(double y1, double y2, double y3, double r1, double r2, double r3) {
  const double s1 = r1 * r1, s2 = r2 * r2, s3 = r3 * r3;
  const double s123 = s1 * s2 * s3;
  const double r123 = r1 * r2 * r3;
  const double head = (1.0 - s1 * s2) * (1.0 - s2 * s3) * (1.0 - s1 * s3) * (1.0 - s123);
  const double cross = r1 * (1.0 - s2) * (1.0 - s3) * y2 * y3 +
                       r2 * (1.0 - s1) * (1.0 - s3) * y1 * y3 +
                       r3 * (1.0 - s1) * (1.0 - s2) * y1 * y2;
  const double square = (1.0 - s1) * (1.0 - s2 * s3) * y1 * y1 +
                        (1.0 - s2) * (1.0 - s1 * s3) * y2 * y2 +
                        (1.0 - s3) * (1.0 - s1 * s2) * y3 * y3;
  return head - 4.0 * r123 * (1.0 + s123) * cross + 4.0 * s123 * square;
}

double wigner_density(double x) {
  require_unit(x, "wigner_density");
  return (2.0 / kPi) * std::sqrt(1.0 - x * x);
}

double fm1(double x, double y, double rho) {
  require_unit(y, "fm1");
  return (1.0 - rho * rho) * wigner_density(x) / w_eval(x, y, rho);
}

double a2k_closed(const ConjParamSet& p) {
  const auto rho = p.rho();
  const auto y = p.y();
  switch (p.k()) {
    case 0:
      return 1.0;
    case 1:
      return 1.0 - rho[0] * rho[0];
    case 2: {
      const double r12 = rho[0] * rho[1];
      return (1.0 - rho[0] * rho[0]) * (1.0 - rho[1] * rho[1]) * w_eval(y[0], y[1], r12) /
             (1.0 - r12 * r12);
    }
    case 3: {
      const double scale = (1.0 - rho[0] * rho[0]) * (1.0 - rho[1] * rho[1]) * (1.0 - rho[2] * rho[2]);
      return scale * w_eval(y[0], y[1], rho[0] * rho[1]) * w_eval(y[1], y[2], rho[1] * rho[2]) *
             w_eval(y[0], y[2], rho[0] * rho[2]) /
             w3_eval(y[0], y[1], y[2], rho[0], rho[1], rho[2]);
    }
    default:
      throw Unsupported("a2k_closed: closed forms exist for k <= 3 pairs, got k = " +
                        std::to_string(p.k()));
  }
}

double conj_normalizer(const ConjParamSet& p) {
  return p.k() <= 3 ? a2k_closed(p) : normalizer_numeric(p);
}

ConjugateDensity::ConjugateDensity(ConjParamSet p) : p_(std::move(p)), a2k_(conj_normalizer(p_)) {}

double ConjugateDensity::pdf(double x) const {
  require_unit(x, "fm_density");
  double denom = 1.0;
  for (int i = 0; i < p_.k(); ++i) denom *= w_eval(x, p_.y()[i], p_.rho()[i]);
  return a2k_ * 2.0 * std::sqrt(1.0 - x * x) / (kPi * denom);
}

double fm_density(const ConjParamSet& p, double x) { return ConjugateDensity(p).pdf(x); }

std::vector<double> conj_elementary(const ConjParamSet& p) {
  std::vector<double> s(2 * p.k() + 1, 0.0);
  s[0] = 1.0;
  int degree = 0;
  for (int i = 0; i < p.k(); ++i) {
    const double b = 2.0 * p.rho()[i] * p.y()[i];
    const double c = p.rho()[i] * p.rho()[i];
    degree += 2;
    for (int d = degree; d >= 1; --d) {
      s[d] += b * s[d - 1] + (d >= 2 ? c * s[d - 2] : 0.0);
    }
  }
  return s;
}

std::vector<double> conj_elementary_closed(const ConjParamSet& p) {
  const auto rho = p.rho();
  const auto y = p.y();
  switch (p.k()) {
    case 0:
      return {1.0};
    case 1:
      return {1.0, 2.0 * rho[0] * y[0], rho[0] * rho[0]};
    case 2: {
      const double r1 = rho[0], r2 = rho[1], y1 = y[0], y2 = y[1];
      return {1.0,
              2.0 * (y1 * r1 + y2 * r2),
              r1 * r1 + r2 * r2 + 4.0 * y1 * y2 * r1 * r2,
              2.0 * r1 * r2 * (r1 * y2 + r2 * y1),
              r1 * r1 * r2 * r2};
    }
    case 3: {
      const double r1 = rho[0], r2 = rho[1], r3 = rho[2];
      const double y1 = y[0], y2 = y[1], y3 = y[2];
      const double q1 = r1 * r1, q2 = r2 * r2, q3 = r3 * r3;
      const double r123 = r1 * r2 * r3;
      return {1.0,
              2.0 * (r1 * y1 + r2 * y2 + r3 * y3),
              q1 + q2 + q3 + 4.0 * (r1 * r2 * y1 * y2 + r1 * r3 * y1 * y3 + r2 * r3 * y2 * y3),
              2.0 * (q1 + q3) * r2 * y2 + 2.0 * (q2 + q3) * r1 * y1 + 2.0 * (q1 + q2) * r3 * y3 +
                  8.0 * r123 * y1 * y2 * y3,
              q1 * q2 + q2 * q3 + q1 * q3 + 4.0 * r123 * (r3 * y1 * y2 + r2 * y1 * y3 + r1 * y2 * y3),
              2.0 * r123 * (r1 * r2 * y3 + r1 * r3 * y2 + r2 * r3 * y1),
              q1 * q2 * q3};
    }
    default:
      throw Unsupported("conj_elementary_closed: explicit formulas exist for k <= 3 pairs");
  }
}

double poisson_mehler(double x, double y, double rho, double tol) {
  require_unit(x, "poisson_mehler");
  require_unit(y, "poisson_mehler");
  if (!(std::abs(rho) < 1.0)) throw InvalidParameters("poisson_mehler: |rho| < 1 required");
  if (!(tol > 0.0)) throw PreconditionViolation("poisson_mehler: tol > 0 required");
  const double r = std::abs(rho);
  double ux_prev = 1.0, ux = 2.0 * x;
  double uy_prev = 1.0, uy = 2.0 * y;
  double sum = 1.0;
  double rho_pow = 1.0;
  for (int j = 1;; ++j) {
    rho_pow *= rho;
    sum += rho_pow * ux * uy;
    // Remainder after term j: sum_{i>j} (i+1)^2 r^i, a series whose term
    // ratio is at most q = ((j+3)/(j+2))^2 r.
    const double q = std::pow((j + 3.0) / (j + 2.0), 2) * r;
    if (q < 1.0 && (j + 2.0) * (j + 2.0) * std::pow(r, j + 1) / (1.0 - q) < tol) break;
    if (j > 1'000'000) throw NonConvergence("poisson_mehler: series did not converge");
    const double ux_next = 2.0 * x * ux - ux_prev;
    const double uy_next = 2.0 * y * uy - uy_prev;
    ux_prev = ux;
    ux = ux_next;
    uy_prev = uy;
    uy = uy_next;
  }
  return sum;
}

double f2m(double x, double y, double rho) {
  require_unit(x, "f2m");
  require_unit(y, "f2m");
  return 4.0 * (1.0 - rho * rho) * std::sqrt((1.0 - x * x) * (1.0 - y * y)) / (kPi * kPi * w_eval(x, y, rho));
}

double g3(double y1, double y2, double y3, double r1, double r2, double r3) {
  require_unit(y1, "g3");
  require_unit(y2, "g3");
  require_unit(y3, "g3");
  const double roots = std::sqrt((1.0 - y1 * y1) * (1.0 - y2 * y2) * (1.0 - y3 * y3));
  return 8.0 / (kPi * kPi * kPi) * roots * w3_eval(y1, y2, y3, r1, r2, r3) /
         (w_eval(y1, y2, r1 * r2) * w_eval(y2, y3, r2 * r3) * w_eval(y1, y3, r1 * r3));
}

double w3_grid_minimum(double r1, double r2, double r3, int points) {
  if (points < 2) throw PreconditionViolation("w3_grid_minimum: at least 2 points per axis");
  double lowest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i) {
    const double y1 = -1.0 + 2.0 * i / (points - 1);
    for (int j = 0; j < points; ++j) {
      const double y2 = -1.0 + 2.0 * j / (points - 1);
      for (int k = 0; k < points; ++k) {
        const double y3 = -1.0 + 2.0 * k / (points - 1);
        lowest = std::min(lowest, w3_eval(y1, y2, y3, r1, r2, r3));
      }
    }
  }
  return lowest;
}

void require_g3_nonnegative(double r1, double r2, double r3, int points) {
  const double lowest = w3_grid_minimum(r1, r2, r3, points);
  if (lowest < 0.0) {
    throw InvalidParameters("g3: w3 takes the negative value " + std::to_string(lowest) +
                            " on the sampling grid; not a density for r = (" + std::to_string(r1) +
                            ", " + std::to_string(r2) + ", " + std::to_string(r3) + ")");
  }
}

double chapman_residual(double x, double y2, double r1, double r2) {
  const IntegrationResult composed = integrate_weighted(
      [&](double y1) { return fm1(x, y1, r1) * (1.0 - r2 * r2) / w_eval(y1, y2, r2); }, kChapmanTol);
  return composed.value - fm1(x, y2, r1 * r2);
}

double conditional_bridge(double x, double y1, double y2, double r1, double r2) {
  if (!(std::abs(y1) < 1.0) || !(std::abs(y2) < 1.0)) {
    throw DomainError("conditional_bridge: |y1|, |y2| < 1 required");
  }
  const double numerator = fm1(y1, x, r1) * fm1(x, y2, r2) * wigner_density(y2);
  const double denominator = fm1(y1, y2, r1 * r2) * wigner_density(y2);
  return numerator / denominator;
}

}  // namespace gkm
