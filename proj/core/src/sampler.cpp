#include "gkm/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gkm/counter_rng.hpp"
#include "gkm/errors.hpp"
#include "gkm/oracle.hpp"

namespace gkm {
namespace {

constexpr int kCellNodes = 5;

const GaussLegendre& cell_rule() {
  static const GaussLegendre rule = gauss_legendre(kCellNodes);
  return rule;
}

// Mass of the density between x = cos(hi) and x = cos(lo), lo <= hi, done in
// theta so the sqrt endpoint behaviour becomes a smooth sin^2.
double cell_mass(const KestenMcKay& d, double lo, double hi) {
  const GaussLegendre& rule = cell_rule();
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double sum = 0.0;
  for (int i = 0; i < kCellNodes; ++i) {
    const double theta = mid + half * rule.nodes[i];
    sum += rule.weights[i] * d.pdf(std::cos(theta)) * std::sin(theta);
  }
  return sum * half;
}

double grid_angle(int i, int n_points) {
  return std::numbers::pi * (1.0 - static_cast<double>(i) / (n_points - 1));
}

// Fritsch-Carlson slopes for a monotone cubic through (u_i, x_i).
std::vector<double> pchip_slopes(std::span<const double> u, std::span<const double> x) {
  const std::size_t n = u.size();
  std::vector<double> h(n - 1), delta(n - 1), d(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = u[i + 1] - u[i];
    delta[i] = (x[i + 1] - x[i]) / h[i];
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) continue;
    const double w1 = 2.0 * h[i] + h[i - 1];
    const double w2 = h[i] + 2.0 * h[i - 1];
    d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
  }
  auto end_slope = [](double h0, double h1, double del0, double del1) {
    double s = ((2.0 * h0 + h1) * del0 - h0 * del1) / (h0 + h1);
    if (s * del0 <= 0.0) return 0.0;
    if (del0 * del1 <= 0.0 && std::abs(s) > std::abs(3.0 * del0)) return 3.0 * del0;
    return s;
  };
  d[0] = end_slope(h[0], h[1], delta[0], delta[1]);
  d[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
  return d;
}

}  // namespace

CdfTable::CdfTable(KestenMcKay density, std::vector<double> xs, std::vector<double> cells)
    : density_(std::move(density)), xs_(std::move(xs)), fs_(std::move(cells)), total_(0.0) {
  const int n = size();
  std::vector<double> raw(n, 0.0);
  for (int i = 0; i + 1 < n; ++i) {
    total_ += fs_[i + 1];
    raw[i + 1] = total_;
  }
  for (int i = 0; i < n; ++i) fs_[i] = raw[i] / total_;
  fs_.front() = 0.0;
  fs_.back() = 1.0;
  for (int i = 0; i + 1 < n; ++i) {
    if (!(fs_[i + 1] > fs_[i])) {
      throw InternalInconsistency("build_cdf: CDF not strictly increasing at x = " +
                                  std::to_string(xs_[i + 1]));
    }
  }
  slopes_ = pchip_slopes(fs_, xs_);
}

double CdfTable::cdf(double x) const {
  if (x <= -1.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const int i = static_cast<int>(it - xs_.begin()) - 1;
  const double part = cell_mass(density_, std::acos(x), grid_angle(i, size()));
  return std::clamp(fs_[i] + part / total_, 0.0, 1.0);
}

double CdfTable::inverse(double u) const {
  if (u <= 0.0) return -1.0;
  if (u >= 1.0) return 1.0;
  const auto it = std::upper_bound(fs_.begin(), fs_.end(), u);
  const int i = static_cast<int>(it - fs_.begin()) - 1;
  const double h = fs_[i + 1] - fs_[i];
  const double t = (u - fs_[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double x = (2 * t3 - 3 * t2 + 1) * xs_[i] + (t3 - 2 * t2 + t) * h * slopes_[i] +
                   (-2 * t3 + 3 * t2) * xs_[i + 1] + (t3 - t2) * h * slopes_[i + 1];
  return std::clamp(x, xs_[i], xs_[i + 1]);
}

CdfTable build_cdf(const ParamSet& p, int n_points) {
  if (n_points < 64) {
    throw PreconditionViolation("build_cdf: need at least 64 grid points, got " +
                                std::to_string(n_points));
  }
  KestenMcKay density(p.unit_scale());
  std::vector<double> xs(n_points), cells(n_points, 0.0);
  for (int i = 0; i < n_points; ++i) xs[i] = std::cos(grid_angle(i, n_points));
  xs.front() = -1.0;
  xs.back() = 1.0;
  for (int i = 0; i + 1 < n_points; ++i) {
    cells[i + 1] = cell_mass(density, grid_angle(i + 1, n_points), grid_angle(i, n_points));
  }
  return CdfTable(std::move(density), std::move(xs), std::move(cells));
}

std::vector<double> sample(const CdfTable& t, std::int64_t count, std::uint64_t seed) {
  if (count < 1) throw PreconditionViolation("sample: count must be >= 1");
  const CounterRng rng(seed);
  std::vector<double> out(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) out[i] = t.inverse(rng.uniform(i));
  return out;
}

double ks_statistic(std::span<const double> samples, const CdfTable& t) {
  if (samples.empty()) throw PreconditionViolation("ks_statistic: no samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double f = t.cdf(sorted[i]);
    d = std::max({d, f - i / n, j / n - f});
    i = j;
  }
  return d;
}

double ks_critical_value(std::int64_t count, double alpha) {
  return std::sqrt(-0.5 * std::log(0.5 * alpha)) / std::sqrt(static_cast<double>(count));
}

}  // namespace gkm
