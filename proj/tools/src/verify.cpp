#include "gkm_cli/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gkm/chebyshev.hpp"
#include "gkm/conjugate.hpp"
#include "gkm/errors.hpp"
#include "gkm/kesten_mckay.hpp"
#include "gkm/oracle.hpp"
#include "gkm/orthopoly.hpp"
#include "gkm/sampler.hpp"
#include "gkm/symfun.hpp"

namespace gkm::cli {
namespace {

constexpr double kQuadTol = 1e-12;

// Parameter draws for one check. The engine is seeded from the FNV-1a hash
// of the check name, so every check sees the same draws on every run.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // n parameters in (-amax, amax) with |a_i| >= amin and pairwise gaps >= gap.
  ParamSet params(int n, double amax = 0.9, double gap = 0.05, double amin = 0.0) {
    for (;;) {
      std::vector<double> a(n);
      bool ok = true;
      for (double& v : a) {
        v = in(-amax, amax);
        ok = ok && std::abs(v) >= amin;
      }
      if (!ok) continue;
      ParamSet p(std::move(a));
      if (p.min_gap() >= gap) return p;
    }
  }

 private:
  std::mt19937_64 eng_;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct Outcome {
  double residual = 0.0;
  std::string detail;
};

// Running maximum that treats NaN as an infinite residual.
struct MaxAbs {
  double value = 0.0;
  void add(double r) { value = std::isnan(r) ? INFINITY : std::max(value, std::abs(r)); }
};

struct Check {
  const char* suite;
  const char* name;
  double tol;
  std::function<Outcome(Draws&)> run;
};

// Unnormalized density weight ratio 1/prod_j (1 + a_j^2 - 2 a_j x); the
// density is A_n (2/pi) sqrt(1-x^2) times this.
double kernel(const ParamSet& p, double x) {
  double d = 1.0;
  for (double a : p.a()) d *= 1.0 + a * a - 2.0 * a * x;
  return 1.0 / d;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

// ---------------------------------------------------------------- normalization

Outcome closed_vs_special(Draws& d) {
  MaxAbs m;
  for (int n = 1; n <= 6; ++n) {
    for (int t = 0; t < 30; ++t) {
      const ParamSet p = d.params(n);
      m.add(a_closed(p) - a_special(p));
    }
  }
  return {m.value, "30 sets per n = 1..6"};
}

Outcome closed_vs_numeric(Draws& d) {
  MaxAbs m;
  for (int n = 1; n <= 6; ++n) {
    for (int t = 0; t < 30; ++t) {
      const ParamSet p = d.params(n);
      m.add(a_closed(p) - normalizer_numeric(p));
    }
  }
  return {m.value, "30 sets per n = 1..6"};
}

Outcome density_integral(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 30; ++t) {
    const KestenMcKay f(d.params(1 + t % 8));
    m.add(integrate_plain([&](double x) { return f.pdf(x); }, kQuadTol).value - 1.0);
  }
  return {m.value, "30 sets, n = 1..8"};
}

Outcome scaling_law(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 30; ++t) {
    const ParamSet unit = d.params(t % 7);
    const double c = d.in(0.5, 3.0);
    const ParamSet scaled(std::vector<double>(unit.a().begin(), unit.a().end()), c);
    const double x = d.in(-c, c);
    const double lhs = density(scaled, x);
    const double rhs = density(unit, x / c) / c;
    m.add((lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  return {m.value, "relative, 30 sets, c in (0.5, 3)"};
}

Outcome series_vs_product(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 20; ++t) {
    const ParamSet p = d.params(t % 7);
    for (int i = 0; i < 5; ++i) {
      const double x = d.in(-1.0, 1.0);
      m.add(density_series(p, x, 1e-12) - density(p, x));
    }
  }
  return {m.value, "20 sets x 5 points, series tol 1e-12"};
}

Outcome positivity(Draws& d) {
  double lowest = INFINITY;
  for (int t = 0; t < 30; ++t) {
    const KestenMcKay f(d.params(t % 9));
    for (int i = 0; i < 1000; ++i) lowest = std::min(lowest, f.pdf(-1.0 + 2.0 * i / 999.0));
  }
  return {std::max(0.0, -lowest), "largest negative density value over 1000-point grids"};
}

Outcome coincident_numeric(Draws&) {
  MaxAbs m;
  m.add(normalizer_numeric(ParamSet({0.25, 0.25})) - 0.9375);
  m.add(normalizer_numeric(ParamSet({0.3, 0.3, -0.5})) - a_special(ParamSet({0.3, 0.3, -0.5})));
  const ParamSet six({0.4, 0.4, 0.4, -0.2, -0.2, 0.7});
  m.add(a_special(six) - normalizer_numeric(six));
  return {m.value, "repeated parameters, closed form unavailable"};
}

// --------------------------------------------------------------------- genfun

Outcome b_vs_quadrature(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 12; ++t) {
    const ParamSet p = d.params(1 + t % 6);
    const double a_n = normalizer(p);
    for (int k = 0; k <= 20; ++k) {
      const double q = integrate_weighted([&](double x) { return a_n * eval_u(k, x) * kernel(p, x); },
                                          kQuadTol).value;
      m.add(b_coeff(p, k) - q);
    }
  }
  return {m.value, "12 sets, k <= 20"};
}

Outcome b_vs_series_division(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 30; ++t) {
    const ParamSet p = d.params(1 + t % 8);
    const BSeq g = b_from_genfun(p, 40);
    for (int k = 0; k <= 40; ++k) m.add(b_coeff(p, k) - g.values[k]);
  }
  return {m.value, "30 sets, k <= 40"};
}

Outcome moment_vs_quadrature(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 20; ++t) {
    const KestenMcKay f(d.params(1 + t % 6));
    for (int k = 0; k <= 12; ++k) {
      const double q = integrate_plain([&](double x) { return std::pow(x, k) * f.pdf(x); }, kQuadTol).value;
      m.add(moment(f.params(), k) - q);
    }
  }
  return {m.value, "20 sets, k <= 12"};
}

Outcome semicircle_moments(Draws&) {
  MaxAbs m;
  const ParamSet wigner({});
  m.add(moment(wigner, 2) - 0.25);
  m.add(moment(wigner, 4) - 0.125);
  return {m.value, "n = 0, k = 2 and 4"};
}

Outcome b3_relation(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 20; ++t) {
    const ParamSet p = d.params(3);
    const std::vector<double> h = delta_all(30, p.a());
    const double s3 = elementary_all(p.a())[3];
    for (int k = 0; k <= 30; ++k) m.add(b_coeff(p, k) - (h[k] - (k > 0 ? s3 * h[k - 1] : 0.0)));
  }
  return {m.value, "20 sets, k <= 30"};
}

// V_{k_1..k_r} = integral of prod U_{k_i} against the semicircle weight, by
// the adaptive oracle; memoized on the sorted index tuple.
class VTable {
 public:
  double operator()(std::vector<int> ks) {
    std::sort(ks.begin(), ks.end());
    auto it = cache_.find(ks);
    if (it != cache_.end()) return it->second;
    const double v = integrate_weighted(
                         [&](double x) {
                           double prod = 1.0;
                           for (int k : ks) prod *= eval_u(k, x);
                           return prod;
                         },
                         1e-13)
                         .value;
    cache_.emplace(ks, v);
    return v;
  }

 private:
  std::map<std::vector<int>, double> cache_;
};

Outcome inverse_normalizer_series(Draws& d) {
  constexpr int kTrunc = 12;
  VTable v;
  MaxAbs m;
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < 5; ++t) {
      const ParamSet p = d.params(n, 0.25, 0.05);
      std::vector<int> ks(n, 0);
      double sum = 0.0;
      for (;;) {
        double w = 1.0;
        for (int i = 0; i < n; ++i) w *= std::pow(p.a()[i], ks[i]);
        sum += w * v(ks);
        int i = 0;
        while (i < n && ++ks[i] > kTrunc) ks[i++] = 0;
        if (i == n) break;
      }
      m.add(sum - 1.0 / a_special(p));
    }
  }
  return {m.value, "n <= 3, |a_i| <= 0.25, truncation 12 per index"};
}

// ----------------------------------------------------------------- identities

Outcome identity_an2(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 50; ++t) m.add(residual_an2(d.params(2 + t % 7).a()));
  return {m.value, "50 sets, n = 2..8"};
}

ParamSet identity_params(Draws& d, int t) { return d.params(2 + t % 5, 0.9, 0.05, 0.1); }

Outcome identity_sym_rational(Draws& d) {
  MaxAbs below, top;
  for (int t = 0; t < 50; ++t) {
    const ParamSet p = identity_params(d, t);
    for (int k = 1; k <= p.n() - 1; ++k) (k <= p.n() - 2 ? below : top).add(residual_id(k, p.a()));
  }
  return {std::max(below.value, top.value), "k <= n-2: " + fmt(below.value) + "; k = n-1: " + fmt(top.value) +
                                                 " (the k = n-1 sum equals (-1)^(n-1)/(2^(n-1) prod a_j), not 0)"};
}

Outcome identity_sym_rational_below_top(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 50; ++t) {
    const ParamSet p = identity_params(d, t);
    for (int k = 1; k <= p.n() - 2; ++k) m.add(residual_id(k, p.a()));
  }
  return {m.value, "50 sets, n = 2..6, 1 <= k <= n-2"};
}

Outcome identity_sym_rational_top_value(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 50; ++t) {
    const ParamSet p = identity_params(d, t);
    const int n = p.n();
    double prod = 1.0;
    for (double a : p.a()) prod *= a;
    const double expected = ((n - 1) % 2 == 0 ? 1.0 : -1.0) / (std::ldexp(1.0, n - 1) * prod);
    m.add((residual_id(n - 1, p.a()) - expected) / std::abs(expected));
  }
  return {m.value, "relative error of the k = n-1 sum against (-1)^(n-1)/(2^(n-1) prod a_j)"};
}

Outcome identity_id2(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 50; ++t) {
    const ParamSet p = d.params(2 + t % 7);
    for (int mm = 1; mm <= 10; ++mm) m.add(residual_id2(mm, p));
  }
  return {m.value, "50 sets, n = 2..8, m <= 10"};
}

// -------------------------------------------------------------- orthogonality

Outcome gram_offdiagonal(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 20; ++t) {
    const ParamSet p = d.params(1 + t % 6);
    for (int a = 1; a <= 12; ++a) {
      for (int b = 0; b < a; ++b) m.add(gram(a, b, p));
    }
  }
  return {m.value, "20 sets, n = 1..6, 0 <= k < m <= 12"};
}

Outcome gram_vs_quadrature(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 20; ++t) {
    const ParamSet p = d.params(1 + t % 6);
    const double a_n = normalizer(p);
    std::vector<OrthoPoly> polys;
    for (int j = 0; j <= 12; ++j) polys.push_back(p_coeffs(j, p));
    for (int a = 0; a <= 12; ++a) {
      for (int b = 0; b <= a; ++b) {
        const double q = integrate_weighted(
                             [&](double x) { return a_n * polys[a](x) * polys[b](x) * kernel(p, x); }, 1e-11)
                             .value;
        m.add(gram(a, b, p) - q);
      }
    }
  }
  return {m.value, "20 sets, 0 <= k <= m <= 12"};
}

Outcome gram_diagonal_positive(Draws& d) {
  double lowest = INFINITY;
  for (int t = 0; t < 20; ++t) {
    const ParamSet p = d.params(1 + t % 6);
    for (int a = 0; a <= 12; ++a) lowest = std::min(lowest, gram(a, a, p));
  }
  // A zero diagonal means a vanished polynomial, so it counts as a failure.
  return {lowest > 0.0 ? 0.0 : 1.0 - lowest, "smallest gram(m, m) = " + fmt(lowest)};
}

Outcome recurrence(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 20; ++t) {
    const ParamSet p = d.params(1 + t % 6);
    for (int mm = p.n(); mm <= 15; ++mm) {
      for (int i = 0; i < 7; ++i) m.add(p_recur_check(mm, p, d.in(-1.0, 1.0)));
    }
  }
  return {m.value, "20 sets, n <= m <= 15, 7 points each"};
}

// ------------------------------------------------------------------ conjugate

Outcome fm1_normalization(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 20; ++t) {
    const double y = d.in(-1.0, 1.0), rho = d.in(-0.95, 0.95);
    m.add(integrate_plain([&](double x) { return fm1(x, y, rho); }, kQuadTol).value - 1.0);
  }
  return {m.value, "20 random (y, rho)"};
}

Outcome fm1_marginal(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 20; ++t) {
    const double x = d.in(-1.0, 1.0), rho = d.in(-0.95, 0.95);
    m.add(integrate_weighted([&](double y) { return fm1(x, y, rho); }, kQuadTol).value - wigner_density(x));
  }
  return {m.value, "20 random (x, rho)"};
}

Outcome poisson_mehler_grid(Draws&) {
  MaxAbs m;
  const double rhos[] = {-0.9, -0.45, 0.0, 0.45, 0.9};
  for (int i = 0; i <= 20; ++i) {
    const double x = -1.0 + i / 10.0;
    for (int j = 0; j <= 20; ++j) {
      const double y = -1.0 + j / 10.0;
      for (double rho : rhos) m.add(poisson_mehler(x, y, rho, 1e-12) - (1.0 - rho * rho) / w_eval(x, y, rho));
    }
  }
  return {m.value, "21 x 21 x 5 grid, series tol 1e-12"};
}

ConjParamSet conj_draw(Draws& d, int k, double rmax = 0.9) {
  std::vector<double> rho(k), y(k);
  for (int i = 0; i < k; ++i) {
    rho[i] = d.in(-rmax, rmax);
    y[i] = d.in(-1.0, 1.0);
  }
  return ConjParamSet(rho, y);
}

Outcome a2k_vs_numeric(Draws& d) {
  MaxAbs m;
  for (int k = 1; k <= 3; ++k) {
    for (int t = 0; t < 10; ++t) {
      const ConjParamSet p = conj_draw(d, k);
      m.add(a2k_closed(p) - normalizer_numeric(p));
    }
  }
  return {m.value, "10 sets per k = 1, 2, 3"};
}

Outcome elementary_closed(Draws& d) {
  MaxAbs m;
  for (int k = 1; k <= 3; ++k) {
    for (int t = 0; t < 20; ++t) {
      const ConjParamSet p = conj_draw(d, k);
      const auto closed = conj_elementary_closed(p);
      const auto expanded = conj_elementary(p);
      for (std::size_t j = 0; j < closed.size(); ++j) m.add(closed[j] - expanded[j]);
    }
  }
  return {m.value, "explicit k <= 3 formulas vs expansion of the quadratic factors"};
}

Outcome bridge_vs_fm2(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 20; ++t) {
    const double y1 = d.in(-0.99, 0.99), y2 = d.in(-0.99, 0.99);
    const double r1 = d.in(-0.9, 0.9), r2 = d.in(-0.9, 0.9);
    const double x = d.in(-1.0, 1.0);
    const double f = fm_density(ConjParamSet({r1, r2}, {y1, y2}), x);
    m.add((conditional_bridge(x, y1, y2, r1, r2) - f) / std::max(1.0, f));
  }
  return {m.value, "relative, 20 random points"};
}

Outcome inverse_a4_series(Draws& d) {
  constexpr int kTrunc = 25;
  VTable v;
  MaxAbs m;
  for (int t = 0; t < 10; ++t) {
    const ConjParamSet p = conj_draw(d, 2, 0.6);
    double sum = 0.0;
    for (int m1 = 0; m1 <= kTrunc; ++m1) {
      for (int m2 = 0; m2 <= kTrunc; ++m2) {
        sum += v({m1, m2}) * std::pow(p.rho()[0], m1) * std::pow(p.rho()[1], m2) * eval_u(m1, p.y()[0]) *
               eval_u(m2, p.y()[1]);
      }
    }
    const double lhs = (1.0 - p.rho()[0] * p.rho()[0]) * (1.0 - p.rho()[1] * p.rho()[1]) / a2k_closed(p);
    m.add(sum - lhs);
  }
  return {m.value, "k = 2, |rho| <= 0.6, truncation 25 per index"};
}

// --------------------------------------------------------------------- markov

Outcome chapman(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 20; ++t) {
    const double x = d.in(-1.0, 1.0), y2 = d.in(-1.0, 1.0);
    const double r1 = d.in(-0.9, 0.9), r2 = d.in(-0.9, 0.9);
    m.add(chapman_residual(x, y2, r1, r2));
  }
  return {m.value, "20 random (x, y2, r1, r2)"};
}

Outcome f2m_mass(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 4; ++t) {
    const double rho = d.in(-0.9, 0.9);
    m.add(integrate_2d([&](double x, double y) { return f2m(x, y, rho); }, 1e-10).value - 1.0);
  }
  return {m.value, "4 random rho"};
}

Outcome f2m_mixed_moment(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 4; ++t) {
    const double rho = d.in(-0.9, 0.9);
    m.add(integrate_2d([&](double x, double y) { return x * y * f2m(x, y, rho); }, 1e-10).value - rho / 4.0);
  }
  return {m.value, "E[XY] = rho/4 at 4 random rho"};
}

struct Triple {
  double r1, r2, r3;
};

Triple admissible_triple(Draws& d) {
  for (;;) {
    const Triple r{d.in(-0.8, 0.8), d.in(-0.8, 0.8), d.in(-0.8, 0.8)};
    if (w3_grid_minimum(r.r1, r.r2, r.r3, 21) >= 0.0) return r;
  }
}

Outcome trivariate_marginal(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 10; ++t) {
    const Triple r = admissible_triple(d);
    const double y2 = d.in(-1.0, 1.0), y3 = d.in(-1.0, 1.0);
    const double q = integrate_plain([&](double y1) { return g3(y1, y2, y3, r.r1, r.r2, r.r3); }, kQuadTol).value;
    m.add(q - f2m(y2, y3, r.r2 * r.r3));
  }
  return {m.value, "10 random parameter/point combinations"};
}

Outcome trivariate_mass(Draws& d) {
  MaxAbs m;
  std::string detail;
  std::vector<Triple> cases{{0.0, 0.0, 0.0}, {0.5, -0.4, 0.0}};
  for (int t = 0; t < 3; ++t) cases.push_back(admissible_triple(d));
  for (const Triple& r : cases) {
    try {
      const Integration3dResult q =
          integrate_3d([&](double a, double b, double c) { return g3(a, b, c, r.r1, r.r2, r.r3); }, 1e-9, 1 << 16);
      m.add(q.value - 1.0);
      detail = "tensor vs randomized Halton agree; last MC = " + fmt(q.mc_value) + " +/- " + fmt(q.mc_std_error);
    } catch (const EstimatorDisagreement& e) {
      m.add(INFINITY);
      detail = e.what();
    }
  }
  return {m.value, detail};
}

// ------------------------------------------------------------------- sampling

Outcome ks_round_trip(Draws& d) {
  constexpr std::int64_t kCount = 100000;
  MaxAbs m;
  for (int t = 0; t < 10; ++t) {
    const CdfTable table = build_cdf(d.params(t % 7, 0.9, 0.05));
    const auto xs = sample(table, kCount, 1000 + t);
    m.add(ks_statistic(xs, table));
  }
  return {m.value, "10 sets, 1e5 draws, seeds 1000..1009; threshold is the 1% critical value"};
}

Outcome sample_mean(Draws&) {
  const auto xs = sample(build_cdf(ParamSet({0.6})), 100000, 1);
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  return {mean - 0.3, "a = (0.6), 1e5 draws, seed 1, mean " + fmt(mean)};
}

Outcome cdf_vs_quadrature(Draws& d) {
  MaxAbs m;
  for (int t = 0; t < 6; ++t) {
    const ParamSet p = d.params(1 + t % 6);
    const CdfTable table = build_cdf(p);
    const KestenMcKay f(p);
    for (int i = 0; i < 10; ++i) {
      const double b = d.in(-1.0, 1.0);
      const double half = 0.5 * (b + 1.0);
      const double q = integrate_plain([&](double s) { return half * f.pdf(-1.0 + half * (s + 1.0)); }, 1e-13).value;
      m.add(table.cdf(b) - q);
    }
  }
  return {m.value, "6 sets x 10 points, N = 2048"};
}

const std::vector<Check>& registry() {
  static const std::vector<Check> checks{
      {"normalization", "normalization.closed_vs_special", 1e-11, closed_vs_special},
      {"normalization", "normalization.closed_vs_numeric", 1e-9, closed_vs_numeric},
      {"normalization", "normalization.density_integral", 1e-9, density_integral},
      {"normalization", "normalization.scaling_law", 1e-13, scaling_law},
      {"normalization", "normalization.series_vs_product", 1e-10, series_vs_product},
      {"normalization", "normalization.positivity", 0.0, positivity},
      {"normalization", "normalization.coincident_numeric", 1e-9, coincident_numeric},
      {"genfun", "genfun.b_vs_quadrature", 1e-9, b_vs_quadrature},
      {"genfun", "genfun.b_vs_series_division", 1e-11, b_vs_series_division},
      {"genfun", "genfun.moment_vs_quadrature", 1e-9, moment_vs_quadrature},
      {"genfun", "genfun.semicircle_moments", 1e-12, semicircle_moments},
      {"genfun", "genfun.b3_relation", 1e-12, b3_relation},
      {"genfun", "genfun.inverse_normalizer_series", 1e-6, inverse_normalizer_series},
      {"identities", "identities.an2", 1e-10, identity_an2},
      {"identities", "identities.sym_rational", 1e-10, identity_sym_rational},
      {"identities", "identities.sym_rational_below_top", 1e-10, identity_sym_rational_below_top},
      {"identities", "identities.sym_rational_top_value", 1e-10, identity_sym_rational_top_value},
      {"identities", "identities.alternating_b", 1e-10, identity_id2},
      {"orthogonality", "orthogonality.gram_offdiagonal", 1e-9, gram_offdiagonal},
      {"orthogonality", "orthogonality.gram_vs_quadrature", 1e-8, gram_vs_quadrature},
      {"orthogonality", "orthogonality.gram_diagonal_positive", 0.0, gram_diagonal_positive},
      {"orthogonality", "orthogonality.recurrence", 1e-11, recurrence},
      {"conjugate", "conjugate.fm1_normalization", 1e-8, fm1_normalization},
      {"conjugate", "conjugate.fm1_marginal", 1e-8, fm1_marginal},
      {"conjugate", "conjugate.poisson_mehler", 1e-10, poisson_mehler_grid},
      {"conjugate", "conjugate.a2k_vs_numeric", 1e-9, a2k_vs_numeric},
      {"conjugate", "conjugate.elementary_closed", 1e-12, elementary_closed},
      {"conjugate", "conjugate.bridge_vs_fm2", 1e-10, bridge_vs_fm2},
      {"conjugate", "conjugate.inverse_a4_series", 1e-6, inverse_a4_series},
      {"markov", "markov.chapman_kolmogorov", 1e-8, chapman},
      {"markov", "markov.f2m_mass", 1e-8, f2m_mass},
      {"markov", "markov.f2m_mixed_moment", 1e-8, f2m_mixed_moment},
      {"markov", "markov.trivariate_marginal", 1e-8, trivariate_marginal},
      {"markov", "markov.trivariate_mass", 1e-6, trivariate_mass},
      {"sampling", "sampling.ks_round_trip", ks_critical_value(100000), ks_round_trip},
      {"sampling", "sampling.mean_a06", 0.006, sample_mean},
      {"sampling", "sampling.cdf_vs_quadrature", 1e-8, cdf_vs_quadrature},
  };
  return checks;
}

bool in_suite(const std::string& suite, const Check& c) {
  if (suite == "all") return true;
  if (suite == "conj") return std::string(c.suite) == "conjugate" || std::string(c.suite) == "markov";
  return suite == c.suite;
}

}  // namespace

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<std::string> suite_names() {
  return {"normalization", "identities", "orthogonality", "genfun", "conjugate", "markov", "sampling", "all"};
}

Report run_verify(const std::string& suite, std::optional<double> tol_override) {
  Report report;
  report.suite = suite;
  for (const Check& c : registry()) {
    if (!in_suite(suite, c)) continue;
    CheckResult r;
    r.name = c.name;
    r.tolerance = tol_override.value_or(c.tol);
    Draws draws(fnv1a(c.name));
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = c.run(draws);
      r.max_residual = o.residual;
      r.detail = o.detail;
      r.pass = std::abs(o.residual) <= r.tolerance;
    } catch (const std::exception& e) {
      r.max_residual = INFINITY;
      r.detail = std::string("error: ") + e.what();
      r.pass = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(r));
  }
  if (report.checks.empty()) throw std::invalid_argument("unknown suite: " + suite);
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return report;
}

std::string report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["suite"] = r.suite;
  j["pass"] = r.pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    // JSON has no infinity; a failed evaluation reports null.
    if (std::isfinite(c.max_residual)) {
      e["max_residual"] = c.max_residual;
    } else {
      e["max_residual"] = nullptr;
    }
    e["tolerance"] = c.tolerance;
    e["pass"] = c.pass;
    j["checks"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

}  // namespace gkm::cli
