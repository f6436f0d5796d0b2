#include <doctest.h>

#include <cmath>
#include <complex>

#include "gkm/chebyshev.hpp"
#include "gkm/conjugate.hpp"
#include "gkm/errors.hpp"
#include "gkm/oracle.hpp"
#include "gkm/symfun.hpp"
#include "oracles.hpp"

using namespace gkm;
using doctest::Approx;

namespace {

double w_expanded(double x, double y, double r) {
  const double r2 = r * r;
  return (1 - r2) * (1 - r2) - 4 * x * y * r * (1 + r2) + 4 * r2 * (x * x + y * y);
}

// (1 + a^2 - 2 a x)(1 + b^2 - 2 b x) for the pair a, b = r e^{+-i acos y}.
double w_complex(double x, double y, double r) {
  const std::complex<double> a = std::polar(r, std::acos(y));
  const std::complex<double> b = std::conj(a);
  return ((1.0 + a * a - 2.0 * a * x) * (1.0 + b * b - 2.0 * b * x)).real();
}

ConjParamSet random_conj(test::Rng& rng, int k, double rmax = 0.85) {
  std::vector<double> rho(k), y(k);
  for (int i = 0; i < k; ++i) {
    rho[i] = rng.uniform(-rmax, rmax);
    y[i] = rng.uniform(-0.95, 0.95);
  }
  return ConjParamSet(rho, y);
}

}  // namespace

TEST_CASE("w spot values") {
  CHECK(w_eval(0, 0, 0) == 1.0);
  CHECK(w_eval(0.3, -0.8, 0) == Approx(1.0));
  CHECK(w_eval(0, 0, 0.5) == Approx(0.5625));
  CHECK(w_eval(1, 1, 0.5) == Approx(0.0625));
  CHECK(w_eval(-1, 1, 0.5) == Approx(2.25 * 2.25));
  CHECK_THROWS_AS(w_eval(1.01, 0, 0.5), DomainError);
  CHECK_THROWS_AS(w_eval(0, -1.5, 0.5), DomainError);
}

TEST_CASE("factored w agrees with the expanded polynomial and the complex modulus") {
  test::Rng rng(7);
  for (int t = 0; t < 500; ++t) {
    const double x = rng.uniform(-1, 1), y = rng.uniform(-1, 1), r = rng.uniform(-0.99, 0.99);
    const double w = w_eval(x, y, r);
    REQUIRE(w > 0.0);
    REQUIRE(w == Approx(w_expanded(x, y, r)).epsilon(1e-10).scale(1e-12));
    REQUIRE(w == Approx(w_complex(x, y, r)).epsilon(1e-10).scale(1e-12));
  }
  // Near the corner the expanded form loses everything; the factored form keeps
  // full relative accuracy against (1-r)^4 at x = y = 1.
  const double r = 0.9999;
  CHECK(w_eval(1, 1, r) == Approx(std::pow(1 - r, 4)).epsilon(1e-9));
}

TEST_CASE("single pair density") {
  CHECK(fm1(0.0, 0.0, 0.0) == Approx(2 / test::kPi));
  CHECK(fm1(0.2, 0.5, 0.5) == Approx(0.75 * wigner_density(0.2) / w_expanded(0.2, 0.5, 0.5)));
  const ConjParamSet p({0.6}, {0.3});
  CHECK(fm_density(p, 0.1) == Approx(fm1(0.1, 0.3, 0.6)).epsilon(1e-14));
  CHECK(ConjugateDensity(p).normalizer() == Approx(0.64));
  CHECK_THROWS_AS(fm1(0.0, 1.2, 0.5), DomainError);
}

TEST_CASE("conjugate density equals the real-parameter form with complex a") {
  test::Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    const ConjParamSet p = random_conj(rng, 1 + t % 3, 0.7);
    const auto a = test::conjugate_a(p);
    const double a_ref = test::complex_partial_fraction_normalizer(a);
    const ConjugateDensity f(p);
    REQUIRE(f.normalizer() == Approx(a_ref).epsilon(1e-9));
    for (double x : {-0.8, -0.1, 0.35, 0.9}) {
      const double ref = a_ref * 2.0 * std::sqrt(1 - x * x) / (test::kPi * test::complex_denominator(a, x));
      REQUIRE(f.pdf(x) == Approx(ref).epsilon(1e-9));
    }
  }
}

TEST_CASE("closed normalizers") {
  CHECK(a2k_closed(ConjParamSet({}, {})) == 1.0);
  CHECK(a2k_closed(ConjParamSet({0.6}, {0.3})) == Approx(0.64));
  CHECK(a2k_closed(ConjParamSet({0.5, 0.5}, {0.0, 0.0})) == Approx(0.75 * 0.75 * (0.9375 * 0.9375) / 0.9375));
  CHECK_THROWS_AS(a2k_closed(ConjParamSet({0.1, 0.2, 0.3, 0.4}, {0, 0, 0, 0})), Unsupported);

  const ConjParamSet four({0.1, 0.2, 0.3, 0.4}, {0.5, -0.5, 0.1, 0.0});
  const double numeric = normalizer_numeric(four);
  CHECK(conj_normalizer(four) == Approx(numeric).epsilon(1e-12));
  CHECK(numeric == Approx(test::complex_partial_fraction_normalizer(test::conjugate_a(four))).epsilon(1e-8));

  test::Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    const ConjParamSet p = random_conj(rng, 1 + t % 3);
    REQUIRE(a2k_closed(p) == Approx(normalizer_numeric(p)).epsilon(1e-9));
  }
}

TEST_CASE("w3 spot values and positivity") {
  CHECK(w3_eval(0, 0, 0, 0, 0, 0) == 1.0);
  CHECK(w3_eval(0.4, -0.2, 0.9, 0.5, 0, 0) == Approx(1.0));
  // r1 = 0 kills every term carrying r1 r2 r3.
  CHECK(w3_eval(0.1, 0.2, 0.3, 0, 0.5, 0.7) == Approx(1 - 0.25 * 0.49));
  test::Rng rng(10);
  for (int t = 0; t < 20; ++t) {
    const double r1 = rng.uniform(-0.99, 0.99), r2 = rng.uniform(-0.99, 0.99), r3 = rng.uniform(-0.99, 0.99);
    REQUIRE(w3_grid_minimum(r1, r2, r3, 9) > 0.0);
  }
  CHECK(w3_grid_minimum(1.2, 0.5, 0.5, 21) < 0.0);
  CHECK_THROWS_AS(require_g3_nonnegative(1.2, 0.5, 0.5), InvalidParameters);
  CHECK_NOTHROW(require_g3_nonnegative(0.9, -0.5, 0.5));
}

TEST_CASE("w3 integrates out one coordinate") {
  // int (2/pi) sqrt(1 - y1^2) w3 / (w12 w13 w23) dy1 = (1 - r2^2 r3^2) / w23.
  test::Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    const double r1 = rng.uniform(-0.8, 0.8), r2 = rng.uniform(-0.8, 0.8), r3 = rng.uniform(-0.8, 0.8);
    const double y2 = rng.uniform(-0.9, 0.9), y3 = rng.uniform(-0.9, 0.9);
    const double w23 = w_eval(y2, y3, r2 * r3);
    const auto lhs = integrate_weighted(
        [&](double y1) {
          return w3_eval(y1, y2, y3, r1, r2, r3) /
                 (w_eval(y1, y2, r1 * r2) * w_eval(y1, y3, r1 * r3) * w23);
        },
        1e-12);
    REQUIRE(lhs.value == Approx((1 - r2 * r2 * r3 * r3) / w23).epsilon(1e-9));
  }
}

TEST_CASE("Poisson-Mehler kernel") {
  CHECK(poisson_mehler(0.3, -0.7, 0.0, 1e-14) == 1.0);
  CHECK(poisson_mehler(0.0, 0.0, 0.5, 1e-14) == Approx(4.0 / 3).epsilon(1e-12));
  CHECK_THROWS_AS(poisson_mehler(0, 0, 1.0, 1e-10), InvalidParameters);
  CHECK_THROWS_AS(poisson_mehler(1.5, 0, 0.5, 1e-10), DomainError);
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const double x = -1 + 0.1 * i, y = -1 + 0.1 * j;
      for (double r : {-0.7, 0.3, 0.8}) {
        REQUIRE(std::abs(poisson_mehler(x, y, r, 1e-13) - (1 - r * r) / w_eval(x, y, r)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("bivariate density") {
  CHECK(f2m(0.2, -0.4, 0.0) == Approx(wigner_density(0.2) * wigner_density(-0.4)).epsilon(1e-14));
  CHECK(f2m(0.3, 0.6, 0.5) == Approx(f2m(0.6, 0.3, 0.5)).epsilon(1e-14));
  CHECK(f2m(0.3, 0.6, 0.5) == Approx(fm1(0.3, 0.6, 0.5) * wigner_density(0.6)).epsilon(1e-13));
  for (double r : {-0.6, 0.4}) {
    const auto mass = integrate_2d([&](double x, double y) { return f2m(x, y, r); }, 1e-10);
    CHECK(mass.value == Approx(1.0).epsilon(1e-8));
    // E[U_1(X) U_1(Y)] = rho
    const auto mixed = integrate_2d([&](double x, double y) { return 4 * x * y * f2m(x, y, r); }, 1e-10);
    CHECK(mixed.value == Approx(r).epsilon(1e-8));
  }
}

TEST_CASE("trivariate density") {
  CHECK(g3(0.1, 0.2, 0.3, 0, 0, 0) ==
        Approx(wigner_density(0.1) * wigner_density(0.2) * wigner_density(0.3)).epsilon(1e-14));
  CHECK(g3(0.5, -0.5, 0.2, 0.6, 0.4, 0.3) > 0.0);
  const double r1 = 0.6, r2 = -0.4, r3 = 0.5;
  const double y2 = 0.3, y3 = -0.2;
  const auto marg = integrate_plain([&](double y1) { return g3(y1, y2, y3, r1, r2, r3); }, 1e-12);
  CHECK(marg.value == Approx(f2m(y2, y3, r2 * r3)).epsilon(1e-9));
}

TEST_CASE("Chapman-Kolmogorov") {
  CHECK(std::abs(chapman_residual(0.2, -0.3, 0.5, 0.6)) <= 1e-10);
  test::Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    const double x = rng.uniform(-1, 1), y = rng.uniform(-1, 1);
    const double r1 = rng.uniform(-0.8, 0.8), r2 = rng.uniform(-0.8, 0.8);
    REQUIRE(std::abs(chapman_residual(x, y, r1, r2)) <= 1e-9);
  }
}

TEST_CASE("conditional bridge") {
  const double y1 = 0.4, y2 = -0.3, r1 = 0.5, r2 = 0.7;
  const auto mass = integrate_plain([&](double x) { return conditional_bridge(x, y1, y2, r1, r2); }, 1e-12);
  CHECK(mass.value == Approx(1.0).epsilon(1e-9));
  // With r1 = 0 the middle state forgets y1 and follows the one-step kernel.
  CHECK(conditional_bridge(0.2, y1, y2, 0.0, r2) == Approx(fm1(0.2, y2, r2)).epsilon(1e-13));
  CHECK(conditional_bridge(0.2, y1, y2, r1, r2) > 0.0);
  CHECK_THROWS_AS(conditional_bridge(0.0, 1.0, 0.0, 0.5, 0.5), DomainError);
}

TEST_CASE("S values of the complex parameter vector") {
  test::Rng rng(13);
  for (int t = 0; t < 30; ++t) {
    const int k = 1 + t % 3;
    const ConjParamSet p = random_conj(rng, k);
    const auto a = test::conjugate_a(p);
    const auto s = conj_elementary(p);
    const auto closed = conj_elementary_closed(p);
    REQUIRE(s.size() == static_cast<std::size_t>(2 * k + 1));
    for (int j = 0; j <= 2 * k; ++j) {
      std::complex<double> ref = 0.0;
      for (std::uint32_t mask = 0; mask < (1u << a.size()); ++mask) {
        if (__builtin_popcount(mask) != j) continue;
        std::complex<double> prod = 1.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (mask & (1u << i)) prod *= a[i];
        }
        ref += prod;
      }
      REQUIRE(std::abs(ref.imag()) <= 1e-12);
      REQUIRE(s[j] == Approx(ref.real()).epsilon(1e-12).scale(1e-12));
      REQUIRE(std::abs(closed[j] - s[j]) <= 1e-12);
    }
    if (k >= 2) {
      std::vector<double> rho(p.rho().begin(), p.rho().end()), y(p.y().begin(), p.y().end());
      std::swap(rho[0], rho[1]);
      std::swap(y[0], y[1]);
      const auto swapped = conj_elementary_closed(ConjParamSet(rho, y));
      for (int j = 0; j <= 2 * k; ++j) REQUIRE(swapped[j] == Approx(closed[j]).epsilon(1e-13).scale(1e-13));
    }
  }
}

TEST_CASE("U-expansion of the one-pair density") {
  // f_M1(x | y, rho) = (2/pi) sqrt(1 - x^2) sum_j rho^j U_j(y) U_j(x)
  const double y = 0.35, r = 0.6;
  for (double x : {-0.9, -0.25, 0.0, 0.7}) {
    double sum = 0.0;
    for (int j = 0; j <= 120; ++j) sum += std::pow(r, j) * eval_u(j, y) * eval_u(j, x);
    CHECK(fm1(x, y, r) == Approx(wigner_density(x) * sum).epsilon(1e-12));
  }
}

TEST_CASE("inverse normalizer of two pairs as a power series") {
  // 1/A_4 = sum_{j} (rho1 rho2)^j U_j(y1) U_j(y2) / ((1 - rho1^2)(1 - rho2^2))
  const double r1 = 0.5, r2 = -0.6, y1 = 0.2, y2 = 0.7;
  double sum = 0.0;
  for (int j = 0; j <= 200; ++j) sum += std::pow(r1 * r2, j) * eval_u(j, y1) * eval_u(j, y2);
  const double inv = sum / ((1 - r1 * r1) * (1 - r2 * r2));
  CHECK(1.0 / a2k_closed(ConjParamSet({r1, r2}, {y1, y2})) == Approx(inv).epsilon(1e-12));
}
