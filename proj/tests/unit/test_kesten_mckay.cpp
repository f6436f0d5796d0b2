#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gkm/chebyshev.hpp"
#include "gkm/errors.hpp"
#include "gkm/kesten_mckay.hpp"
#include "gkm/oracle.hpp"
#include "oracles.hpp"

using namespace gkm;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

// Product-form unnormalized density, written out independently.
double raw_density(const std::vector<double>& a, double x) {
  double d = 1.0;
  for (double v : a) d *= 1.0 + v * v - 2.0 * v * x;
  return 2.0 / kPi * std::sqrt(1.0 - x * x) / d;
}

}  // namespace

TEST_CASE("normalizer closed forms") {
  CHECK(a_closed(ParamSet({0.3})) == Approx(1.0).epsilon(1e-15));
  CHECK(a_closed(ParamSet({0.2, 0.3})) == Approx(0.94).epsilon(1e-14));
  CHECK(a_closed(ParamSet({0.1, 0.2, 0.3})) == Approx(0.893564).epsilon(1e-13));
  CHECK(a_special(ParamSet({0.2, 0.3})) == Approx(0.94).epsilon(1e-14));
  CHECK(a_special(ParamSet({0.9})) == 1.0);
  const ParamSet four({0.1, 0.2, 0.3, 0.4});
  CHECK(std::abs(a_special(four) - a_closed(four)) <= 1e-12);
  CHECK(a_closed(ParamSet({})) == 1.0);
}

TEST_CASE("normalizer error paths") {
  CHECK_THROWS_AS(a_closed(ParamSet({0.25, 0.25})), DegenerateParameters);
  CHECK_THROWS_AS(a_closed(ParamSet({0.25, 0.25 + 5e-7})), DegenerateParameters);
  CHECK_THROWS_AS(a_special(ParamSet({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7})), Unsupported);
  CHECK_THROWS_AS(ParamSet({0.2, 1.0}), InvalidParameters);
  CHECK_THROWS_AS(ParamSet({0.2}, 0.0), InvalidParameters);
  // Coincident parameters still resolve through the product formulas.
  CHECK(normalizer(ParamSet({0.25, 0.25})) == Approx(0.9375).epsilon(1e-15));
}

TEST_CASE("A_n matches 1 / integral of the unnormalized density") {
  test::Rng rng(21);
  for (int n = 1; n <= 8; ++n) {
    for (int t = 0; t < 4; ++t) {
      const auto a = rng.params(n);
      const ParamSet p(a);
      const double numeric = 1.0 / integrate_plain([&](double x) { return raw_density(a, x); }, 1e-13).value;
      CHECK(a_closed(p) == Approx(numeric).epsilon(1e-9));
      if (n <= 6) CHECK(a_special(p) == Approx(numeric).epsilon(1e-9));
      CHECK(normalizer_numeric(p) == Approx(numeric).epsilon(1e-11));
    }
  }
}

TEST_CASE("density values") {
  CHECK(density(ParamSet({}), 0.0) == Approx(2.0 / kPi).epsilon(1e-15));
  CHECK(density(ParamSet({0.0}), 0.37) == Approx(2.0 / kPi * std::sqrt(1 - 0.37 * 0.37)).epsilon(1e-15));
  CHECK(density(ParamSet({0.5}), 0.0) == Approx(0.5092958178940651).epsilon(1e-14));
  CHECK(density(ParamSet({0.5}), 0.0) == Approx(density_series(ParamSet({0.5}), 0.0, 1e-12)).epsilon(1e-10));
  CHECK_THROWS_AS(density(ParamSet({0.5}), 1.01), DomainError);
  CHECK_THROWS_AS(density(ParamSet({0.5}, 2.0), -2.5), DomainError);
  CHECK(density(ParamSet({0.5}, 2.0), 2.0) == 0.0);
}

TEST_CASE("classical Kesten-McKay") {
  CHECK(density_classical_km(2.0, 0.0) == Approx(1.0 / (2 * kPi)).epsilon(1e-15));
  CHECK(std::isinf(density_classical_km(2.0, 2.0)));
  CHECK(density_classical_km(3.0, std::sqrt(8.0)) == 0.0);
  CHECK(density_classical_km(3.0, 0.0) == Approx(3.0 * std::sqrt(8.0) / (2 * kPi * 9.0)).epsilon(1e-15));
  CHECK_THROWS_AS(density_classical_km(2.0, 2.1), DomainError);
  for (double v : {2.5, 3.0, 5.0, 11.0}) {
    const double a = 1.0 / std::sqrt(v - 1.0);
    const ParamSet p({a, -a}, 2.0 / a);
    for (double x : {-1.9, -0.3, 0.0, 0.8, 1.7}) {
      if (std::abs(x) > 2.0 * std::sqrt(v - 1.0)) continue;
      CHECK(density_classical_km(v, x) == Approx(density(p, x)).epsilon(1e-13));
    }
  }
}

TEST_CASE("scaling law") {
  test::Rng rng(22);
  for (int t = 0; t < 30; ++t) {
    const auto a = rng.params(rng.integer(0, 6));
    const double c = rng.uniform(0.5, 3.0);
    const double x = rng.uniform(-c, c);
    const double lhs = density(ParamSet(a, c), x);
    const double rhs = density(ParamSet(a), x / c) / c;
    CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, rhs));
  }
}

TEST_CASE("normalization and positivity") {
  test::Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    const KestenMcKay f{ParamSet(rng.params(rng.integer(1, 8)))};
    const double mass = integrate_plain([&](double x) { return f.pdf(x); }, 1e-12).value;
    CHECK(mass == Approx(1.0).epsilon(1e-9));
    double lowest = 1.0;
    for (int i = 0; i < 1000; ++i) lowest = std::min(lowest, f.pdf(-1.0 + 2.0 * i / 999.0));
    CHECK(lowest >= 0.0);
  }
}

TEST_CASE("B coefficients") {
  const ParamSet two({0.2, -0.45});
  CHECK(b_coeff(two, 1) == Approx(0.2 - 0.45).epsilon(1e-14));
  CHECK(b_coeff(ParamSet({0.4}), 5) == Approx(0.01024).epsilon(1e-14));
  test::Rng rng(24);
  for (int t = 0; t < 10; ++t) {
    const ParamSet p(rng.params(rng.integer(1, 8)));
    CHECK(b_coeff(p, 0) == Approx(1.0).epsilon(1e-12));
  }
  CHECK(b_coeff_signed(two, -1) == 0.0);
  CHECK(b_coeff_signed(two, -4) == Approx(-b_coeff(two, 2)));
  CHECK_THROWS_AS(b_coeff(ParamSet({0.3, 0.3}), 2), DegenerateParameters);
}

TEST_CASE("B coefficients match quadrature and the generating function") {
  test::Rng rng(25);
  for (int t = 0; t < 10; ++t) {
    const auto a = rng.params(rng.integer(1, 6));
    const ParamSet p(a);
    const KestenMcKay f(p);
    const BSeq g = b_from_genfun(p, 40);
    CHECK(g.order() == 40);
    for (int k = 0; k <= 40; ++k) REQUIRE(std::abs(b_coeff(p, k) - g.values[k]) <= 1e-11);
    for (int k = 0; k <= 20; ++k) {
      const double q = integrate_plain([&](double x) { return eval_u(k, x) * f.pdf(x); }, 1e-12).value;
      REQUIRE(std::abs(b_coeff(p, k) - q) <= 1e-9);
    }
  }
}

TEST_CASE("B tail decays at the rate max |a_i|") {
  test::Rng rng(26);
  for (int t = 0; t < 10; ++t) {
    const ParamSet p(rng.params(rng.integer(1, 6), 0.8, 0.1));
    const double root = std::pow(std::abs(b_coeff(p, 300)), 1.0 / 300);
    CHECK(root <= p.max_abs() * 1.05);
  }
}

TEST_CASE("density series") {
  CHECK(density_series(ParamSet({0.5}), 0.0, 1e-10) == Approx(0.5092958178940651).epsilon(1e-10));
  const ParamSet two({0.2, -0.3});
  CHECK(std::abs(density_series(two, 0.7, 1e-10) - density(two, 0.7)) <= 1e-10);
  CHECK(density_series(ParamSet({}), 0.3, 1e-10) == density(ParamSet({}), 0.3));
  test::Rng rng(27);
  for (int t = 0; t < 20; ++t) {
    const ParamSet p(rng.params(rng.integer(1, 6)));
    const double x = rng.uniform(-1, 1);
    CHECK(std::abs(density_series(p, x, 1e-11) - density(p, x)) <= 1e-11);
  }
}

TEST_CASE("moments") {
  CHECK(moment(ParamSet({}), 2) == Approx(0.25).epsilon(1e-15));
  CHECK(moment(ParamSet({}), 4) == Approx(0.125).epsilon(1e-15));
  CHECK(moment(ParamSet({}), 3) == 0.0);
  CHECK(moment(ParamSet({0.6}), 1) == Approx(0.3).epsilon(1e-15));
  CHECK(moment(ParamSet({0.6}, 2.0), 1) == Approx(0.6).epsilon(1e-15));
  test::Rng rng(28);
  for (int t = 0; t < 20; ++t) {
    const KestenMcKay f{ParamSet(rng.params(rng.integer(1, 6)))};
    for (int k = 0; k <= 12; ++k) {
      const double q = integrate_plain([&](double x) { return std::pow(x, k) * f.pdf(x); }, 1e-12).value;
      REQUIRE(std::abs(moment(f.params(), k) - q) <= 1e-9);
    }
  }
}

TEST_CASE("mixed products of U") {
  CHECK(inner_uu(ParamSet({0.5}), 0, 0) == Approx(1.0));
  CHECK(inner_uu(ParamSet({0.5}), 0, 3) == Approx(0.125));
  CHECK(inner_uu(ParamSet({}), 1, 1) == Approx(1.0));
  const ParamSet p({0.3, -0.6, 0.75});
  const KestenMcKay f(p);
  const BSeq b = b_sequence(p, 20);
  for (int k = 0; k <= 6; ++k) {
    for (int m = 0; m <= 6; ++m) {
      const double q = integrate_plain([&](double x) { return eval_u(k, x) * eval_u(m, x) * f.pdf(x); }, 1e-12).value;
      CHECK(std::abs(inner_uu(p, k, m) - q) <= 1e-10);
      CHECK(inner_uu(b, k, m) == Approx(inner_uu(p, k, m)).epsilon(1e-15));
    }
  }
}

TEST_CASE("generating-function numerator") {
  CHECK(q_poly(ParamSet({0.4})) == std::vector<double>{1.0});
  CHECK(q_poly(ParamSet({0.2, 0.3})).size() == 1);
  CHECK(q_poly(ParamSet({0.2, 0.3}))[0] == Approx(1.0));
  const auto q3 = q_poly(ParamSet({0.1, 0.2, 0.3}));
  REQUIRE(q3.size() == 2);
  CHECK(q3[0] == Approx(1.0));
  CHECK(q3[1] == Approx(-0.006));
  CHECK(q_poly(ParamSet({0.1, -0.2, 0.5, 0.7, -0.8})).size() == 4);
  CHECK_THROWS_AS(q_poly(ParamSet({0.1, 0.1})), DegenerateParameters);

  const BSeq g1 = b_from_genfun(ParamSet({0.4}), 4);
  const double expect1[] = {1, 0.4, 0.16, 0.064, 0.0256};
  for (int k = 0; k <= 4; ++k) CHECK(g1.values[k] == Approx(expect1[k]));
  const BSeq g2 = b_from_genfun(ParamSet({0.2, 0.3}), 2);
  CHECK(g2.values[0] == Approx(1.0));
  CHECK(g2.values[1] == Approx(0.5));
  CHECK(g2.values[2] == Approx(0.19));
}

TEST_CASE("B for n = 2 and n = 3 in terms of complete sums") {
  test::Rng rng(29);
  for (int t = 0; t < 20; ++t) {
    const auto a2 = rng.params(2);
    const auto h2 = delta_all(30, a2);
    for (int k = 0; k <= 30; ++k) REQUIRE(std::abs(b_coeff(ParamSet(a2), k) - h2[k]) <= 1e-12);
    const auto a3 = rng.params(3);
    const auto h3 = delta_all(30, a3);
    const double s3 = a3[0] * a3[1] * a3[2];
    for (int k = 0; k <= 30; ++k) {
      REQUIRE(std::abs(b_coeff(ParamSet(a3), k) - (h3[k] - (k ? s3 * h3[k - 1] : 0.0))) <= 1e-12);
    }
  }
}

TEST_CASE("partial-fraction identities") {
  CHECK(std::abs(residual_an2(std::vector<double>{0.2, 0.5})) <= 1e-15);
  CHECK(std::abs(residual_an2(std::vector<double>{0.1, 0.2, 0.3})) <= 1e-12);
  CHECK(std::abs(residual_an2(std::vector<double>{-0.5, 0.1, 0.4, 0.8})) <= 1e-11);

  CHECK(std::abs(residual_id(1, std::vector<double>{0.3, 0.6, 0.9})) <= 1e-11);
  CHECK(std::abs(residual_id(2, std::vector<double>{0.1, -0.4, 0.5, 0.7})) <= 1e-10);
  CHECK_THROWS_AS(residual_id(1, std::vector<double>{0.0, 0.4}), ZeroParameter);
  CHECK_THROWS_AS(residual_id(3, std::vector<double>{0.1, 0.4, 0.6}), PreconditionViolation);

  CHECK(std::abs(residual_id2(2, ParamSet({0.2, 0.3}))) <= 1e-15);
  CHECK(std::abs(residual_id2(1, ParamSet({0.1, 0.2, 0.3}))) <= 1e-12);
  CHECK(std::abs(residual_id2(5, ParamSet({0.1, -0.2, 0.4, 0.7}))) <= 1e-11);
}

TEST_CASE("the symmetric-rational sum at k = n-1 is the constant-term value, not zero") {
  // At k = n-1 the sum picks up the constant coefficient of the partial
  // fraction numerator: (-1)^(n-1) / (2^(n-1) prod a_j).
  CHECK(residual_id(1, std::vector<double>{0.2, 0.5}) == Approx(-5.0).epsilon(1e-13));
  CHECK(residual_id(2, std::vector<double>{0.3, 0.6, 0.9}) == Approx(1.0 / (4 * 0.162)).epsilon(1e-13));
  test::Rng rng(30);
  for (int t = 0; t < 50; ++t) {
    const int n = rng.integer(2, 6);
    const auto a = rng.params(n, 0.9, 0.05, 0.1);
    double prod = 1.0;
    for (double v : a) prod *= v;
    const double top = ((n - 1) % 2 ? -1.0 : 1.0) / (std::ldexp(1.0, n - 1) * prod);
    CHECK(residual_id(n - 1, a) == Approx(top).epsilon(1e-11));
    for (int k = 1; k <= n - 2; ++k) REQUIRE(std::abs(residual_id(k, a)) <= 1e-10);
  }
}

TEST_CASE("identity residuals over random sets") {
  test::Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    const ParamSet p(rng.params(rng.integer(2, 8)));
    REQUIRE(std::abs(residual_an2(p.a())) <= 1e-10);
    for (int m = 1; m <= 10; ++m) REQUIRE(std::abs(residual_id2(m, p)) <= 1e-10);
  }
}

TEST_CASE("1/A_n as a multi-geometric sum of U-product integrals") {
  // V_{k_1..k_n} from an exact Gauss rule, an oracle independent of the
  // adaptive integrator.
  constexpr int kTrunc = 12;
  const QuadratureRule rule = gauss_cheb_u_rule(3 * kTrunc + 2);
  test::Rng rng(32);
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < 3; ++t) {
      const auto a = rng.params(n, 0.25, 0.05);
      std::vector<int> ks(n, 0);
      double sum = 0.0;
      for (;;) {
        double w = 1.0;
        for (int i = 0; i < n; ++i) w *= std::pow(a[i], ks[i]);
        sum += w * rule.apply([&](double x) {
          double prod = 1.0;
          for (int k : ks) prod *= eval_u(k, x);
          return prod;
        });
        int i = 0;
        while (i < n && ++ks[i] > kTrunc) ks[i++] = 0;
        if (i == n) break;
      }
      CHECK(std::abs(sum - 1.0 / normalizer(ParamSet(a))) <= 1e-6);
    }
  }
}
