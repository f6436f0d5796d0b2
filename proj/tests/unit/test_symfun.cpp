#include <doctest.h>

#include <cmath>
#include <complex>

#include "gkm/symfun.hpp"
#include "oracles.hpp"

using namespace gkm;
using doctest::Approx;

TEST_CASE("elementary_all small vectors") {
  const std::vector<double> a{0.1, 0.2, 0.3};
  const SymTable s = elementary_all(a);
  CHECK(s.n() == 3);
  CHECK(s[0] == 1.0);
  CHECK(s[1] == Approx(0.6));
  CHECK(s[2] == Approx(0.11));
  CHECK(s[3] == Approx(0.006));
  CHECK(s[4] == 0.0);
  CHECK(s[-1] == 0.0);

  const SymTable empty = elementary_all(std::vector<double>{});
  CHECK(empty.n() == 0);
  CHECK(empty[0] == 1.0);

  const SymTable pm = elementary_all(std::vector<double>{0.5, -0.5});
  CHECK(pm[1] == 0.0);
  CHECK(pm[2] == Approx(-0.25));
}

TEST_CASE("delta small cases") {
  CHECK(delta(1, std::vector<double>{0.3, -0.7}) == Approx(-0.4));
  CHECK(delta(2, std::vector<double>{0.1, 0.2}) == Approx(0.07));
  CHECK(delta(3, std::vector<double>{0.5}) == Approx(0.125));
  CHECK(delta(0, std::vector<double>{0.5, 0.2}) == 1.0);
}

TEST_CASE("elementary and complete agree with enumeration") {
  test::Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto a = rng.params(rng.integer(1, 8), 0.95, 0.0);
    const SymTable s = elementary_all(a);
    CHECK(s[static_cast<int>(a.size())] == Approx(test::elementary_brute(static_cast<int>(a.size()), a)));
    for (int k = 0; k <= static_cast<int>(a.size()); ++k) {
      REQUIRE(std::abs(s[k] - test::elementary_brute(k, a)) <= 1e-14);
    }
    const auto h = delta_all(8, a);
    for (int m = 0; m <= 8; ++m) REQUIRE(std::abs(h[m] - test::complete_brute(m, a)) <= 1e-13);
  }
}

TEST_CASE("generating function of the elementary functions") {
  test::Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    const auto a = rng.params(rng.integer(0, 8), 0.99, 0.0);
    const SymTable s = elementary_all(a);
    for (int i = 0; i < 10; ++i) {
      const double x = rng.uniform(-1, 1);
      double prod = 1.0, poly = 0.0;
      for (double v : a) prod *= 1.0 + x * v;
      for (int k = 0; k <= s.n(); ++k) poly += s[k] * std::pow(x, k);
      REQUIRE(std::abs(prod - poly) <= 1e-13);
    }
  }
}

TEST_CASE("elementary-complete duality up to order 30") {
  test::Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    const auto a = rng.params(rng.integer(1, 8), 0.9, 0.0);
    const SymTable s = elementary_all(a);
    const auto h = delta_all(30, a);
    for (int m = 1; m <= 30; ++m) {
      double c = 0.0;
      for (int k = 0; k <= std::min(m, s.n()); ++k) c += ((k % 2) ? -1.0 : 1.0) * s[k] * h[m - k];
      REQUIRE(std::abs(c) <= 1e-12);
    }
  }
}

TEST_CASE("equal parameters give the stars-and-bars count") {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 0; m <= 6; ++m) {
      const std::vector<double> ones(n, 1.0);
      double count = 1.0;
      for (int i = 1; i <= m; ++i) count = count * (n - 1 + i) / i;
      CHECK(delta(m, ones) == count);
      const std::vector<double> halves(n, 0.5);
      CHECK(delta(m, halves) == Approx(count * std::pow(0.5, m)).epsilon(1e-15));
    }
  }
}

TEST_CASE("elementary_symmetric works for complex scalars") {
  const std::vector<std::complex<double>> a{{0.3, 0.4}, {0.3, -0.4}};
  const auto s = elementary_symmetric<std::complex<double>>(a);
  CHECK(s[1].real() == Approx(0.6));
  CHECK(std::abs(s[1].imag()) < 1e-16);
  CHECK(s[2].real() == Approx(0.25));
}
