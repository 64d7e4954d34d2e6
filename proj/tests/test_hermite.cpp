#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oscdelta/hermite.hpp"

using namespace oscdelta;

namespace {

// Independent reference: the same recurrence in extended precision.
long double hermite_ref(int n, long double x) {
  long double hm1 = powl((long double)M_PI, -0.25L) * expl(-0.5L * x * x);
  if (n == 0) return hm1;
  long double h = sqrtl(2.0L) * x * hm1;
  for (int k = 1; k < n; ++k) {
    const long double next = x * sqrtl(2.0L / (k + 1)) * h - sqrtl((long double)k / (k + 1)) * hm1;
    hm1 = h;
    h = next;
  }
  return h;
}

}  // namespace

TEST_SUITE_BEGIN("hermite");

TEST_CASE("closed-form values at the origin") {
  const double p = std::pow(M_PI, -0.25);
  CHECK(hermite_eval(0, 0.0) == doctest::Approx(p).epsilon(1e-14));
  CHECK(hermite_eval(1, 0.0) == 0.0);
  CHECK(hermite_eval(2, 0.0) == doctest::Approx(-p / std::sqrt(2.0)).epsilon(1e-14));
  const auto row = hermite_row(2, 0.0);
  CHECK(row[0] == hermite_eval(0, 0.0));
  CHECK(row[1] == 0.0);
  CHECK(row[2] == hermite_eval(2, 0.0));
}

TEST_CASE("row matches pointwise evaluation exactly") {
  for (double x : {0.0, 0.3, 1.0, -2.5, 7.0}) {
    const auto row = hermite_row(40, x);
    for (int n = 0; n <= 40; ++n) {
      CHECK(row[n] == hermite_eval(n, x));  // same arithmetic path, 0 ulps
    }
    CHECK(hermite_row(0, 1.0)[0] == doctest::Approx(std::pow(M_PI, -0.25) * std::exp(-0.5)));
  }
  const auto sq = hermite_squared_row(40, 1.3);
  const auto row = hermite_row(40, 1.3);
  for (int n = 0; n <= 40; ++n) CHECK(sq[n] == row[n] * row[n]);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(hermite_eval(-1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(hermite_eval(3, std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(hermite_asymptotic(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(a_squared_expansion(0, 1.0), std::invalid_argument);
}

TEST_CASE("recurrence stability against extended precision") {
  for (double x : {0.25, 1.0, 3.0, 10.0, -6.5}) {
    for (int n : {5, 40, 200, 1000, 10000}) {
      const double got = hermite_eval(n, x);
      const long double ref = hermite_ref(n, (long double)x);
      const double scale = std::max(std::abs((double)ref), std::pow(double(n), -0.25) * 1e-3);
      CHECK(std::abs(got - (double)ref) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("odd parity is exact in floating point") {
  const auto plus = hermite_row(300, 1.7);
  const auto minus = hermite_row(300, -1.7);
  for (int n = 0; n <= 300; ++n) {
    CHECK(minus[n] == (n % 2 == 0 ? plus[n] : -plus[n]));
  }
}

TEST_CASE("uniform bound and k^{-1/12} decay") {
  double worst_abs = 0.0, worst_decay = 0.0;
  for (double b = 0.0; b <= 3.5; b += 0.25) {
    const auto row = hermite_row(10000, b);
    for (int k = 0; k <= 10000; ++k) {
      worst_abs = std::max(worst_abs, std::abs(row[k]));
      if (k >= 1) worst_decay = std::max(worst_decay, std::abs(row[k]) * std::pow(double(k), 1.0 / 12.0));
    }
  }
  CHECK(worst_abs <= 0.8);
  CHECK(worst_decay <= 0.7);  // observed 0.645
}

TEST_CASE("orthonormality via trapezoid quadrature") {
  const int n_max = 60;
  const double L = std::sqrt(2.0 * n_max) + 10.0;
  const double h = 0.005;
  const int m = static_cast<int>(2 * L / h);
  std::vector<std::vector<double>> rows;
  rows.reserve(m + 1);
  for (int i = 0; i <= m; ++i) {
    rows.push_back(hermite_row(n_max, -L + i * h));
  }
  double worst = 0.0;
  for (int a = 0; a <= n_max; ++a) {
    for (int b = a; b <= n_max; ++b) {
      double acc = 0.0;
      for (int i = 0; i <= m; ++i) {
        const double w = (i == 0 || i == m) ? 0.5 : 1.0;
        acc += w * rows[i][a] * rows[i][b];
      }
      acc *= h;
      const double target = (a == b) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(acc - target));
    }
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("szego approximation error decays like m^{-5/4}") {
  // calibrate C at m = 50 for b = 1, then check the whole range
  const double b = 1.0;
  const double c50 = std::abs(hermite_eval(50, b) - hermite_asymptotic(50, b)) * std::pow(50.0, 1.25);
  const double C = 2.0 * c50;
  for (int m : {50, 113, 200, 501, 1000, 2048, 5000}) {
    const double err = std::abs(hermite_eval(m, b) - hermite_asymptotic(m, b));
    CHECK(err <= C / std::pow(double(m), 1.25));
  }
  // boundedness of m^{5/4}-scaled error over a grid of b, m up to 1e4
  double worst = 0.0;
  for (double bb = 0.1; bb <= 2.0; bb += 0.1) {
    for (int m : {100, 1000, 10000}) {
      worst = std::max(worst,
                       std::abs(hermite_eval(m, bb) - hermite_asymptotic(m, bb)) * std::pow(double(m), 1.25));
    }
  }
  CHECK(worst <= 0.15);  // observed 0.083
}

TEST_CASE("szego approximation at the origin") {
  const double amp = std::pow(2.0, 0.25) / std::sqrt(M_PI);
  CHECK(std::abs(hermite_asymptotic(8, 0.0)) == doctest::Approx(amp * std::pow(8.0, -0.25)));
  CHECK(hermite_asymptotic(7, 0.0) == 0.0);
  CHECK(hermite_asymptotic(9, 0.0) == 0.0);
}

TEST_CASE("a_k^2 expansion") {
  SUBCASE("b = 0 closed forms") {
    for (int k : {1, 2, 7, 10}) {
      const auto amp = a_squared_expansion(k, 0.0);
      const double expect = (1.0 / M_PI) / std::sqrt(2.0 * k) * (1.0 + ((k % 2 == 0) ? 1.0 : -1.0));
      CHECK(amp.leading == doctest::Approx(expect).epsilon(1e-14));
      CHECK(amp.correction == 0.0);
      if (k % 2 == 1) CHECK(amp.leading == 0.0);
    }
  }
  SUBCASE("two-term error decays like k^{-3/2}") {
    const double b = 1.0;
    const auto err = [&](int k) {
      const auto amp = a_squared_expansion(k, b);
      const double exact = hermite_eval(k, b) * hermite_eval(k, b);
      return std::abs(exact - amp.leading - amp.correction);
    };
    const double C = 2.0 * err(50) * std::pow(50.0, 1.5);
    for (int k : {50, 100, 400, 1600}) {
      CHECK(err(k) <= C / std::pow(double(k), 1.5));
    }
  }
  SUBCASE("leading term is nonnegative") {
    for (int k = 1; k <= 500; ++k) {
      CHECK(a_squared_expansion(k, 0.77).leading >= 0.0);
    }
  }
}

TEST_SUITE_END();
