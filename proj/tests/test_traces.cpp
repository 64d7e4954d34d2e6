#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oscdelta/asymptotics.hpp"
#include "oscdelta/hermite.hpp"
#include "oscdelta/ladder.hpp"
#include "oscdelta/traces.hpp"

using namespace oscdelta;

TEST_SUITE_BEGIN("traces");

TEST_CASE("t1 closed forms") {
  const PointPotential ve = PointPotential::even_pair(1.0, 1.0);
  const double a3 = hermite_eval(3, 1.0);
  CHECK(std::abs(t1(3, ve) - 2.0 * a3 * a3) <= 1e-15);
  CHECK(t1(4, PointPotential::odd_pair(1.0, 0.8)) == Complex(0.0, 0.0));
  CHECK(t1(5, PointPotential::centered(1.0)) == Complex(0.0, 0.0));  // odd n, 2 delta(x)
}

TEST_CASE("t2 equals 2 a_n^2 sigma(n) for the pair potentials") {
  const long long kmax = 4096;
  for (int n : {10, 25, 60}) {
    const double an2 = hermite_eval(n, 1.0) * hermite_eval(n, 1.0);
    const double st = aux_sum(AuxSumKind::SigmaTilde, n, 1.0, kmax).value;
    const double sp = aux_sum(AuxSumKind::SigmaPrime, n, 1.0, kmax).value;
    const Complex odd = t2(n, PointPotential::odd_pair(1.0, 1.0), kmax).value;
    const Complex even = t2(n, PointPotential::even_pair(1.0, 1.0), kmax).value;
    CHECK(std::abs(odd - 2.0 * an2 * st) <= 1e-12 * std::abs(odd));
    CHECK(std::abs(even - 2.0 * an2 * sp) <= 1e-12 * std::max(std::abs(even), 1e-6));
  }
}

TEST_CASE("mixed potential splits bilinearly with a vanishing cross term") {
  const Complex t = 0.5, s = 0.25;
  const PointPotential mixed = PointPotential::two_point(t, s, 1.0);
  const PointPotential ve = PointPotential::even_pair(1.0, 1.0);
  const PointPotential vo = PointPotential::odd_pair(1.0, 1.0);
  for (int n : {8, 21}) {
    const Complex whole = t2(n, mixed, 2048).value;
    const Complex split = t * t * t2(n, ve, 2048).value + s * s * t2(n, vo, 2048).value;
    CHECK(std::abs(whole - split) <= 1e-13);
    CHECK(parity_cross_term(n, ve, vo, 2048) == Complex(0.0, 0.0));
  }
}

TEST_CASE("t3 vanishes identically for odd potentials") {
  const PointPotential vo = PointPotential::odd_pair(1.0, 1.0);
  for (int n : {5, 12, 33}) {
    CHECK(t3(n, vo, 1024).value == Complex(0.0, 0.0));
  }
}

TEST_CASE("t3 for the even pair: general residue sum vs sigma'/tau' specialization") {
  const PointPotential ve = PointPotential::even_pair(1.0, 1.0);
  const long long kmax = 4096;
  for (int n : {10, 40}) {
    const double an2 = hermite_eval(n, 1.0) * hermite_eval(n, 1.0);
    const double sp = aux_sum(AuxSumKind::SigmaPrime, n, 1.0, kmax).value;
    const double tp = aux_sum(AuxSumKind::TauPrime, n, 1.0, kmax).value;
    // order-2 pole at z_n flips the tau' term sign relative to eq-as-printed
    const Complex special = 2.0 * an2 * (sp * sp - an2 * tp);
    const Complex general = t3(n, ve, kmax).value;
    CHECK(std::abs(general - special) <= 1e-10 * std::max(1.0, std::abs(general)));
  }
}

TEST_CASE("realness of even traces for imaginary odd couplings") {
  const PointPotential w = PointPotential::odd_pair(Complex(0.0, 1.0), 1.0);
  for (int n : {10, 50}) {
    const Complex v = t2(n, w, 2048).value;
    CHECK(v.imag() == 0.0);
    CHECK(v.real() != 0.0);
  }
}

TEST_CASE("coupling scaling T_j(n; tw) = t^j T_j(n; w)") {
  const PointPotential w = PointPotential::even_pair(1.0, 1.0);
  const PointPotential w3 = PointPotential::even_pair(3.0, 1.0);
  for (int n : {7, 20}) {
    CHECK(std::abs(t1(n, w3) - 3.0 * t1(n, w)) <= 1e-12);
    CHECK(std::abs(t2(n, w3, 1024).value - 9.0 * t2(n, w, 1024).value) <= 1e-12);
    CHECK(std::abs(t3(n, w3, 1024).value - 27.0 * t3(n, w, 1024).value) <= 1e-12);
  }
}

TEST_CASE("contour oracle agrees with the residue sums on the same truncation") {
  const int N = 320;
  ContourSpec spec;
  spec.truncation = N;
  for (int n : {5, 10}) {
    spec.n = n;
    for (const PointPotential& w :
         {PointPotential::odd_pair(1.0, 1.0), PointPotential::even_pair(1.0, 1.0),
          PointPotential::single(1.0, 1.0)}) {
      CHECK(std::abs(tj_contour(n, w, 1, spec) - t1(n, w)) <= 1e-9);
      CHECK(std::abs(tj_contour(n, w, 2, spec) - t2(n, w, N - 1).value) <= 1e-9);
      CHECK(std::abs(tj_contour(n, w, 3, spec) - t3(n, w, N - 1).value) <= 1e-9);
    }
  }
}

TEST_CASE("fast low-rank contour trace equals the dense-matrix evaluation") {
  ContourSpec spec;
  spec.n = 5;
  spec.truncation = 48;
  spec.points_per_side = 32;
  const PointPotential w = PointPotential::two_point(Complex(0.4, 0.1), 0.7, 1.0);
  for (int j : {1, 2, 3, 4}) {
    const Complex fast = tj_contour(5, w, j, spec);
    const Complex dense = tj_contour_dense(5, w, j, spec);
    CHECK(std::abs(fast - dense) <= 1e-11 * std::max(1.0, std::abs(dense)));
  }
}

TEST_CASE("t4 through the contour only: bounded by the Neumann tail scale") {
  ContourSpec spec;
  spec.n = 20;
  spec.truncation = 320;
  const Complex t4 = tj_contour(20, PointPotential::even_pair(1.0, 1.0), 4, spec);
  CHECK(std::abs(t4) < 1e-3);  // fourth order is far below t2 ~ 1e-2 at n=20
}

TEST_CASE("lambda_series") {
  SUBCASE("zero potential") {
    const auto series = lambda_series(10, PointPotential::single(0.0, 1.0), 3, 0.25, 0.0);
    CHECK(series.lambda_estimate == Complex(21.0, 0.0));
    CHECK(series.remainder_bound == 0.0);
  }
  SUBCASE("matches the eigensolver within remainder + truncation slack") {
    const PointPotential w = PointPotential::odd_pair(0.5, 1.0);
    const double c0 = decay_constant(w, 256);
    const auto spec = eigenvalues(build_truncated(w, 512));
    const auto lad = ladder_match(spec, 30, 80);
    for (int n : {30, 50, 80}) {
      REQUIRE(lad.at(n).status == MatchStatus::Matched);
      const auto series = lambda_series(n, w, 3, 0.25, c0);
      CHECK(series.below_threshold);  // desk-scale n sits below N*
      const double gap = std::abs(series.lambda_estimate - lad.at(n).lambda);
      CHECK(gap <= series.remainder_bound + 1e-4);
    }
  }
  SUBCASE("invariant lambda = (2n+1) + t1 + t2 + t3") {
    const PointPotential w = PointPotential::even_pair(0.3, 1.0);
    const auto series = lambda_series(12, w, 3, 0.25, 1.0);
    const Complex sum = Complex(25.0, 0.0) + series.t1 + series.t2 + series.t3;
    CHECK(series.lambda_estimate == sum);
  }
  SUBCASE("q validation") {
    CHECK_THROWS_AS(lambda_series(10, PointPotential::single(1.0, 1.0), 4, 0.25, 1.0),
                    std::invalid_argument);
  }
}

TEST_CASE("cutoff validation") {
  const PointPotential w = PointPotential::single(1.0, 1.0);
  CHECK_THROWS_AS(t2(100, w, 128), std::invalid_argument);
  CHECK_THROWS_AS(t3(100, w, 128), std::invalid_argument);
  ContourSpec spec;
  spec.n = 100;
  spec.truncation = 128;
  CHECK_THROWS_AS(tj_contour(100, w, 2, spec), std::invalid_argument);
  CHECK_THROWS_AS(tj_contour(10, w, 5, ContourSpec{10, 320}), std::invalid_argument);
}

TEST_SUITE_END();
