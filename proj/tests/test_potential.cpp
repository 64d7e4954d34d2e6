#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oscdelta/hermite.hpp"
#include "oscdelta/potential.hpp"

using namespace oscdelta;

TEST_SUITE_BEGIN("potential");

TEST_CASE("two-point form converts losslessly") {
  const Complex t(0.5, 0.0), s(0.0, 0.25);
  TwoPointForm form{t, s, 1.5};
  const PointPotential w = form.to_potential();
  REQUIRE(w.terms.size() == 2);
  CHECK(w.terms[0].coupling == t + s);
  CHECK(w.terms[0].location == 1.5);
  CHECK(w.terms[1].coupling == t - s);
  CHECK(w.terms[1].location == -1.5);
}

TEST_CASE("matrix elements of the odd pair") {
  const PointPotential vo = PointPotential::odd_pair(1.0, 1.0);
  CHECK(matrix_element(vo, 0, 2) == Complex(0.0, 0.0));  // j+k even: exact zero
  const double a0 = hermite_eval(0, 1.0), a1 = hermite_eval(1, 1.0);
  CHECK(std::abs(matrix_element(vo, 0, 1) - 2.0 * a0 * a1) <= 1e-15);
  CHECK(matrix_element(vo, 1, 0) == matrix_element(vo, 0, 1));
}

TEST_CASE("delta at the origin kills odd rows") {
  const PointPotential d0 = PointPotential::single(1.0, 0.0);
  CHECK(matrix_element(d0, 1, 1) == Complex(0.0, 0.0));
  CHECK(matrix_element(d0, 3, 7) == Complex(0.0, 0.0));
}

TEST_CASE("build_truncated structure") {
  SUBCASE("zero potential is the bare ladder") {
    const auto op = build_truncated(PointPotential::single(0.0, 0.3), 4);
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) {
        CHECK(op.entries(j, k) == Complex(j == k ? 2.0 * j + 1.0 : 0.0, 0.0));
      }
    }
  }
  SUBCASE("odd potential has checkerboard support") {
    const auto op = build_truncated(PointPotential::odd_pair(1.0, 1.0), 6);
    for (int j = 0; j < 6; ++j) {
      for (int k = 0; k < 6; ++k) {
        if ((j + k) % 2 == 0 && j != k) CHECK(op.entries(j, k) == Complex(0.0, 0.0));
        if ((j + k) % 2 == 0 && j == k) CHECK(op.entries(j, k) == Complex(2.0 * j + 1.0, 0.0));
      }
    }
  }
  SUBCASE("even potential has the complementary checkerboard") {
    const auto op = build_truncated(PointPotential::even_pair(1.0, 1.0), 6);
    for (int j = 0; j < 6; ++j) {
      for (int k = 0; k < 6; ++k) {
        if ((j + k) % 2 == 1) CHECK(op.entries(j, k) == Complex(0.0, 0.0));
      }
    }
  }
  SUBCASE("matches matrix_element entrywise") {
    const PointPotential w = PointPotential::two_point(Complex(0.3, 0.1), 0.7, 0.9);
    const auto op = build_truncated(w, 8);
    for (int j = 0; j < 8; ++j) {
      for (int k = 0; k < 8; ++k) {
        const Complex expect = matrix_element(w, j, k) + (j == k ? Complex(2.0 * j + 1.0) : 0.0);
        CHECK(std::abs(op.entries(j, k) - expect) <= 1e-13);
      }
    }
  }
}

TEST_CASE("symmetry of the perturbation part") {
  SUBCASE("real couplings: real symmetric") {
    const auto op = build_truncated(PointPotential::even_pair(0.7, 1.1), 32);
    CHECK((op.entries - op.entries.transpose()).norm() == 0.0);
    CHECK(op.entries.imag().norm() == 0.0);
  }
  SUBCASE("imaginary couplings: complex symmetric, not Hermitian") {
    const auto op = build_truncated(PointPotential::odd_pair(Complex(0.0, 0.5), 1.0), 32);
    CHECK((op.entries - op.entries.transpose()).norm() == 0.0);
    CHECK((op.entries - op.entries.adjoint()).norm() > 0.1);
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(build_truncated(PointPotential::single(1.0, 1.0), 0), std::invalid_argument);
  CHECK_THROWS_AS(PointPotential::single(std::nan(""), 1.0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(PointPotential{}.validate(), std::invalid_argument);
  CHECK_THROWS_AS(matrix_element(PointPotential::single(1.0, 0.0), -1, 2), std::invalid_argument);
}

TEST_CASE("parity structural zeros for generic odd/even lists") {
  // any odd list: (c, b) paired with (-c, -b)
  const PointPotential odd({{0.3, 0.4}, {-0.3, -0.4}, {Complex(0.0, 1.2), 2.0}, {Complex(0.0, -1.2), -2.0}});
  const PointPotential even({{0.3, 0.4}, {0.3, -0.4}, {1.1, 0.0}});
  for (int j = 0; j < 12; ++j) {
    for (int k = 0; k < 12; ++k) {
      if ((j + k) % 2 == 0) CHECK(matrix_element(odd, j, k) == Complex(0.0, 0.0));
      if ((j + k) % 2 == 1) CHECK(matrix_element(even, j, k) == Complex(0.0, 0.0));
    }
  }
}

TEST_CASE("decay constant") {
  SUBCASE("zero potential") {
    CHECK(decay_constant(PointPotential::single(0.0, 1.0)) == 0.0);
  }
  SUBCASE("scaling is exact") {
    const PointPotential w = PointPotential::odd_pair(1.0, 1.0);
    const PointPotential w2 = PointPotential::odd_pair(2.0, 1.0);
    CHECK(decay_constant(w2, 128) == doctest::Approx(2.0 * decay_constant(w, 128)).epsilon(1e-14));
  }
  SUBCASE("scan doubling is stable") {
    const PointPotential w = PointPotential::odd_pair(1.0, 1.0);
    const double c256 = decay_constant(w, 256);
    const double c512 = decay_constant(w, 512);
    CHECK(std::abs(c512 - c256) <= 0.05 * c256);
    // sup-norm product bound: |w_jk| (1+j)^{1/4}(1+k)^{1/4} <= 2 max_k |h_k(b)|^2 (1+k)^{1/2}
    double env = 0.0;
    const auto row = hermite_row(512, 1.0);
    for (int k = 0; k <= 512; ++k) {
      env = std::max(env, row[k] * row[k] * std::sqrt(1.0 + k));
    }
    CHECK(c512 <= 2.0 * env);
  }
  SUBCASE("decay bound over the lattice") {
    const PointPotential w = PointPotential::two_point(1.0, 0.5, 1.0);
    const double c0 = decay_constant(w, 1000);
    CHECK(c0 < 10.0);  // bounded: |w_jk| (1+j)^{1/4} (1+k)^{1/4} stays O(1)
  }
}

TEST_CASE("total mass") {
  const PointPotential w = PointPotential::two_point(Complex(0.0, 1.0), 1.0, 1.0);
  CHECK(w.total_mass() == doctest::Approx(2.0 * std::sqrt(2.0)));
}

TEST_SUITE_END();
