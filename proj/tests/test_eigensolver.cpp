#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <random>

#include "oscdelta/eigensolver.hpp"

using namespace oscdelta;

namespace {

struct EigenBackend : SpectrumBackend {
  Eigen::VectorXcd eigvals(const Eigen::MatrixXcd& a) const override {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a, false);
    Eigen::VectorXcd ev = es.eigenvalues();
    std::sort(ev.data(), ev.data() + ev.size(), [](const Complex& x, const Complex& y) {
      if (x.real() != y.real()) return x.real() < y.real();
      return x.imag() < y.imag();
    });
    return ev;
  }
};

Eigen::MatrixXcd random_complex(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist;
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Complex(dist(rng), dist(rng));
  return a;
}

}  // namespace

TEST_SUITE_BEGIN("eigensolver");

TEST_CASE("diagonal matrix is exact") {
  const auto op = build_truncated(PointPotential::single(0.0, 0.0), 8);
  const SpectrumResult spec = eigenvalues(op);
  REQUIRE(spec.eigenvalues.size() == 8);
  for (int k = 0; k < 8; ++k) {
    CHECK(spec.eigenvalues[k] == Complex(2.0 * k + 1.0, 0.0));
  }
}

TEST_CASE("agrees with an external backend on random matrices") {
  EigenBackend backend;
  for (unsigned seed : {1u, 2u, 3u}) {
    const Eigen::MatrixXcd a = random_complex(60, seed);
    TruncatedOperator op;
    op.entries = a;
    op.potential = PointPotential::single(1.0, 0.0);
    const Eigen::VectorXcd mine = eigenvalues(op).eigenvalues;
    const Eigen::VectorXcd ref = eigenvalues(op, &backend).eigenvalues;
    REQUIRE(mine.size() == ref.size());
    double worst = 0.0;
    for (int i = 0; i < mine.size(); ++i) worst = std::max(worst, std::abs(mine[i] - ref[i]));
    CHECK(worst <= 1e-10 * a.norm());
  }
}

TEST_CASE("trace preservation") {
  for (unsigned seed : {7u, 8u}) {
    const Eigen::MatrixXcd a = random_complex(80, seed);
    const Eigen::VectorXcd ev = qr_eigenvalues(a);
    Complex sum = 0.0;
    for (int i = 0; i < ev.size(); ++i) sum += ev[i];
    CHECK(std::abs(sum - a.trace()) <= 1e-8 * std::abs(a.trace()));
  }
}

TEST_CASE("real symmetric perturbation keeps the spectrum real") {
  const auto op = build_truncated(PointPotential::odd_pair(0.5, 1.0), 256);
  const SpectrumResult spec = eigenvalues(op);
  for (int i = 0; i < spec.eigenvalues.size(); ++i) {
    CHECK(std::abs(spec.eigenvalues[i].imag()) <= 1e-8);
  }
}

TEST_CASE("small PT coupling keeps matched eigenvalues real") {
  const auto op = build_truncated(PointPotential::odd_pair(Complex(0.0, 0.1), 1.0), 512);
  const SpectrumResult spec = eigenvalues(op);
  for (int i = 0; i < spec.eigenvalues.size(); ++i) {
    if (spec.eigenvalues[i].real() < 512.0) {  // away from the truncation edge
      CHECK(std::abs(spec.eigenvalues[i].imag()) <= 1e-8);
    }
  }
}

TEST_CASE("conjugate symmetry of the PT spectrum") {
  // i w_jk is purely imaginary with checkerboard support: spectrum is
  // invariant under conjugation; for the real-similar matrix this is exact.
  const auto op = build_truncated(PointPotential::odd_pair(Complex(0.0, 4.0), 1.0), 256);
  const SpectrumResult spec = eigenvalues(op);
  std::vector<Complex> evs(spec.eigenvalues.data(), spec.eigenvalues.data() + spec.eigenvalues.size());
  double worst = 0.0;
  for (const Complex& z : evs) {
    double best = 1e300;
    for (const Complex& y : evs) best = std::min(best, std::abs(std::conj(z) - y));
    worst = std::max(worst, best);
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("conjugate pairing is exact for real inputs") {
  // companion-type real matrix with genuinely complex spectrum
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(12, 12);
  std::mt19937 rng(17);
  std::normal_distribution<double> dist;
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) a(i, j) = dist(rng);
  TruncatedOperator op;
  op.entries = a;
  op.potential = PointPotential::single(1.0, 0.0);
  const Eigen::VectorXcd ev = eigenvalues(op).eigenvalues;
  for (int i = 0; i < ev.size(); ++i) {
    if (ev[i].imag() == 0.0) continue;
    bool found = false;
    for (int j = 0; j < ev.size(); ++j) {
      if (ev[j] == std::conj(ev[i])) found = true;  // exact, not approximate
    }
    CHECK(found);
  }
}

TEST_CASE("determinism") {
  const Eigen::MatrixXcd a = random_complex(40, 5u);
  const Eigen::VectorXcd e1 = qr_eigenvalues(a);
  const Eigen::VectorXcd e2 = qr_eigenvalues(a);
  for (int i = 0; i < e1.size(); ++i) CHECK(e1[i] == e2[i]);
}

TEST_CASE("input validation") {
  Eigen::MatrixXcd empty;
  CHECK_THROWS_AS(qr_eigenvalues(empty), std::invalid_argument);
  Eigen::MatrixXcd rect = Eigen::MatrixXcd::Zero(2, 3);
  CHECK_THROWS_AS(qr_eigenvalues(rect), std::invalid_argument);
}

TEST_SUITE_END();
