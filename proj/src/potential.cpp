#include "oscdelta/potential.hpp"

#include <cmath>
#include <stdexcept>

#include "oscdelta/hermite.hpp"

namespace oscdelta {

PointPotential PointPotential::odd_pair(Complex s, double b) {
  return PointPotential({{s, b}, {-s, -b}});
}

PointPotential PointPotential::even_pair(Complex t, double b) {
  return PointPotential({{t, b}, {t, -b}});
}

PointPotential PointPotential::two_point(Complex t, Complex s, double b) {
  return PointPotential({{t + s, b}, {t - s, -b}});
}

PointPotential PointPotential::single(Complex c, double b) {
  return PointPotential({{c, b}});
}

PointPotential PointPotential::centered(Complex t) {
  return PointPotential({{2.0 * t, 0.0}});
}

double PointPotential::total_mass() const {
  double nu = 0.0;
  for (const auto& term : terms) nu += std::abs(term.coupling);
  return nu;
}

bool PointPotential::real_couplings() const {
  for (const auto& term : terms) {
    if (term.coupling.imag() != 0.0) return false;
  }
  return true;
}

void PointPotential::validate() const {
  if (terms.empty()) {
    throw std::invalid_argument("PointPotential: empty term list");
  }
  for (const auto& term : terms) {
    if (!std::isfinite(term.location)) {
      throw std::invalid_argument("PointPotential: non-finite location");
    }
    if (!std::isfinite(term.coupling.real()) || !std::isfinite(term.coupling.imag())) {
      throw std::invalid_argument("PointPotential: non-finite coupling");
    }
  }
}

Complex matrix_element(const PointPotential& w, int j, int k) {
  if (j < 0 || k < 0) {
    throw std::invalid_argument("matrix_element: negative index");
  }
  w.validate();
  Complex sum = 0.0;
  const int top = std::max(j, k);
  for (const auto& term : w.terms) {
    const auto row = hermite_row(top, term.location);
    sum += term.coupling * (row[j] * row[k]);  // symmetric in (j,k) to the last ulp
  }
  return sum;
}

TruncatedOperator build_truncated(const PointPotential& w, int N) {
  if (N < 1) {
    throw std::invalid_argument("build_truncated: requires N >= 1");
  }
  w.validate();
  TruncatedOperator op;
  op.potential = w;
  op.entries = Eigen::MatrixXcd::Zero(N, N);
  for (int k = 0; k < N; ++k) op.entries(k, k) = 2.0 * k + 1.0;
  for (const auto& term : w.terms) {
    const auto row = hermite_row(N - 1, term.location);
    for (int j = 0; j < N; ++j) {
      for (int k = j; k < N; ++k) {
        const Complex v = term.coupling * (row[j] * row[k]);
        op.entries(j, k) += v;
        if (k != j) op.entries(k, j) += v;
      }
    }
  }
  return op;
}

double decay_constant(const PointPotential& w, int scan_limit) {
  if (scan_limit < 0) {
    throw std::invalid_argument("decay_constant: negative scan limit");
  }
  w.validate();
  std::vector<std::vector<double>> rows;
  rows.reserve(w.terms.size());
  for (const auto& term : w.terms) rows.push_back(hermite_row(scan_limit, term.location));
  std::vector<double> weight(static_cast<size_t>(scan_limit) + 1);
  for (int j = 0; j <= scan_limit; ++j) weight[j] = std::pow(1.0 + j, 0.25);
  double c0 = 0.0;
  for (int j = 0; j <= scan_limit; ++j) {
    for (int k = j; k <= scan_limit; ++k) {
      Complex wjk = 0.0;
      for (size_t m = 0; m < w.terms.size(); ++m) {
        wjk += w.terms[m].coupling * rows[m][j] * rows[m][k];
      }
      c0 = std::max(c0, std::abs(wjk) * weight[j] * weight[k]);
    }
  }
  return c0;
}

}  // namespace oscdelta
