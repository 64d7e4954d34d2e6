#include "oscdelta/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "oscdelta/hermite.hpp"

namespace oscdelta {

double m_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 0.5)) {
    throw std::domain_error("m_alpha: requires 0 < alpha < 1/2");
  }
  return 6.0 + (4.0 / 3.0) / (1.0 - 2.0 * alpha) + 1.0 / (3.0 * alpha);
}

namespace {

void check_on_boundary(int n, Complex z) {
  const double zn = 2.0 * n + 1.0;
  const double dx = std::abs(z.real() - zn);
  const double dy = std::abs(z.imag());
  const double edge = std::max(dx, dy);
  if (std::abs(edge - 0.5) > 1e-9 || dx > 0.5 + 1e-9 || dy > 0.5 + 1e-9) {
    throw std::invalid_argument("hs_norm: z must lie on the boundary of D_n");
  }
}

}  // namespace

HsNormValue hs_norm(const PointPotential& w, int n, Complex z, long long k_max) {
  if (n < 1) throw std::invalid_argument("hs_norm: requires n >= 1");
  if (k_max < 16LL * n) throw std::invalid_argument("hs_norm: k_max must be at least 16n");
  w.validate();
  check_on_boundary(n, z);

  const int big_j = static_cast<int>(w.terms.size());
  std::vector<std::vector<double>> rows;
  rows.reserve(w.terms.size());
  for (const auto& term : w.terms) {
    rows.push_back(hermite_row(static_cast<int>(k_max), term.location));
  }
  std::vector<double> inv_dist(static_cast<size_t>(k_max) + 1);
  for (long long j = 0; j <= k_max; ++j) {
    const double d = std::abs(z - Complex(2.0 * j + 1.0, 0.0));
    if (d == 0.0) throw std::invalid_argument("hs_norm: z collides with a lattice point");
    inv_dist[static_cast<size_t>(j)] = 1.0 / d;
  }
  // l^2 = sum_{a,b} c_a conj(c_b) S_ab^2 with S_ab = sum_j u^a_j u^b_j / |z - z_j|
  Complex ell2(0.0, 0.0);
  for (int a = 0; a < big_j; ++a) {
    for (int b = 0; b < big_j; ++b) {
      double s = 0.0;
      for (long long j = 0; j <= k_max; ++j) {
        s += rows[static_cast<size_t>(a)][static_cast<size_t>(j)] *
             rows[static_cast<size_t>(b)][static_cast<size_t>(j)] *
             inv_dist[static_cast<size_t>(j)];
      }
      ell2 += w.terms[static_cast<size_t>(a)].coupling *
              std::conj(w.terms[static_cast<size_t>(b)].coupling) * s * s;
    }
  }

  HsNormValue out;
  out.k_max = k_max;
  out.value = std::sqrt(std::max(0.0, ell2.real()));
  // envelope |w_jk| <= c0 ((1+j)(1+k))^{-1/4}; the discarded block is
  // {j > K or k > K}, bounded via the (2.17)-type distance lower bound.
  const double c0 = decay_constant(w, std::min<long long>(k_max, 512));
  double mu_part = 0.0;
  for (long long j = 0; j <= k_max; ++j) {
    mu_part += std::pow(1.0 + j, -0.5) * inv_dist[static_cast<size_t>(j)];
  }
  const double ratio = double(k_max) / double(k_max - n);
  const double mu_tail = (2.0 / 3.0) * ratio * 2.0 / std::sqrt(double(k_max));
  out.tail_bound = c0 * std::sqrt(mu_tail * (2.0 * mu_part + mu_tail));
  return out;
}

MuSumValue mu_sum(int n, Complex z, double alpha, long long k_max) {
  if (n < 1) throw std::invalid_argument("mu_sum: requires n >= 1");
  if (!(alpha > 0.0) || !(alpha < 0.5)) throw std::domain_error("mu_sum: bad alpha");
  check_on_boundary(n, z);
  MuSumValue out;
  for (long long j = 0; j <= k_max; ++j) {
    out.value += std::pow(1.0 + j, -2.0 * alpha) / std::abs(z - Complex(2.0 * j + 1.0, 0.0));
  }
  // integral test with |z - z_j| >= (3/2)(j - n) for the discarded range
  const double ratio = double(k_max) / double(k_max - n);
  out.tail_bound =
      (2.0 / 3.0) * ratio * std::pow(double(k_max), -2.0 * alpha) / (2.0 * alpha);
  return out;
}

ThresholdResult x_beta_solve(double t, double beta, double A) {
  if (!(t > 0.0)) throw std::domain_error("x_beta_solve: requires t > 0");
  if (!(beta > 0.0) || beta > 1.0) throw std::domain_error("x_beta_solve: requires 0 < beta <= 1");

  const auto f = [&](double x) { return t * std::log(M_E * x) / std::pow(x, beta); };
  // f increases to its maximum at X_c = e^{1/beta - 1} and decreases after;
  // the large root lives on the decreasing branch.
  const double x_crit = std::exp(1.0 / beta - 1.0);
  if (f(x_crit) < 0.5) {
    throw std::domain_error("x_beta_solve: no large root, t=" + std::to_string(t) +
                            " is below the onset t=" + std::to_string(0.5 * beta * std::exp(1.0 - beta)));
  }
  double lo = x_crit, hi = x_crit;
  while (f(hi) > 0.5) {
    hi *= 2.0;
    if (!std::isfinite(hi)) throw std::runtime_error("x_beta_solve: root bracket overflow");
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.5) lo = mid; else hi = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 8; ++i) {
    const double fx = f(x) - 0.5;
    const double dfx = t * std::pow(x, -beta - 1.0) * (1.0 - beta * std::log(M_E * x));
    if (dfx == 0.0) break;
    const double step = fx / dfx;
    if (!std::isfinite(step)) break;
    x -= step;
  }

  ThresholdResult out;
  out.t = t;
  out.beta = beta;
  out.X = x;
  out.residual = std::abs(f(x) - 0.5);
  out.upper = std::pow(2.0 / beta, 1.0 / beta) *
              std::pow(t * std::log(A * t / beta), 1.0 / beta);
  return out;
}

long long n_star(double C0, double alpha, double A) {
  if (!(C0 > 0.0)) throw std::domain_error("n_star: requires C0 > 0");
  // The condition C0 M(alpha) log(en)/n^{2 alpha} <= 1/2 is the defining
  // equation with t = C0 M(alpha); apply the closed-form root bound to it.
  const double beta = 2.0 * alpha;
  const double t = C0 * m_alpha(alpha);
  const double value = std::pow((2.0 / beta) * t * std::log(A * t / beta), 1.0 / beta);
  if (!(value < 9e18)) throw std::domain_error("n_star: threshold overflows the integer range");
  return static_cast<long long>(std::ceil(value));
}

double nonreal_bound(double gamma, NonrealCase kind, double nu, double C, double p) {
  if (nu < 0.0) throw std::invalid_argument("nonreal_bound: requires nu >= 0");
  if (!(C > 0.0)) throw std::invalid_argument("nonreal_bound: requires C > 0");
  (void)gamma;
  const double base = nu * std::log1p(nu);
  switch (kind) {
    case NonrealCase::PGreaterThan2:
      if (!(p > 2.0)) throw std::invalid_argument("nonreal_bound: case needs p > 2");
      return C * std::pow(base, 2.0 * p);
    case NonrealCase::PEquals2:
      return C * std::pow(nu * std::pow(std::log1p(nu), 2.0), 4.0);
    case NonrealCase::PLessThan2:
      if (!(p >= 1.0) || !(p < 2.0)) throw std::invalid_argument("nonreal_bound: case needs 1 <= p < 2");
      return C * std::pow(base, 3.0 / (1.0 - 1.0 / (2.0 * p)));
    case NonrealCase::Point:
      return C * std::pow(base, 6.0);
  }
  throw std::invalid_argument("nonreal_bound: unknown case");
}

double pt_count_bound(double gamma, double C) {
  if (!(C > 0.0)) throw std::invalid_argument("pt_count_bound: requires C > 0");
  const double g = std::abs(gamma);
  const double v = C * (1.0 + g) * std::log(M_E + g);
  return v * v;
}

}  // namespace oscdelta
