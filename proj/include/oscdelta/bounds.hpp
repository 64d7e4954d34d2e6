#pragma once

#include "oscdelta/potential.hpp"

namespace oscdelta {

/// M(alpha) = 6 + (4/3)/(1 - 2 alpha) + 1/(3 alpha), 0 < alpha < 1/2.
double m_alpha(double alpha);

struct HsNormValue {
  double value = 0.0;       // truncated Hilbert-Schmidt norm of KWK
  double tail_bound = 0.0;  // envelope bound on the discarded (j,k) block
  long long k_max = 0;
};

/// ||KWK||_HS at z on the boundary of D_n:
///   l^2 = sum_{j,k} |w_jk|^2 / (|z - z_j| |z - z_k|), principal-branch K.
HsNormValue hs_norm(const PointPotential& w, int n, Complex z, long long k_max);

/// mu(alpha) = sum_j (1+j)^{-2 alpha} / |z - z_j|, truncated plus tail bound.
struct MuSumValue {
  double value = 0.0;
  double tail_bound = 0.0;
};
MuSumValue mu_sum(int n, Complex z, double alpha, long long k_max);

struct ThresholdResult {
  double t = 0.0;
  double beta = 0.0;
  double X = 0.0;         // large root of t log(eX) / X^beta = 1/2
  double upper = 0.0;     // closed-form bound (2/beta)^{1/beta} (t log(A t / beta))^{1/beta}
  double residual = 0.0;  // |t log(eX)/X^beta - 1/2| at the returned root
};

/// Large root of t log(eX)/X^beta = 1/2 by bisection plus Newton polish.
/// Throws std::domain_error when t is below the onset (no large root).
/// A is the calibrated absolute constant of the closed-form bound.
ThresholdResult x_beta_solve(double t, double beta, double A = 128.0);

/// Series threshold: smallest level granted by the closed-form bound with
/// T = 2 C0 M(alpha), beta = 2 alpha. The condition
/// C0 M(alpha) log(en)/n^{2 alpha} <= 1/2 holds for n >= n_star.
long long n_star(double C0, double alpha, double A = 128.0);

enum class NonrealCase { PGreaterThan2, PEquals2, PLessThan2, Point };

/// Count ceilings for non-real eigenvalues of L0 + i w, w real odd.
/// C (and the Hoelder exponent p where applicable) are calibration inputs;
/// the paper leaves the absolute constants open.
double nonreal_bound(double gamma, NonrealCase kind, double nu, double C, double p = 3.0);

/// PT-specific ceiling (C (1+|gamma|) log(e+|gamma|))^2.
double pt_count_bound(double gamma, double C);

}  // namespace oscdelta
