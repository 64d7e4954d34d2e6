#pragma once

#include "oscdelta/potential.hpp"

namespace oscdelta {

/// Partial lattice sum with an integral-test tail estimate.
struct TailedValue {
  Complex value{0.0, 0.0};
  double tail_bound = 0.0;
  long long k_max = 0;
};

/// T_1(n) = w_nn.
Complex t1(int n, const PointPotential& w);

/// T_2(n) = sum_{k != n} w_nk w_kn / (2(n-k)), truncated at k_max.
TailedValue t2(int n, const PointPotential& w, long long k_max);

/// T_3(n) = sum_{k,l != n} w_nk w_kl w_ln / (4(n-k)(n-l))
///          - w_nn sum_{m != n} w_nm w_mn / (4(n-m)^2).
/// The second term carries a minus sign: the order-2 pole at z_n contributes
/// the derivative of the remaining factor, not zero.
TailedValue t3(int n, const PointPotential& w, long long k_max);

/// Even/odd cross term of the second-order trace for w = t v^e + s v^o;
/// every addend contains a structurally zero factor.
Complex parity_cross_term(int n, const PointPotential& even_w, const PointPotential& odd_w,
                          long long k_max);

struct ContourSpec {
  int n = 0;
  int truncation = 0;       // N >= 4n
  int points_per_side = 64;
  double tol = 1e-9;        // stop when a grid doubling changes the value less than this
  int max_doublings = 14;
};

/// (1/2pi i) . tr oint_{dD_n} (z - z_n) (R0 W)^j R0 dz on the N-truncated
/// lattice, by offset trapezoid quadrature side by side with grid doubling.
/// The trace at each node is evaluated through the rank-J factorization of W.
Complex tj_contour(int n, const PointPotential& w, int j, const ContourSpec& spec);

/// Same quadrature, but the trace is formed by literal dense matrix products.
/// Kept as an independent cross-check of the fast path (test use; O(N^3) per node).
Complex tj_contour_dense(int n, const PointPotential& w, int j, const ContourSpec& spec);

struct TraceSeries {
  int n = 0;
  Complex t1{0.0, 0.0};
  Complex t2{0.0, 0.0};
  Complex t3{0.0, 0.0};
  double remainder_bound = 0.0;  // 2 (C0 M(alpha) log(en) / n^{2 alpha})^{q+1}
  Complex lambda_estimate{0.0, 0.0};
  double tail_t2 = 0.0;
  double tail_t3 = 0.0;
  long long n_star_threshold = 0;
  bool below_threshold = false;  // n < N*(C0, alpha); estimate reported anyway
};

/// lambda_n ~ (2n+1) + sum_{j<=q} T_j(n) with the remainder bound of the
/// Neumann-Riesz tail. q in {1,2,3}; k_max < 0 selects max(16n, 4096).
TraceSeries lambda_series(int n, const PointPotential& w, int q, double alpha, double C0,
                          long long k_max = -1);

}  // namespace oscdelta
