#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace oscdelta {

using Complex = std::complex<double>;

/// One point interaction c * delta(x - b).
struct DeltaTerm {
  Complex coupling;
  double location = 0.0;
};

/// w(x) = sum_j c_j delta(x - b_j), finite list.
struct PointPotential {
  std::vector<DeltaTerm> terms;

  PointPotential() = default;
  explicit PointPotential(std::vector<DeltaTerm> t) : terms(std::move(t)) { validate(); }

  /// s [delta(x-b) - delta(x+b)]
  static PointPotential odd_pair(Complex s, double b);
  /// t [delta(x-b) + delta(x+b)]
  static PointPotential even_pair(Complex t, double b);
  /// t v^e + s v^o  =  (t+s) delta(x-b) + (t-s) delta(x+b)
  static PointPotential two_point(Complex t, Complex s, double b);
  /// c delta(x-b)
  static PointPotential single(Complex c, double b);
  /// 2t delta(x)
  static PointPotential centered(Complex t);

  /// nu = sum |c_j|
  double total_mass() const;
  bool real_couplings() const;
  void validate() const;
};

/// t v^e + s v^o with b > 0; converts losslessly to the two-delta form.
struct TwoPointForm {
  Complex t;
  Complex s;
  double b = 1.0;
  PointPotential to_potential() const { return PointPotential::two_point(t, s, b); }
};

/// w_jk = sum_m c_m h_j(b_m) h_k(b_m); symmetric in (j, k).
Complex matrix_element(const PointPotential& w, int j, int k);

/// N x N Hermite-basis truncation of L = L0 + W: diagonal 2k+1 plus w_jk.
struct TruncatedOperator {
  Eigen::MatrixXcd entries;
  PointPotential potential;
  int dim() const { return static_cast<int>(entries.rows()); }
};

TruncatedOperator build_truncated(const PointPotential& w, int N);

/// Empirical decay constant C0 = max_{j,k <= scan_limit} |w_jk| (1+j)^{1/4} (1+k)^{1/4},
/// the constant of the |w_jk| <= C0 / ((1+j)(1+k))^{1/4} envelope.
double decay_constant(const PointPotential& w, int scan_limit = 512);

}  // namespace oscdelta
