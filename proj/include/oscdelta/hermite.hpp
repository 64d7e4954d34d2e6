#pragma once

#include <vector>

namespace oscdelta {

/// Normalized Hermite function h_n(x) = (pi^{1/2} 2^n n!)^{-1/2} e^{-x^2/2} H_n(x),
/// with H_n the classical physicists' polynomials (H_0 = 1, H_1 = 2x).
///
/// Evaluated by the normalized three-term recurrence
///   h_{k+1} = x sqrt(2/(k+1)) h_k - sqrt(k/(k+1)) h_{k-1}
/// seeded with h_0 = pi^{-1/4} e^{-x^2/2}, so H_n and the Gaussian never
/// appear separately (H_n alone overflows double near n ~ 150).
double hermite_eval(int n, double x);

/// [h_0(x), ..., h_{n_max}(x)]; elementwise identical to hermite_eval.
std::vector<double> hermite_row(int n_max, double x);

/// h_k(b)^2 for k = 0..k_max. Bulk form used by the lattice sums.
std::vector<double> hermite_squared_row(long long k_max, double b);

/// Two-term Szego (8.22.8) approximation of h_m(x), m >= 1:
///   (2^{1/4}/pi^{1/2}) m^{-1/4} [cos(x sqrt(2m+1) - m pi/2)
///       + (x^3/6) (2m+1)^{-1/2} sin(x sqrt(2m+1) - m pi/2)].
double hermite_asymptotic(int m, double x);

/// Expansion of a_k^2 = h_k(b)^2 through order 1/k.
struct AsymptoticAmplitude {
  int k = 0;
  double b = 0.0;
  /// (1/pi)(1/sqrt(2k)) [1 + (-1)^k cos(2b sqrt(2k))]; nonnegative.
  double leading = 0.0;
  /// ((-1)^{k+1}/(2 pi k)) b (1 - b^2/3) sin(2b sqrt(2k)).
  double correction = 0.0;
};

AsymptoticAmplitude a_squared_expansion(int k, double b);

}  // namespace oscdelta
