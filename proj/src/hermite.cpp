#include "oscdelta/hermite.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace oscdelta {

namespace {

double pi_quarter_inv() {
  static const double v = std::pow(M_PI, -0.25);
  return v;
}

void check_eval_args(long long n, double x) {
  if (n < 0) {
    throw std::invalid_argument("hermite: negative index n=" + std::to_string(n));
  }
  if (!std::isfinite(x)) {
    throw std::invalid_argument("hermite: non-finite argument x");
  }
}

}  // namespace

double hermite_eval(int n, double x) {
  check_eval_args(n, x);
  double hm1 = pi_quarter_inv() * std::exp(-0.5 * x * x);
  if (n == 0) return hm1;
  double h = std::sqrt(2.0) * x * hm1;
  for (int k = 1; k < n; ++k) {
    const double next =
        x * std::sqrt(2.0 / (k + 1)) * h - std::sqrt(k / (k + 1.0)) * hm1;
    hm1 = h;
    h = next;
  }
  return h;
}

std::vector<double> hermite_row(int n_max, double x) {
  check_eval_args(n_max, x);
  std::vector<double> row(static_cast<size_t>(n_max) + 1);
  row[0] = pi_quarter_inv() * std::exp(-0.5 * x * x);
  if (n_max >= 1) row[1] = std::sqrt(2.0) * x * row[0];
  for (int k = 1; k < n_max; ++k) {
    row[k + 1] = x * std::sqrt(2.0 / (k + 1)) * row[k] -
                 std::sqrt(k / (k + 1.0)) * row[k - 1];
  }
  return row;
}

std::vector<double> hermite_squared_row(long long k_max, double b) {
  check_eval_args(k_max, b);
  std::vector<double> sq(static_cast<size_t>(k_max) + 1);
  double hm1 = pi_quarter_inv() * std::exp(-0.5 * b * b);
  sq[0] = hm1 * hm1;
  if (k_max == 0) return sq;
  double h = std::sqrt(2.0) * b * hm1;
  sq[1] = h * h;
  for (long long k = 1; k < k_max; ++k) {
    const double next = b * std::sqrt(2.0 / double(k + 1)) * h -
                        std::sqrt(double(k) / double(k + 1)) * hm1;
    hm1 = h;
    h = next;
    sq[k + 1] = h * h;
  }
  return sq;
}

double hermite_asymptotic(int m, double x) {
  if (m < 1) {
    throw std::invalid_argument("hermite_asymptotic: requires m >= 1");
  }
  if (!std::isfinite(x)) {
    throw std::invalid_argument("hermite_asymptotic: non-finite argument x");
  }
  const double big_m = 2.0 * m + 1.0;
  const double a = x * std::sqrt(big_m);
  // cos(a - m pi/2), sin(a - m pi/2) via the exact quarter-period shift.
  const double ca = std::cos(a);
  const double sa = std::sin(a);
  double cos_t = 0.0, sin_t = 0.0;
  switch (m & 3) {
    case 0: cos_t = ca;  sin_t = sa;  break;
    case 1: cos_t = sa;  sin_t = -ca; break;
    case 2: cos_t = -ca; sin_t = -sa; break;
    case 3: cos_t = -sa; sin_t = ca;  break;
  }
  const double amp = std::pow(2.0, 0.25) / std::sqrt(M_PI) * std::pow(double(m), -0.25);
  return amp * (cos_t + (x * x * x / 6.0) / std::sqrt(big_m) * sin_t);
}

AsymptoticAmplitude a_squared_expansion(int k, double b) {
  if (k < 1) {
    throw std::invalid_argument("a_squared_expansion: requires k >= 1");
  }
  if (!std::isfinite(b)) {
    throw std::invalid_argument("a_squared_expansion: non-finite location b");
  }
  const double phase = 2.0 * b * std::sqrt(2.0 * k);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  AsymptoticAmplitude out;
  out.k = k;
  out.b = b;
  out.leading = (1.0 / M_PI) / std::sqrt(2.0 * k) * (1.0 + sign * std::cos(phase));
  out.correction =
      -sign / (2.0 * M_PI * k) * b * (1.0 - b * b / 3.0) * std::sin(phase);
  return out;
}

}  // namespace oscdelta
