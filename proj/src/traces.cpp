#include "oscdelta/traces.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "oscdelta/bounds.hpp"
#include "oscdelta/hermite.hpp"

namespace oscdelta {

namespace {

std::vector<std::vector<double>> amplitude_rows(const PointPotential& w, long long k_max) {
  std::vector<std::vector<double>> rows;
  rows.reserve(w.terms.size());
  for (const auto& term : w.terms) {
    rows.push_back(hermite_row(static_cast<int>(k_max), term.location));
  }
  return rows;
}

std::vector<Complex> coupling_row(const PointPotential& w,
                                  const std::vector<std::vector<double>>& rows, int n,
                                  long long k_max) {
  std::vector<Complex> wn(static_cast<size_t>(k_max) + 1, Complex(0.0, 0.0));
  for (size_t m = 0; m < w.terms.size(); ++m) {
    const Complex cn = w.terms[m].coupling * rows[m][static_cast<size_t>(n)];
    for (long long k = 0; k <= k_max; ++k) {
      wn[static_cast<size_t>(k)] += cn * rows[m][static_cast<size_t>(k)];
    }
  }
  return wn;
}

// Envelope fit |f(k)| <= env / sqrt(k) over the last quarter of the range.
double sqrt_envelope(const std::function<double(long long)>& f, long long k_max) {
  double env = 0.0;
  for (long long k = (3 * k_max) / 4; k <= k_max; ++k) {
    env = std::max(env, f(k) * std::sqrt(double(k)));
  }
  return env;
}

void check_cutoff(int n, long long k_max, long long minimum) {
  if (k_max < minimum) {
    throw std::invalid_argument("trace sum: cutoff k_max=" + std::to_string(k_max) +
                                " too small for n=" + std::to_string(n));
  }
}

}  // namespace

Complex t1(int n, const PointPotential& w) {
  if (n < 0) throw std::invalid_argument("t1: negative n");
  return matrix_element(w, n, n);
}

TailedValue t2(int n, const PointPotential& w, long long k_max) {
  if (n < 1) throw std::invalid_argument("t2: requires n >= 1");
  check_cutoff(n, k_max, 4LL * n);
  w.validate();
  const auto rows = amplitude_rows(w, k_max);
  const auto wn = coupling_row(w, rows, n, k_max);
  Complex sum(0.0, 0.0);
  for (long long k = 0; k <= k_max; ++k) {
    if (k == n) continue;
    const Complex wnk = wn[static_cast<size_t>(k)];
    sum += wnk * wnk / (2.0 * double(n - k));
  }
  TailedValue out;
  out.value = sum;
  out.k_max = k_max;
  const double env = sqrt_envelope(
      [&](long long k) { return std::norm(wn[static_cast<size_t>(k)]); }, k_max);
  out.tail_bound = env * (double(k_max) / double(k_max - n)) / std::sqrt(double(k_max));
  return out;
}

TailedValue t3(int n, const PointPotential& w, long long k_max) {
  if (n < 0) throw std::invalid_argument("t3: negative n");
  check_cutoff(n, k_max, 4LL * n);
  w.validate();
  const auto rows = amplitude_rows(w, k_max);
  const auto wn = coupling_row(w, rows, n, k_max);

  // sum_{k,l != n} w_nk w_kl w_ln / (4(n-k)(n-l)) = (1/4) sum_m c_m S_m^2
  Complex part_a(0.0, 0.0);
  double tail_a = 0.0;
  for (size_t m = 0; m < w.terms.size(); ++m) {
    Complex s(0.0, 0.0);
    for (long long k = 0; k <= k_max; ++k) {
      if (k == n) continue;
      s += wn[static_cast<size_t>(k)] * rows[m][static_cast<size_t>(k)] / double(n - k);
    }
    part_a += 0.25 * w.terms[m].coupling * s * s;
    const double env = sqrt_envelope(
        [&](long long k) {
          return std::abs(wn[static_cast<size_t>(k)] * rows[m][static_cast<size_t>(k)]);
        },
        k_max);
    const double tail_s = env * (double(k_max) / double(k_max - n)) * 2.0 / std::sqrt(double(k_max));
    tail_a += 0.25 * std::abs(w.terms[m].coupling) * tail_s * (2.0 * std::abs(s) + tail_s);
  }

  Complex part_b(0.0, 0.0);
  for (long long m = 0; m <= k_max; ++m) {
    if (m == n) continue;
    const Complex wnm = wn[static_cast<size_t>(m)];
    part_b += wnm * wnm / (4.0 * double(n - m) * double(n - m));
  }
  const Complex wnn = wn[static_cast<size_t>(n)];
  const double env_b = sqrt_envelope(
      [&](long long k) { return std::norm(wn[static_cast<size_t>(k)]); }, k_max);
  const double km = double(k_max);
  const double ratio = km / double(k_max - n);
  const double tail_b =
      std::abs(wnn) * env_b * ratio * ratio * (2.0 / 3.0) / (km * std::sqrt(km)) / 4.0;

  TailedValue out;
  out.value = part_a - wnn * part_b;
  out.k_max = k_max;
  out.tail_bound = tail_a + tail_b;
  return out;
}

Complex parity_cross_term(int n, const PointPotential& even_w, const PointPotential& odd_w,
                          long long k_max) {
  if (n < 1) throw std::invalid_argument("parity_cross_term: requires n >= 1");
  check_cutoff(n, k_max, 4LL * n);
  const auto rows_e = amplitude_rows(even_w, k_max);
  const auto rows_o = amplitude_rows(odd_w, k_max);
  const auto en = coupling_row(even_w, rows_e, n, k_max);
  const auto on = coupling_row(odd_w, rows_o, n, k_max);
  Complex sum(0.0, 0.0);
  for (long long k = 0; k <= k_max; ++k) {
    if (k == n) continue;
    sum += (en[static_cast<size_t>(k)] * on[static_cast<size_t>(k)] +
            on[static_cast<size_t>(k)] * en[static_cast<size_t>(k)]) /
           (2.0 * double(n - k));
  }
  return sum;
}

namespace {

// Composite trapezoid on each side of the square separately (the integrand is
// analytic per side; the corners are the only kinks, and they sit on nodes at
// every refinement level). Grid doubling reuses all previous evaluations, and
// one Richardson step on consecutive levels removes the h^2 term.
Complex contour_quadrature(const ContourSpec& spec, int n,
                           const std::function<Complex(const Complex&)>& trace_at) {
  if (spec.truncation < 4 * n || spec.truncation < 1) {
    throw std::invalid_argument("tj_contour: truncation must satisfy N >= 4n");
  }
  const double zn = 2.0 * n + 1.0;
  const Complex corners[4] = {
      {zn + 0.5, 0.5}, {zn - 0.5, 0.5}, {zn - 0.5, -0.5}, {zn + 0.5, -0.5}};  // counterclockwise
  const auto f = [&](const Complex& z) { return (z - zn) * trace_at(z); };

  Complex side_sum[4];  // trapezoid node sums per side, excluding the dz factor
  int pts = spec.points_per_side;
  for (int side = 0; side < 4; ++side) {
    const Complex a = corners[side];
    const Complex b = corners[(side + 1) % 4];
    Complex s = 0.5 * (f(a) + f(b));
    for (int i = 1; i < pts; ++i) s += f(a + (b - a) * (double(i) / pts));
    side_sum[side] = s;
  }
  const auto total = [&](int p) {
    Complex acc(0.0, 0.0);
    for (int side = 0; side < 4; ++side) {
      acc += side_sum[side] * ((corners[(side + 1) % 4] - corners[side]) / double(p));
    }
    return acc / Complex(0.0, 2.0 * M_PI);
  };

  Complex coarse = total(pts);
  Complex prev_extrap(0.0, 0.0);
  for (int pass = 1; pass <= spec.max_doublings; ++pass) {
    for (int side = 0; side < 4; ++side) {
      const Complex a = corners[side];
      const Complex b = corners[(side + 1) % 4];
      Complex add(0.0, 0.0);
      for (int i = 0; i < pts; ++i) {
        add += f(a + (b - a) * ((i + 0.5) / pts));
      }
      side_sum[side] += add;
    }
    pts *= 2;
    const Complex fine = total(pts);
    const Complex extrap = fine + (fine - coarse) / 3.0;
    if (pass > 1 && std::abs(extrap - prev_extrap) < spec.tol) return extrap;
    prev_extrap = extrap;
    coarse = fine;
  }
  throw std::runtime_error("tj_contour: quadrature did not converge within the doubling cap");
}

}  // namespace

Complex tj_contour(int n, const PointPotential& w, int j, const ContourSpec& spec) {
  if (j < 1 || j > 4) throw std::invalid_argument("tj_contour: order j must be in {1,2,3,4}");
  w.validate();
  const int N = spec.truncation;
  const int big_j = static_cast<int>(w.terms.size());
  std::vector<std::vector<double>> rows = amplitude_rows(w, N - 1);
  Eigen::VectorXcd c(big_j);
  for (int m = 0; m < big_j; ++m) c[m] = w.terms[static_cast<size_t>(m)].coupling;

  // flatten the pair products u^a_k u^b_k for the inner lattice loop
  const int pairs = big_j * (big_j + 1) / 2;
  std::vector<double> uu(static_cast<size_t>(pairs) * N);
  {
    int p = 0;
    for (int a = 0; a < big_j; ++a) {
      for (int b = a; b < big_j; ++b, ++p) {
        for (int k = 0; k < N; ++k) {
          uu[size_t(p) * N + k] = rows[size_t(a)][size_t(k)] * rows[size_t(b)][size_t(k)];
        }
      }
    }
  }

  const auto trace_at = [&](const Complex& z) -> Complex {
    std::vector<Complex> gp(pairs, Complex(0, 0)), hp(pairs, Complex(0, 0));
    const double x = z.real(), y = z.imag();
    for (int k = 0; k < N; ++k) {
      const double a = x - (2.0 * k + 1.0);
      const double inv = 1.0 / (a * a + y * y);
      const double dr = a * inv, di = -y * inv;            // d = 1/(z - z_k)
      const double d2r = dr * dr - di * di, d2i = 2.0 * dr * di;
      for (int p = 0; p < pairs; ++p) {
        const double v = uu[size_t(p) * N + k];
        gp[size_t(p)] += Complex(v * dr, v * di);
        hp[size_t(p)] += Complex(v * d2r, v * d2i);
      }
    }
    Eigen::MatrixXcd g(big_j, big_j), h2(big_j, big_j);
    {
      int p = 0;
      for (int a = 0; a < big_j; ++a) {
        for (int b = a; b < big_j; ++b, ++p) {
          g(a, b) = g(b, a) = gp[size_t(p)];
          h2(a, b) = h2(b, a) = hp[size_t(p)];
        }
      }
    }
    // tr[(R0 W)^j R0] = tr[(U^T R0^2 U) C ((U^T R0 U) C)^{j-1}]
    Eigen::MatrixXcd gc = g * c.asDiagonal();
    Eigen::MatrixXcd acc = h2 * c.asDiagonal();
    for (int p = 1; p < j; ++p) acc = acc * gc;
    return acc.trace();
  };
  return contour_quadrature(spec, n, trace_at);
}

Complex tj_contour_dense(int n, const PointPotential& w, int j, const ContourSpec& spec) {
  if (j < 1 || j > 4) throw std::invalid_argument("tj_contour: order j must be in {1,2,3,4}");
  const int N = spec.truncation;
  Eigen::MatrixXcd wm = Eigen::MatrixXcd::Zero(N, N);
  for (const auto& term : w.terms) {
    const auto row = hermite_row(N - 1, term.location);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) wm(a, b) += term.coupling * row[a] * row[b];
  }
  const auto trace_at = [&](const Complex& z) -> Complex {
    Eigen::VectorXcd r0(N);
    for (int k = 0; k < N; ++k) r0[k] = 1.0 / (z - (2.0 * k + 1.0));
    Eigen::MatrixXcd b = r0.asDiagonal() * wm;
    Eigen::MatrixXcd acc = b;
    for (int p = 1; p < j; ++p) acc = acc * b;
    return (acc * r0.asDiagonal()).trace();
  };
  return contour_quadrature(spec, n, trace_at);
}

TraceSeries lambda_series(int n, const PointPotential& w, int q, double alpha, double C0,
                          long long k_max) {
  if (q < 1 || q > 3) throw std::invalid_argument("lambda_series: q must be in {1,2,3}");
  if (n < 1) throw std::invalid_argument("lambda_series: requires n >= 1");
  if (k_max < 0) k_max = std::max<long long>(16LL * n, 4096);

  TraceSeries out;
  out.n = n;
  out.t1 = t1(n, w);
  if (q >= 2) {
    const TailedValue v2 = t2(n, w, k_max);
    out.t2 = v2.value;
    out.tail_t2 = v2.tail_bound;
  }
  if (q >= 3) {
    const TailedValue v3 = t3(n, w, k_max);
    out.t3 = v3.value;
    out.tail_t3 = v3.tail_bound;
  }
  out.lambda_estimate = Complex(2.0 * n + 1.0, 0.0) + out.t1 + out.t2 + out.t3;
  if (C0 > 0.0) {
    const double ell = C0 * m_alpha(alpha) * std::log(M_E * n) / std::pow(double(n), 2.0 * alpha);
    out.remainder_bound = 2.0 * std::pow(ell, q + 1);
    out.n_star_threshold = n_star(C0, alpha);
    out.below_threshold = n < out.n_star_threshold;
  }
  return out;
}

}  // namespace oscdelta
