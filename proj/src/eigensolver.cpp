#include "oscdelta/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace oscdelta {

namespace {

using cd = std::complex<double>;

// Row-major dense working matrix; the QR sweeps are row-op heavy.
struct Work {
  int n;
  std::vector<cd> a;
  explicit Work(const Eigen::MatrixXcd& m) : n(static_cast<int>(m.rows())), a(size_t(n) * n) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[size_t(i) * n + j] = m(i, j);
  }
  cd& at(int i, int j) { return a[size_t(i) * n + j]; }
  const cd& at(int i, int j) const { return a[size_t(i) * n + j]; }
};

// Parlett-Reinsch balancing with radix-2 scale factors (exact similarity).
void balance(Work& h) {
  const int n = h.n;
  bool changed = true;
  int passes = 0;
  while (changed && passes++ < 40) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(h.at(j, i));
        r += std::abs(h.at(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0;
      while (c < r / 2.0) { c *= 2.0; r /= 2.0; f *= 2.0; }
      while (c >= r * 2.0) { c /= 2.0; r *= 2.0; f /= 2.0; }
      if (f != 1.0 && (c + r) < 0.95 * s) {
        const double inv = 1.0 / f;
        for (int j = 0; j < n; ++j) h.at(i, j) *= inv;  // row i
        for (int j = 0; j < n; ++j) h.at(j, i) *= f;    // column i
        changed = true;
      }
    }
  }
}

// Householder reduction to upper Hessenberg form.
void hessenberg(Work& h) {
  const int n = h.n;
  std::vector<cd> w(n), s(n);
  for (int k = 0; k + 2 < n; ++k) {
    double nrm = 0.0;
    for (int i = k + 1; i < n; ++i) {
      const cd& v = h.at(i, k);
      nrm += v.real() * v.real() + v.imag() * v.imag();
    }
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) continue;
    const cd alpha = h.at(k + 1, k);
    const double aa = std::abs(alpha);
    const cd phase = (aa == 0.0) ? cd(1.0, 0.0) : alpha / aa;
    // w = x + phase*||x|| e1; P = I - (2/w^H w) w w^H reflects x onto the axis.
    double whw = 0.0;
    for (int i = k + 1; i < n; ++i) w[i] = h.at(i, k);
    w[k + 1] += phase * nrm;
    for (int i = k + 1; i < n; ++i) {
      whw += w[i].real() * w[i].real() + w[i].imag() * w[i].imag();
    }
    if (whw == 0.0) continue;
    const double tau = 2.0 / whw;
    // left: A <- A - tau w (w^H A)  on rows k+1..n-1
    for (int j = k; j < n; ++j) s[j] = cd(0.0, 0.0);
    for (int i = k + 1; i < n; ++i) {
      const double wr = w[i].real(), wi = w[i].imag();
      for (int j = k; j < n; ++j) {
        const cd& v = h.at(i, j);
        s[j] += cd(wr * v.real() + wi * v.imag(), wr * v.imag() - wi * v.real());
      }
    }
    for (int i = k + 1; i < n; ++i) {
      const cd twi = tau * w[i];
      const double tr = twi.real(), ti = twi.imag();
      for (int j = k; j < n; ++j) {
        const cd& sv = s[j];
        h.at(i, j) -= cd(tr * sv.real() - ti * sv.imag(), tr * sv.imag() + ti * sv.real());
      }
    }
    // right: A <- A - tau (A w) w^H  on all rows
    for (int i = 0; i < n; ++i) {
      double tr = 0.0, ti = 0.0;
      for (int j = k + 1; j < n; ++j) {
        const cd& v = h.at(i, j);
        const double wr = w[j].real(), wi = w[j].imag();
        tr += v.real() * wr - v.imag() * wi;
        ti += v.real() * wi + v.imag() * wr;
      }
      const cd t = tau * cd(tr, ti);
      const double ar = t.real(), ai = t.imag();
      for (int j = k + 1; j < n; ++j) {
        // t * conj(w_j)
        const double wr = w[j].real(), wi = w[j].imag();
        h.at(i, j) -= cd(ar * wr + ai * wi, ai * wr - ar * wi);
      }
    }
    // clean the annihilated column
    h.at(k + 1, k) = -phase * nrm;
    for (int i = k + 2; i < n; ++i) h.at(i, k) = cd(0.0, 0.0);
  }
}

struct Rotation {
  double c;
  cd s;
};

Rotation make_givens(const cd& a, const cd& b) {
  const double ab = std::abs(b);
  if (ab == 0.0) return {1.0, cd(0.0, 0.0)};
  const double aa = std::abs(a);
  if (aa == 0.0) return {0.0, cd(1.0, 0.0)};
  const double t = std::hypot(aa, ab);
  const cd phase = a / aa;
  return {aa / t, phase * std::conj(b) / (t * std::conj(phase) * phase)};
}

cd wilkinson_shift(const Work& h, int hi) {
  const cd a = h.at(hi - 1, hi - 1);
  const cd b = h.at(hi - 1, hi);
  const cd c = h.at(hi, hi - 1);
  const cd d = h.at(hi, hi);
  const cd tr = a + d;
  const cd disc = std::sqrt((a - d) * (a - d) + 4.0 * b * c);
  const cd l1 = 0.5 * (tr + disc);
  const cd l2 = 0.5 * (tr - disc);
  return (std::abs(l1 - d) < std::abs(l2 - d)) ? l1 : l2;
}

// One explicit shifted QR sweep on the window [lo, hi]: H <- R Q + mu I
// where Q R = H - mu I, realized with Givens rotations.
void qr_sweep(Work& h, int lo, int hi, const cd& mu, std::vector<Rotation>& rots) {
  const int n = h.n;
  for (int i = lo; i <= hi; ++i) h.at(i, i) -= mu;
  rots.resize(size_t(hi - lo));
  for (int i = lo; i < hi; ++i) {
    const Rotation g = make_givens(h.at(i, i), h.at(i + 1, i));
    rots[size_t(i - lo)] = g;
    const double c = g.c;
    const double sr = g.s.real(), si = g.s.imag();
    cd* rowi = &h.at(i, i);
    cd* rowj = &h.at(i + 1, i);
    const int len = n - i;
    for (int j = 0; j < len; ++j) {
      const double xr = rowi[j].real(), xi = rowi[j].imag();
      const double yr = rowj[j].real(), yi = rowj[j].imag();
      rowi[j] = cd(c * xr + sr * yr - si * yi, c * xi + sr * yi + si * yr);
      rowj[j] = cd(-sr * xr - si * xi + c * yr, -sr * xi + si * xr + c * yi);
    }
  }
  for (int i = lo; i < hi; ++i) {
    const Rotation g = rots[size_t(i - lo)];
    const double c = g.c;
    const double sr = g.s.real(), si = g.s.imag();
    const int rmax = i + 1;
    for (int r = 0; r <= rmax; ++r) {
      cd& x = h.at(r, i);
      cd& y = h.at(r, i + 1);
      const double xr = x.real(), xi = x.imag();
      const double yr = y.real(), yi = y.imag();
      // columns (i, i+1) <- (c x + conj(s) y, -s x + c y)
      x = cd(c * xr + sr * yr + si * yi, c * xi + sr * yi - si * yr);
      y = cd(-sr * xr + si * xi + c * yr, -sr * xi - si * xr + c * yi);
    }
  }
  for (int i = lo; i <= hi; ++i) h.at(i, i) += mu;
}

}  // namespace

Eigen::VectorXcd qr_eigenvalues(const Eigen::MatrixXcd& a, double* backward_error) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw std::invalid_argument("qr_eigenvalues: matrix must be square and non-empty");
  }
  const int n = static_cast<int>(a.rows());
  const double fnorm = a.norm();
  Work h(a);
  balance(h);
  hessenberg(h);

  const double eps = std::numeric_limits<double>::epsilon();
  double max_discard = 0.0;
  std::vector<Rotation> rots;
  const long long sweep_cap = 30LL * n;
  long long sweeps = 0;
  int hi = n - 1;
  int since_deflate = 0;
  while (hi > 0) {
    // set negligible subdiagonal entries to zero
    for (int i = hi; i >= 1; --i) {
      cd& sub = h.at(i, i - 1);
      if (sub == cd(0.0, 0.0)) continue;
      double tol = eps * (std::abs(h.at(i - 1, i - 1)) + std::abs(h.at(i, i)));
      if (tol == 0.0) tol = eps * fnorm;
      if (std::abs(sub) <= tol) {
        max_discard = std::max(max_discard, std::abs(sub));
        sub = cd(0.0, 0.0);
      }
    }
    if (h.at(hi, hi - 1) == cd(0.0, 0.0)) {
      --hi;
      since_deflate = 0;
      continue;
    }
    int lo = hi;
    while (lo > 0 && h.at(lo, lo - 1) != cd(0.0, 0.0)) --lo;
    cd mu;
    if (since_deflate > 0 && since_deflate % 12 == 0) {
      mu = h.at(hi, hi) + 0.75 * std::abs(h.at(hi, hi - 1));
    } else {
      mu = wilkinson_shift(h, hi);
    }
    qr_sweep(h, lo, hi, mu, rots);
    ++sweeps;
    ++since_deflate;
    if (sweeps > sweep_cap) {
      throw std::runtime_error(
          "qr_eigenvalues: no convergence after " + std::to_string(sweeps) +
          " sweeps; stuck block [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
  }

  Eigen::VectorXcd ev(n);
  for (int i = 0; i < n; ++i) ev[i] = h.at(i, i);
  std::sort(ev.data(), ev.data() + n, [](const cd& x, const cd& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  if (backward_error) *backward_error = (fnorm > 0.0) ? max_discard / fnorm : 0.0;
  return ev;
}

namespace {

// For a real input matrix the spectrum is closed under conjugation; pair the
// computed eigenvalues and enforce the symmetry exactly.
void enforce_conjugate_pairs(Eigen::VectorXcd& ev) {
  const int n = static_cast<int>(ev.size());
  double scale = 0.0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(ev[i]));
  const double cap = 1e-6 * std::max(scale, 1.0);
  std::vector<int> pos, neg;
  for (int i = 0; i < n; ++i) {
    if (ev[i].imag() > 0.0) pos.push_back(i);
    else if (ev[i].imag() < 0.0) neg.push_back(i);
  }
  std::vector<bool> used(neg.size(), false);
  for (int ip : pos) {
    int best = -1;
    double best_d = cap;
    for (size_t jm = 0; jm < neg.size(); ++jm) {
      if (used[jm]) continue;
      const double d = std::abs(std::conj(ev[ip]) - ev[neg[jm]]);
      if (d < best_d) {
        best_d = d;
        best = static_cast<int>(jm);
      }
    }
    if (best >= 0) {
      used[size_t(best)] = true;
      ev[neg[size_t(best)]] = std::conj(ev[ip]);
    } else {
      ev[ip] = cd(ev[ip].real(), 0.0);  // unmatched: imaginary part is noise
    }
  }
  for (size_t jm = 0; jm < neg.size(); ++jm) {
    if (!used[jm]) ev[neg[jm]] = cd(ev[neg[jm]].real(), 0.0);
  }
  std::sort(ev.data(), ev.data() + n, [](const cd& x, const cd& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
}

}  // namespace

SpectrumResult eigenvalues(const TruncatedOperator& op, const SpectrumBackend* backend) {
  if (op.dim() < 1) {
    throw std::invalid_argument("eigenvalues: empty operator");
  }
  SpectrumResult out;
  out.truncation = op.dim();
  if (backend) {
    out.eigenvalues = backend->eigvals(op.entries);
    out.residual_norm = 0.0;
  } else {
    out.eigenvalues = qr_eigenvalues(op.entries, &out.residual_norm);
  }
  if (op.entries.imag().isZero(0.0)) {
    enforce_conjugate_pairs(out.eigenvalues);
  }
  return out;
}

}  // namespace oscdelta
