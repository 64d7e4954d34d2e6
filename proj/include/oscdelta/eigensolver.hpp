#pragma once

#include <Eigen/Dense>

#include "oscdelta/potential.hpp"

namespace oscdelta {

/// Full spectrum of a truncated operator, sorted by (Re, Im).
struct SpectrumResult {
  Eigen::VectorXcd eigenvalues;
  int truncation = 0;
  /// Backward-error proxy: largest subdiagonal magnitude discarded during
  /// deflation, relative to the Frobenius norm of the input.
  double residual_norm = 0.0;
};

/// Pluggable eigenvalue backend, used to cross-check the in-repo solver
/// against an external one in tests.
struct SpectrumBackend {
  virtual ~SpectrumBackend() = default;
  virtual Eigen::VectorXcd eigvals(const Eigen::MatrixXcd& a) const = 0;
};

/// All eigenvalues of a dense complex matrix: balancing, Householder
/// Hessenberg reduction, then Wilkinson-shifted explicit QR with deflation.
/// Throws std::runtime_error naming the stuck block if a window fails to
/// deflate within the sweep cap (30 * N).
Eigen::VectorXcd qr_eigenvalues(const Eigen::MatrixXcd& a, double* backward_error = nullptr);

/// Spectrum of the truncated operator. For exactly-real input matrices the
/// eigenvalue multiset is symmetrized so complex-conjugate pairing is exact.
SpectrumResult eigenvalues(const TruncatedOperator& op, const SpectrumBackend* backend = nullptr);

}  // namespace oscdelta
