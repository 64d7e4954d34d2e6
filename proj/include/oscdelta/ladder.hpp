#pragma once

#include <optional>
#include <vector>

#include "oscdelta/eigensolver.hpp"

namespace oscdelta {

enum class MatchStatus { Matched, Ambiguous, Missing };

struct LadderEntry {
  int n = 0;
  Complex lambda{0.0, 0.0};
  MatchStatus status = MatchStatus::Missing;
  bool in_square = false;  // lambda inside the tighter square D_n
};

/// Map n -> eigenvalue via the strips H_n (|Re z - (2n+1)| <= 1; H_0 is
/// half-infinite on the left). Matched means exactly one candidate; ties are
/// broken by preferring a unique candidate inside D_n, else Ambiguous.
struct EigenLadder {
  int n_lo = 0;
  int n_hi = 0;
  std::vector<LadderEntry> entries;

  const LadderEntry& at(int n) const { return entries.at(static_cast<size_t>(n - n_lo)); }
};

EigenLadder ladder_match(const SpectrumResult& spec, int n_lo, int n_hi);

struct NonrealReport {
  int count = 0;
  double max_imag = 0.0;
  std::vector<Complex> values;
};

/// Number of eigenvalues with |Im lambda| > tol (default 1e-8).
NonrealReport count_nonreal(const SpectrumResult& spec, double tol = 1e-8);

struct TruncationRow {
  int truncation = 0;
  Complex lambda{0.0, 0.0};
  MatchStatus status = MatchStatus::Missing;
};

struct TruncationStudy {
  int n = 0;
  std::vector<TruncationRow> rows;
  std::vector<double> diffs;  // |lambda(N_{i+1}) - lambda(N_i)|
  bool cauchy = true;         // successive diffs non-increasing
};

/// lambda_n as a function of the truncation size; flags non-Cauchy behavior.
TruncationStudy truncation_study(const PointPotential& w, int n, const std::vector<int>& sizes);

}  // namespace oscdelta
