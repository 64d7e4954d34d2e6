#include "oscdelta/ladder.hpp"

#include <cmath>
#include <stdexcept>

namespace oscdelta {

namespace {

bool in_strip(const Complex& z, int n) {
  const double zn = 2.0 * n + 1.0;
  if (n == 0) return z.real() - zn <= 1.0;
  return std::abs(z.real() - zn) <= 1.0;
}

bool in_square(const Complex& z, int n) {
  const double zn = 2.0 * n + 1.0;
  return std::abs(z.real() - zn) <= 0.5 && std::abs(z.imag()) <= 0.5;
}

}  // namespace

EigenLadder ladder_match(const SpectrumResult& spec, int n_lo, int n_hi) {
  if (n_lo < 0 || n_hi < n_lo) {
    throw std::invalid_argument("ladder_match: bad n range");
  }
  if (n_hi > spec.truncation / 2) {
    throw std::invalid_argument("ladder_match: n_hi exceeds N/2, too close to the truncation edge");
  }
  EigenLadder lad;
  lad.n_lo = n_lo;
  lad.n_hi = n_hi;
  lad.entries.reserve(static_cast<size_t>(n_hi - n_lo + 1));
  for (int n = n_lo; n <= n_hi; ++n) {
    LadderEntry e;
    e.n = n;
    std::vector<Complex> cand;
    for (int i = 0; i < spec.eigenvalues.size(); ++i) {
      if (in_strip(spec.eigenvalues[i], n)) cand.push_back(spec.eigenvalues[i]);
    }
    if (cand.size() == 1) {
      e.lambda = cand[0];
      e.status = MatchStatus::Matched;
      e.in_square = in_square(cand[0], n);
    } else if (cand.empty()) {
      e.status = MatchStatus::Missing;
    } else {
      // tie-break: a unique candidate inside the square D_n wins
      int inside = 0;
      Complex pick;
      for (const auto& z : cand) {
        if (in_square(z, n)) {
          ++inside;
          pick = z;
        }
      }
      if (inside == 1) {
        e.lambda = pick;
        e.status = MatchStatus::Matched;
        e.in_square = true;
      } else {
        e.status = MatchStatus::Ambiguous;
      }
    }
    lad.entries.push_back(e);
  }
  return lad;
}

NonrealReport count_nonreal(const SpectrumResult& spec, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("count_nonreal: tol must be positive");
  }
  NonrealReport rep;
  for (int i = 0; i < spec.eigenvalues.size(); ++i) {
    const Complex& z = spec.eigenvalues[i];
    rep.max_imag = std::max(rep.max_imag, std::abs(z.imag()));
    if (std::abs(z.imag()) > tol) {
      ++rep.count;
      rep.values.push_back(z);
    }
  }
  return rep;
}

TruncationStudy truncation_study(const PointPotential& w, int n, const std::vector<int>& sizes) {
  if (sizes.empty()) {
    throw std::invalid_argument("truncation_study: no sizes given");
  }
  for (int N : sizes) {
    if (N < 4 * n) {
      throw std::invalid_argument("truncation_study: every size must satisfy N >= 4n");
    }
  }
  TruncationStudy study;
  study.n = n;
  for (int N : sizes) {
    const SpectrumResult spec = eigenvalues(build_truncated(w, N));
    const EigenLadder lad = ladder_match(spec, n, n);
    TruncationRow row;
    row.truncation = N;
    row.status = lad.at(n).status;
    row.lambda = lad.at(n).lambda;
    study.rows.push_back(row);
  }
  for (size_t i = 0; i + 1 < study.rows.size(); ++i) {
    study.diffs.push_back(std::abs(study.rows[i + 1].lambda - study.rows[i].lambda));
  }
  for (size_t i = 0; i + 1 < study.diffs.size(); ++i) {
    if (study.diffs[i + 1] > study.diffs[i]) study.cauchy = false;
  }
  return study;
}

}  // namespace oscdelta
