#include "oscdelta/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "oscdelta/hermite.hpp"
#include "oscdelta/quadrature.hpp"

namespace oscdelta {

namespace {

double parity_sign(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

double kappa(int n, double b) {
  if (n < 1) throw std::invalid_argument("kappa: requires n >= 1");
  const double phase = 2.0 * b * std::sqrt(2.0 * n);
  return (-parity_sign(n) * std::sin(phase) - 0.5 * std::sin(2.0 * phase)) / (2.0 * M_PI);
}

ChiZetaOmega chi_zeta_omega(int n, double b) {
  if (n < 1) throw std::invalid_argument("chi_zeta_omega: requires n >= 1");
  const double phase = 2.0 * b * std::sqrt(2.0 * n);
  const double sg = parity_sign(n);
  ChiZetaOmega out;
  out.chi = 4.0 / M_PI * (1.0 + sg * std::cos(phase));
  out.zeta = b / M_PI * (1.0 - b * b * b / 3.0) * std::sin(phase);
  out.omega = 0.125 + sg * 0.5 * std::sin(2.0 * phase);
  return out;
}

void AsymptoticModel::validate() const {
  const bool needs_b = kind != ModelKind::SingleCenter;
  if (needs_b && !(b > 0.0)) {
    throw std::invalid_argument("AsymptoticModel: requires b > 0");
  }
  switch (kind) {
    case ModelKind::OddPair:
      if (t != Complex(0.0, 0.0)) {
        throw std::invalid_argument("AsymptoticModel: odd pair requires t = 0");
      }
      break;
    case ModelKind::EvenPair:
      if (s != Complex(0.0, 0.0)) {
        throw std::invalid_argument("AsymptoticModel: even pair requires s = 0");
      }
      break;
    case ModelKind::SingleOffcenter:
    case ModelKind::SingleCenter:
      if (s != Complex(0.0, 0.0)) {
        throw std::invalid_argument("AsymptoticModel: single-delta models have no odd coupling");
      }
      break;
    case ModelKind::MixedPair:
      break;
  }
}

namespace {

double zeta_amplitude(double b, ZetaVariant variant) {
  const double f = (variant == ZetaVariant::BSquaredOverThree) ? b * b : b * b * b;
  return b * (1.0 - f / 3.0);
}

// chi/2 and the signed zeta of the trace-derived coefficient set.
double chi_half(int n, double b) {
  const double phase = 2.0 * b * std::sqrt(2.0 * n);
  return 2.0 / M_PI * (1.0 + parity_sign(n) * std::cos(phase));
}

double zeta_signed(int n, double b, ZetaVariant variant) {
  const double phase = 2.0 * b * std::sqrt(2.0 * n);
  return -parity_sign(n) / M_PI * zeta_amplitude(b, variant) * std::sin(phase);
}

}  // namespace

AsymptoticValue lambda_asymptotic(const AsymptoticModel& model, int n, double band_constant) {
  if (n < 1) throw std::invalid_argument("lambda_asymptotic: requires n >= 1");
  model.validate();
  const double base = 2.0 * n + 1.0;
  const double sqrt2n = std::sqrt(2.0 * n);
  const Complex t = model.t;
  const Complex s = model.s;
  const double b = model.b;

  AsymptoticValue out;
  out.error_band = band_constant * std::log(double(n)) / std::pow(double(n), 1.5);

  switch (model.kind) {
    case ModelKind::OddPair:
      out.value = base + s * s * kappa(n, b) / double(n);
      return out;
    case ModelKind::EvenPair:
    case ModelKind::MixedPair: {
      const Complex sq = (model.kind == ModelKind::EvenPair) ? t * t : t * t + s * s;
      if (model.form == CoefficientForm::TraceDerived) {
        out.value = base + t * chi_half(n, b) / sqrt2n +
                    (t * zeta_signed(n, b, model.zeta_variant) + sq * kappa(n, b)) / double(n);
      } else {
        const ChiZetaOmega printed = chi_zeta_omega(n, b);
        const double zeta_pr =
            (model.zeta_variant == ZetaVariant::BCubedOverThree)
                ? printed.zeta
                : b / M_PI * (1.0 - b * b / 3.0) *
                      std::sin(2.0 * b * std::sqrt(2.0 * n));
        Complex one_over_n = t * zeta_pr + sq * printed.omega;
        if (model.form == CoefficientForm::Printed640) one_over_n *= -parity_sign(n);
        out.value = base + t * printed.chi / sqrt2n + one_over_n / double(n);
      }
      return out;
    }
    case ModelKind::SingleOffcenter: {
      const double phase = 2.0 * b * sqrt2n;
      const double lead = (1.0 + parity_sign(n) * std::cos(phase)) / (M_PI * sqrt2n);
      const double corr = -parity_sign(n) / (2.0 * M_PI * n) *
                          zeta_amplitude(b, model.zeta_variant) * std::sin(phase);
      out.value = base + t * (lead + corr);
      return out;
    }
    case ModelKind::SingleCenter: {
      out.error_band = band_constant / std::pow(double(n), 1.5);
      if (n % 2 == 0) {
        out.value = base + 4.0 * t / (M_PI * sqrt2n);
      } else {
        out.value = base;
      }
      return out;
    }
  }
  throw std::invalid_argument("lambda_asymptotic: unknown model kind");
}

namespace {

struct TailEnvelope {
  double env = 0.0;  // |term_k| <= env / sqrt(k)
};

}  // namespace

AuxSumValue aux_sum_with_row(AuxSumKind kind, int n, double b, long long k_max,
                             const std::vector<double>& a_squared) {
  if (n < 1) throw std::invalid_argument("aux_sum: requires n >= 1");
  if (k_max < 16LL * n) {
    throw std::invalid_argument("aux_sum: cutoff k_max must be at least 16n");
  }
  const bool uses_row = kind == AuxSumKind::SigmaTilde || kind == AuxSumKind::SigmaPrime ||
                        kind == AuxSumKind::TauPrime;
  if (uses_row && static_cast<long long>(a_squared.size()) <= k_max) {
    throw std::invalid_argument("aux_sum: a_squared row shorter than k_max");
  }

  double sum = 0.0;
  double env = 0.0;
  const long long env_from = (3 * k_max) / 4;
  switch (kind) {
    case AuxSumKind::SigmaTilde:
      for (long long k = 0; k <= k_max; ++k) {
        if ((n - k) % 2 == 0) continue;
        sum += a_squared[static_cast<size_t>(k)] / double(n - k);
      }
      break;
    case AuxSumKind::SigmaPrime:
      for (long long k = 0; k <= k_max; ++k) {
        if (k == n || (n - k) % 2 != 0) continue;
        sum += a_squared[static_cast<size_t>(k)] / double(n - k);
      }
      break;
    case AuxSumKind::TauPrime:
      for (long long k = 0; k <= k_max; ++k) {
        if (k == n || (n - k) % 2 != 0) continue;
        sum += a_squared[static_cast<size_t>(k)] / (double(n - k) * double(n - k));
      }
      break;
    case AuxSumKind::Xi:
      for (long long k = 1; k <= k_max; ++k) {
        if ((n - k) % 2 == 0) continue;
        sum += 1.0 / (std::sqrt(double(k)) * double(n - k));
      }
      env = 1.0;
      break;
    case AuxSumKind::Eta:
      for (long long k = 1; k <= k_max; ++k) {
        if ((n - k) % 2 == 0) continue;
        sum += std::cos(2.0 * b * std::sqrt(2.0 * k + 1.0)) /
               (std::sqrt(double(k)) * double(n - k));
      }
      env = 1.0;
      break;
  }
  if (uses_row) {
    for (long long k = env_from; k <= k_max; ++k) {
      env = std::max(env, a_squared[static_cast<size_t>(k)] * std::sqrt(double(k)));
    }
  }

  AuxSumValue out;
  out.n = n;
  out.value = sum;
  out.k_max = k_max;
  const double ratio = double(k_max) / double(k_max - n);
  if (kind == AuxSumKind::TauPrime) {
    out.tail_bound = env * ratio * ratio * (2.0 / 3.0) / (double(k_max) * std::sqrt(double(k_max))) / 2.0;
  } else {
    // terms ~ env k^{-1/2} / (k - n), every other k
    out.tail_bound = env * ratio / std::sqrt(double(k_max));
  }
  return out;
}

AuxSumValue aux_sum(AuxSumKind kind, int n, double b, long long k_max) {
  const bool uses_row = kind == AuxSumKind::SigmaTilde || kind == AuxSumKind::SigmaPrime ||
                        kind == AuxSumKind::TauPrime;
  if (uses_row) {
    return aux_sum_with_row(kind, n, b, k_max, hermite_squared_row(k_max, b));
  }
  return aux_sum_with_row(kind, n, b, k_max, {});
}

ConstantAB constant_AB() {
  ConstantAB out;
  out.closed_form = 2.0 * std::log(1.0 + std::sqrt(2.0));
  out.quad_i1 = tanh_sinh(
      [](double t, double d) {
        // w = sqrt(1-t^2); near t = 1 use the endpoint distance d = 1 - t
        const double w = (t > 0.5) ? std::sqrt(d * (1.0 + t)) : std::sqrt(1.0 - t * t);
        return std::sqrt(2.0) / (w * std::sqrt(1.0 + w));
      },
      0.0, 1.0);
  // integral over (1, inf) of 1/(t sqrt(1+t)), mapped by t -> 1/v onto (0, 1)
  out.quad_i2 = tanh_sinh(
      [](double v, double d) {
        const double vv = (v < 0.5) ? d : v;  // v itself is the endpoint distance at 0
        return 1.0 / (std::sqrt(vv) * std::sqrt(1.0 + vv));
      },
      0.0, 1.0);
  return out;
}

}  // namespace oscdelta
