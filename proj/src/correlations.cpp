#include "xygap/correlations.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "xygap/errors.hpp"
#include "xygap/gap_exact.hpp"
#include "xygap/regime.hpp"
#include "xygap/summation.hpp"

namespace xygap {

std::string_view to_string(CorrelationMethod method) {
  switch (method) {
    case CorrelationMethod::FiniteSum: return "finite";
    case CorrelationMethod::Asymptotic: return "asymptotic";
    case CorrelationMethod::ED: return "ed";
  }
  return "unknown";
}

namespace {

constexpr double kPi = std::numbers::pi;

// R * k reduced back onto (-pi, pi] as an exact rational.
Momentum multiple(const Momentum& k, int r) {
  const long long period = 2LL * k.denominator;
  long long p = (static_cast<long long>(k.numerator) * r) % period;
  if (p <= -k.denominator) p += period;
  if (p > k.denominator) p -= period;
  return {static_cast<int>(p), k.denominator};
}

}  // namespace

CorrelationResult corr_zz_finite(int chain_size, int distance, double field, double anisotropy,
                                 Parity sector) {
  const ModelParams params{chain_size, anisotropy, field, 0.0};
  params.validate();
  if (distance < 1 || distance > chain_size) {
    throw Error(ErrorKind::InvalidParameter, "distance must lie in [1, N]");
  }
  const bool flip = pi_mode_flipped(chain_size, sector, field);
  CompensatedSum a, b, mz;
  for (const auto& k : momentum_grid(chain_size, sector).momenta) {
    const auto angle = bogoliubov_angle(k, field, anisotropy);
    const long double c = (flip && k.is_pi()) ? -angle.cos_theta : angle.cos_theta;
    const long double s = angle.sin_theta;
    const Momentum rk = multiple(k, distance);
    a.add(-s * rk.sin_ld() + c * rk.cos_ld());
    b.add(s * rk.sin_ld() + c * rk.cos_ld());
    mz.add(c);
  }
  const long double m = chain_size;
  CorrelationResult r;
  r.chain_size = chain_size;
  r.distance = distance;
  r.sector = sector;
  r.method = CorrelationMethod::FiniteSum;
  if (distance % chain_size == 0) {
    const long double mag = mz.value() / m;
    r.value = static_cast<double>(1.0L - mag * mag);
  } else {
    r.value = static_cast<double>(-a.value() * b.value() / (m * m));
  }
  return r;
}

CorrelationResult corr_zz_infinite_asymptotic(int distance, double field, double anisotropy) {
  const ModelParams params{2, anisotropy, field, 0.0};
  params.validate();
  if (distance < 1) throw Error(ErrorKind::InvalidParameter, "distance must be >= 1");
  const double dr = distance;
  const auto c = asymptotic_constants(field, anisotropy);
  double value = 0.0;
  switch (c.regime) {
    case Regime::IsotropicCritical: {
      const double s = std::sin(std::acos(field) * dr);
      value = -s * s / (kPi * kPi * dr * dr);
      break;
    }
    case Regime::CriticalLine:
      value = -4.0 / (kPi * kPi * dr * dr);
      break;
    case Regime::FerroCommensurate:
      value = -std::pow(c.real_lambda2(), -2.0 * dr - 2.0) / (2.0 * kPi);
      break;
    case Regime::DisorderCircle:
      value = 0.0;
      break;
    case Regime::Paramagnetic:
      value = -std::pow(c.real_lambda2(), 2.0 * dr) / (2.0 * kPi * dr * dr);
      break;
    case Regime::FerroIncommensurate: {
      using cd = std::complex<double>;
      const double psi = c.real_psi();
      const double a2 = c.alpha * c.alpha;
      const cd i(0.0, 1.0);
      const cd e2 = std::exp(2.0 * i * psi);
      const cd first = std::exp(i * psi * (dr + 1.0)) * std::sqrt((1.0 - e2) / (1.0 - a2 / e2));
      const cd second = std::exp(i * psi * (dr - 1.0)) * std::sqrt((1.0 - a2 / e2) / (1.0 - 1.0 / e2));
      value = -4.0 / kPi * std::pow(c.alpha, 2.0 * dr) / (dr * dr) * first.real() * second.real();
      break;
    }
  }
  CorrelationResult r;
  r.distance = distance;
  r.value = value;
  r.method = CorrelationMethod::Asymptotic;
  return r;
}

double sector_difference_derivative(int chain_size, double field, double anisotropy, double step,
                                    Derivative scheme) {
  if (!(step > 0.0)) throw Error(ErrorKind::InvalidParameter, "finite-difference step must be > 0");
  // D = E_even - E_odd
  auto d = [&](double g) {
    return -static_cast<double>(sector_difference_unchecked(chain_size, g, anisotropy));
  };
  auto central = [&](double h) { return (d(field + h) - d(field - h)) / (2.0 * h); };
  if (scheme == Derivative::Central) return central(step);
  return (4.0 * central(step / 2.0) - central(step)) / 3.0;
}

double gap_corr_identity_residual(int chain_size, double field, double anisotropy, double fd_step,
                                  Derivative scheme) {
  const ModelParams params{chain_size, anisotropy, field, 0.0};
  params.validate();
  if (field * field + anisotropy * anisotropy >= 1.0) {
    throw Error(ErrorKind::OutOfDomain, "the gap-correlation identity needs Gamma^2 + gamma^2 < 1");
  }
  if (chain_size % 2 != 0) throw Error(ErrorKind::OutOfDomain, "the identity needs even N");
  const double g = corr_zz_finite(2 * chain_size, chain_size, field, anisotropy, Parity::Odd).value;
  const double slope =
      sector_difference_derivative(chain_size, field, anisotropy, fd_step, scheme) /
      (2.0 * chain_size);
  return std::fabs(g + slope * slope);
}

}  // namespace xygap
