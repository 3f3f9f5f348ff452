#include "xygap/gap_asymptotic.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "xygap/errors.hpp"
#include "xygap/quadrature.hpp"

namespace xygap {

namespace {

constexpr double kPi = std::numbers::pi;

void check_point(double field, double anisotropy) {
  ModelParams p{2, anisotropy, field, 0.0};
  p.validate();
}

// sqrt(8 gamma |Gamma^2 + gamma^2 - 1 - gamma Gamma s| / (1 - gamma^2)), s = sqrt(Gamma^2 + gamma^2 - 1)
double commensurate_root(double G, double g) {
  const double s = std::sqrt(std::max(0.0, G * G + g * g - 1.0));
  const double inner = 8.0 * g * (G * G + g * g - 1.0 - g * G * s) / (1.0 - g * g);
  return std::sqrt(std::fabs(inner));
}

double incommensurate_amplitude(double G, double g) {
  const double q = g * g * (1.0 - G * G) * (1.0 - G * G - g * g) / (1.0 - g * g);
  return 4.0 * std::sqrt(2.0) / std::sqrt(kPi) * std::pow(std::max(0.0, q), 0.25);
}

// Signed E_odd - E_even for even N.
double asymptotic_difference(int n, double G, double g, AsymptoticOrder order,
                             const AsymptoticConstants& c, bool& super_exponential) {
  const double dn = n;
  switch (c.regime) {
    case Regime::IsotropicCritical: {
      const double phi = std::acos(G);
      const double root = std::sqrt(1.0 - G * G);
      const double theta = std::remainder(dn * phi, 2.0 * kPi);
      if (order == AsymptoticOrder::Leading) {
        return kPi * root / dn * (1.0 - 2.0 * std::fabs(theta) / kPi);
      }
      // odd-s sums of cos(s theta)/s^2 and sin(s theta)/s^3
      const double cs = kPi / 4.0 * (kPi / 2.0 - std::fabs(theta));
      const double sn = kPi / 8.0 * theta * (kPi - std::fabs(theta));
      return 8.0 * root / (kPi * dn) * cs - 8.0 * G / (kPi * dn * dn) * sn;
    }
    case Regime::FerroCommensurate: {
      const double l2 = c.real_lambda2();
      return commensurate_root(G, g) / std::sqrt(kPi) * std::pow(l2, -dn) / std::sqrt(dn);
    }
    case Regime::DisorderCircle:
      super_exponential = true;
      return 0.0;
    case Regime::FerroIncommensurate: {
      const double psi = c.real_psi();
      return incommensurate_amplitude(G, g) * std::pow(c.alpha, dn) / std::sqrt(dn) *
             std::cos(psi * dn + *c.psi0 / 2.0);
    }
    case Regime::CriticalLine: {
      if (g == 0.0) return 0.0;
      double d = g * kPi / (2.0 * dn);
      if (order == AsymptoticOrder::NextOrder) {
        d += (2.0 * g - 3.0 / (2.0 * g)) * kPi * kPi * kPi / (48.0 * dn * dn * dn);
      }
      return d;
    }
    case Regime::Paramagnetic: {
      const double l2 = c.real_lambda2();
      return 2.0 * (G - 1.0) +
             commensurate_root(G, g) / std::sqrt(kPi) * std::pow(l2, dn) / std::sqrt(dn);
    }
  }
  return 0.0;
}

// Kinks of sqrt((G - cos k)^2 + g^2 sin^2 k) on [0, pi], if any.
std::optional<double> integrand_kink(double G, double g) {
  if (g == 0.0 && G <= 1.0) return std::acos(G);
  if (std::fabs(G - 1.0) <= kRegimeTolerance) return 0.0;
  return std::nullopt;
}

double coefficient_trapezoid(int l, double G, double g) {
  // Samples on the half period [0, pi]; the integrand is even in k.
  const __float128 fq = G;
  const __float128 gq = g;
  auto sample = [&](long j, long m, __float128& c, __float128& f) {
    c = cosq(2 * M_PIq * j / m);
    const __float128 s2 = (1 - c) * (1 + c);
    const __float128 a = fq - c;
    f = sqrtq(a * a + gq * gq * s2);
  };
  long m = std::max(256L, 16L * l);
  std::vector<__float128> cosk(static_cast<std::size_t>(m / 2 + 1));
  std::vector<__float128> fk(cosk.size());
  for (long j = 0; j <= m / 2; ++j) {
    sample(j, m, cosk[static_cast<std::size_t>(j)], fk[static_cast<std::size_t>(j)]);
  }
  auto trapezoid = [&]() {
    __float128 acc = 0;
    for (long j = 0; j <= m / 2; ++j) {
      long idx = static_cast<long>((static_cast<long long>(l) * j) % m);
      if (idx > m / 2) idx = m - idx;
      const __float128 w = (j == 0 || j == m / 2) ? 1 : 2;
      acc += w * fk[static_cast<std::size_t>(j)] * cosk[static_cast<std::size_t>(idx)];
    }
    return acc * 2 / m;
  };
  __float128 prev = trapezoid();
  for (int it = 0; it < 12; ++it) {
    std::vector<__float128> c2(static_cast<std::size_t>(m + 1)), f2(c2.size());
    for (long j = 0; j <= m; ++j) {
      const auto k = static_cast<std::size_t>(j);
      if (j % 2 == 0) {
        c2[k] = cosk[k / 2];
        f2[k] = fk[k / 2];
      } else {
        sample(j, 2 * m, c2[k], f2[k]);
      }
    }
    cosk.swap(c2);
    fk.swap(f2);
    m *= 2;
    const __float128 next = trapezoid();
    if (fabsq(next - prev) < 1e-13Q * fabsq(next) + 1e-30Q) return static_cast<double>(next);
    prev = next;
  }
  return static_cast<double>(prev);
}

double coefficient_panels(int l, double G, double g, double kink) {
  const auto rule = gauss_legendre(20);
  auto f = [&](double k) {
    const double a = G - std::cos(k);
    const double b = g * std::sin(k);
    return std::cos(l * k) * std::sqrt(a * a + b * b);
  };
  auto total = [&](int panels) {
    double s = 0.0;
    if (kink > 0.0) s += integrate_panels(f, 0.0, kink, panels, rule);
    if (kink < kPi) s += integrate_panels(f, kink, kPi, panels, rule);
    return 2.0 / kPi * s;
  };
  int panels = std::max(4, l / 4);
  double prev = total(panels);
  for (int it = 0; it < 16; ++it) {
    panels *= 2;
    const double next = total(panels);
    if (std::fabs(next - prev) < 1e-13 * std::fabs(next) + 1e-15) return next;
    prev = next;
  }
  return prev;
}

double coefficient_asymptotic(int l, double G, double g) {
  if (l < kMinAsymptoticOrder) {
    throw Error(ErrorKind::OutOfDomain, "asymptotic a_l needs l >= " +
                                            std::to_string(kMinAsymptoticOrder));
  }
  const double dl = l;
  const auto c = asymptotic_constants(G, g);
  if (g == 0.0 && G <= 1.0) {
    const double phi = std::acos(G);
    return -4.0 * std::sqrt(1.0 - G * G) * std::cos(dl * phi) / (kPi * dl * dl) +
           4.0 * G * std::sin(dl * phi) / (kPi * dl * dl * dl);
  }
  const double l32 = 2.0 * dl * std::sqrt(dl);
  switch (c.regime) {
    case Regime::CriticalLine:
      return -2.0 * g / (kPi * dl * dl) + (3.0 / (2.0 * kPi * g) - 2.0 * g / kPi) / std::pow(dl, 4);
    case Regime::FerroCommensurate:
      return -std::pow(c.real_lambda2(), -dl) / std::sqrt(kPi) * commensurate_root(G, g) / l32;
    case Regime::Paramagnetic:
      return -std::pow(c.real_lambda2(), dl) / std::sqrt(kPi) * commensurate_root(G, g) / l32;
    case Regime::FerroIncommensurate:
      return -incommensurate_amplitude(G, g) * std::pow(c.alpha, dl) *
             std::cos(c.real_psi() * dl + *c.psi0 / 2.0) / l32;
    case Regime::DisorderCircle:
      throw Error(ErrorKind::UnsupportedRegime,
                  "no asymptotic a_l expansion on the disorder circle");
    case Regime::IsotropicCritical:
      break;
  }
  throw Error(ErrorKind::UnsupportedRegime, "no asymptotic a_l expansion here");
}

}  // namespace

GapResult gap_asymptotic(int chain_size, double field, double anisotropy, AsymptoticOrder order) {
  check_point(field, anisotropy);
  if (chain_size < 2) throw Error(ErrorKind::InvalidSize, "chain size must be >= 2");
  const auto c = asymptotic_constants(field, anisotropy);
  bool super_exponential = false;
  double d = asymptotic_difference(chain_size, field, anisotropy, order, c, super_exponential);
  if (chain_size % 2 != 0) d = -d;
  auto r = make_gap_result(d, Method::Asymptotic, c.regime);
  r.super_exponential = super_exponential;
  return r;
}

double incommensurate_gap_envelope(int chain_size, double field, double anisotropy) {
  check_point(field, anisotropy);
  const auto c = asymptotic_constants(field, anisotropy);
  if (c.regime != Regime::FerroIncommensurate) {
    throw Error(ErrorKind::UnsupportedRegime, "envelope defined only for Gamma^2 + gamma^2 < 1");
  }
  const double dn = chain_size;
  return incommensurate_amplitude(field, anisotropy) * std::pow(c.alpha, dn) / std::sqrt(dn);
}

ZeroPositions isotropic_zero_positions(double field, int n_min, int n_max) {
  if (!(field >= 0.0 && field < 1.0)) {
    throw Error(ErrorKind::OutOfDomain, "isotropic zeros need 0 <= Gamma < 1");
  }
  if (n_min < 2 || n_max < n_min) throw Error(ErrorKind::InvalidParameter, "bad N range");
  ZeroPositions z;
  auto track = [](std::vector<double>& out, double& prev, double d, int n) {
    if (n > 0 && (d > 0.0) != (prev > 0.0)) out.push_back(n - 1.0);
    prev = d;
  };
  double pe = 0, pl = 0, pn = 0;
  const int first = n_min + (n_min % 2);
  for (int n = first; n <= n_max; n += 2) {
    const int tag = n == first ? 0 : n;
    track(z.exact, pe, gap_momentum_sum({n, 0.0, field, 0.0}).sector_difference, tag);
    track(z.leading, pl, gap_asymptotic(n, field, 0.0).sector_difference, tag);
    track(z.next_order, pn,
          gap_asymptotic(n, field, 0.0, AsymptoticOrder::NextOrder).sector_difference, tag);
  }
  return z;
}

double fourier_coefficient(int l, double field, double anisotropy, CoefficientMode mode) {
  check_point(field, anisotropy);
  if (l < 0) throw Error(ErrorKind::InvalidParameter, "Fourier index must be >= 0");
  if (mode == CoefficientMode::Asymptotic) return coefficient_asymptotic(l, field, anisotropy);
  if (const auto kink = integrand_kink(field, anisotropy)) {
    return coefficient_panels(l, field, anisotropy, *kink);
  }
  return coefficient_trapezoid(l, field, anisotropy);
}

double fourier_coefficient_envelope(int l, double field, double anisotropy) {
  check_point(field, anisotropy);
  const double dl = l;
  const auto c = asymptotic_constants(field, anisotropy);
  if (anisotropy == 0.0 && field <= 1.0) {
    return 4.0 * std::sqrt(1.0 - field * field) / (kPi * dl * dl) +
           4.0 * field / (kPi * dl * dl * dl);
  }
  if (c.regime == Regime::FerroIncommensurate) {
    return incommensurate_amplitude(field, anisotropy) * std::pow(c.alpha, dl) /
           (2.0 * dl * std::sqrt(dl));
  }
  return std::fabs(coefficient_asymptotic(l, field, anisotropy));
}

GapResult gap_fourier(int chain_size, double field, double anisotropy, int s_max) {
  check_point(field, anisotropy);
  if (chain_size < 2) throw Error(ErrorKind::InvalidSize, "chain size must be >= 2");
  if (s_max < 1 || s_max % 2 == 0) {
    throw Error(ErrorKind::InvalidParameter, "s_max must be a positive odd integer");
  }
  double sum = 0.0;
  for (int s = s_max; s >= 1; s -= 2) sum += fourier_coefficient(s * chain_size, field, anisotropy);
  double d = -2.0 * chain_size * sum;
  if (field > 1.0) d += 2.0 * (field - 1.0);
  if (chain_size % 2 != 0) d = -d;
  auto r = make_gap_result(d, Method::Fourier, regime_classify(field, anisotropy));
  r.truncation_residual =
      std::fabs(2.0 * chain_size * fourier_coefficient((s_max + 2) * chain_size, field, anisotropy));
  return r;
}

}  // namespace xygap
