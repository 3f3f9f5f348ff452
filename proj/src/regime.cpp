#include "xygap/regime.hpp"

#include <algorithm>
#include <cmath>

#include "xygap/errors.hpp"

namespace xygap {

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::IsotropicCritical: return "IsotropicCritical";
    case Regime::FerroCommensurate: return "FerroCommensurate";
    case Regime::DisorderCircle: return "DisorderCircle";
    case Regime::FerroIncommensurate: return "FerroIncommensurate";
    case Regime::CriticalLine: return "CriticalLine";
    case Regime::Paramagnetic: return "Paramagnetic";
  }
  return "unknown";
}

Regime regime_classify(double field, double anisotropy) {
  if (std::fabs(field - 1.0) <= kRegimeTolerance) return Regime::CriticalLine;
  if (field > 1.0) return Regime::Paramagnetic;
  if (anisotropy == 0.0) return Regime::IsotropicCritical;
  const double r = field * field + anisotropy * anisotropy - 1.0;
  if (std::fabs(r) <= kRegimeTolerance) return Regime::DisorderCircle;
  return r > 0.0 ? Regime::FerroCommensurate : Regime::FerroIncommensurate;
}

double AsymptoticConstants::real_lambda2() const {
  if (!lambda2) {
    throw Error(ErrorKind::UndefinedConstant,
                "lambda2 is not real or not defined at this (Gamma, gamma)");
  }
  return *lambda2;
}

double AsymptoticConstants::real_psi() const {
  if (!psi) throw Error(ErrorKind::UndefinedConstant, "psi is not defined at this (Gamma, gamma)");
  return *psi;
}

AsymptoticConstants asymptotic_constants(double field, double anisotropy) {
  AsymptoticConstants c;
  c.regime = regime_classify(field, anisotropy);
  const double g = anisotropy;
  const double G = field;
  c.alpha = std::sqrt((1.0 - g) / (1.0 + g));
  const double r = G * G + g * g - 1.0;
  const bool on_circle = std::fabs(r) <= kRegimeTolerance;

  if (g < 1.0 && (r <= 0.0 || on_circle)) {
    const double q = std::clamp(G / std::sqrt(1.0 - g * g), -1.0, 1.0);
    c.psi = std::acos(q);
    c.psi0 = std::atan2(g * G, std::sqrt(std::max(0.0, -r)));
  }
  if (g < 1.0) {
    if (r >= 0.0 || on_circle) {
      const double s = std::sqrt(std::max(0.0, r));
      c.lambda1 = (G + s) / (1.0 - g);
      // (G - s)/(1 - g) rewritten to avoid cancellation
      c.lambda2 = (1.0 + g) / (G + s);
    } else {
      c.lambda2_complex = std::polar(1.0 / c.alpha, -*c.psi);
    }
  }
  return c;
}

}  // namespace xygap
