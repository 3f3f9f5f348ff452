#pragma once

#include <complex>
#include <optional>
#include <string_view>

namespace xygap {

enum class Regime {
  IsotropicCritical,    // gamma = 0, Gamma < 1
  FerroCommensurate,    // Gamma < 1, Gamma^2 + gamma^2 > 1
  DisorderCircle,       // Gamma < 1, Gamma^2 + gamma^2 = 1
  FerroIncommensurate,  // Gamma^2 + gamma^2 < 1, gamma > 0
  CriticalLine,         // Gamma = 1
  Paramagnetic,         // Gamma > 1
};

std::string_view to_string(Regime regime);

inline constexpr double kRegimeTolerance = 1e-12;

Regime regime_classify(double field, double anisotropy);

/// Constants controlling the asymptotic decay and oscillation. Members that
/// are undefined for the given point are left empty.
struct AsymptoticConstants {
  Regime regime = Regime::IsotropicCritical;
  double alpha = 1.0;
  std::optional<double> psi;
  std::optional<double> psi0;
  std::optional<double> lambda1;
  std::optional<double> lambda2;
  // lambda2 off the real axis (Gamma^2 + gamma^2 < 1): modulus 1/alpha, phase -psi.
  std::optional<std::complex<double>> lambda2_complex;

  /// Throws Error{UndefinedConstant} when lambda2 is absent.
  double real_lambda2() const;
  double real_psi() const;
};

AsymptoticConstants asymptotic_constants(double field, double anisotropy);

}  // namespace xygap
