#pragma once

#include <vector>

#include "xygap/gap_exact.hpp"
#include "xygap/regime.hpp"

namespace xygap {

enum class AsymptoticOrder { Leading, NextOrder };

/// Large-N gap. Odd N reuses the even-N magnitude with the parity reversed.
GapResult gap_asymptotic(int chain_size, double field, double anisotropy,
                         AsymptoticOrder order = AsymptoticOrder::Leading);

/// Non-oscillating envelope of the incommensurate gap, amplitude * alpha^N / sqrt(N).
double incommensurate_gap_envelope(int chain_size, double field, double anisotropy);

/// Sign changes (as midpoints between consecutive even N) of the signed
/// isotropic gap from the momentum sums and from both asymptotic orders.
struct ZeroPositions {
  std::vector<double> exact;
  std::vector<double> leading;
  std::vector<double> next_order;
};

ZeroPositions isotropic_zero_positions(double field, int n_min, int n_max);

enum class CoefficientMode { Quadrature, Asymptotic };

/// a_l = (1/pi) int_{-pi}^{pi} cos(kl) sqrt((Gamma - cos k)^2 + gamma^2 sin^2 k) dk.
double fourier_coefficient(int l, double field, double anisotropy,
                           CoefficientMode mode = CoefficientMode::Quadrature);

inline constexpr int kMinAsymptoticOrder = 8;

/// Magnitude scale of the asymptotic a_l (its non-oscillating envelope).
double fourier_coefficient_envelope(int l, double field, double anisotropy);

inline constexpr int kDefaultSMax = 9;

GapResult gap_fourier(int chain_size, double field, double anisotropy,
                      int s_max = kDefaultSMax);

}  // namespace xygap
