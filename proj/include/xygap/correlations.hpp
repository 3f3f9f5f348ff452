#pragma once

#include <optional>
#include <string_view>

#include "xygap/model.hpp"

namespace xygap {

enum class CorrelationMethod { FiniteSum, Asymptotic, ED };

std::string_view to_string(CorrelationMethod method);

struct CorrelationResult {
  std::optional<int> chain_size;  // empty for the infinite chain
  int distance = 1;
  double value = 0.0;
  std::optional<Parity> sector;
  CorrelationMethod method = CorrelationMethod::FiniteSum;
};

/// Connected <sz_i sz_{i+R}> in the lowest state of the given sector.
CorrelationResult corr_zz_finite(int chain_size, int distance, double field,
                                 double anisotropy, Parity sector);

/// Large-R behaviour of the infinite chain correlator.
CorrelationResult corr_zz_infinite_asymptotic(int distance, double field, double anisotropy);

enum class Derivative { Central, Richardson };

/// d/dGamma of E_even - E_odd at fixed N and gamma.
double sector_difference_derivative(int chain_size, double field, double anisotropy,
                                    double step, Derivative scheme = Derivative::Richardson);

/// |G(2N, R=N, Odd) + (dD/dGamma / 2N)^2| with D = E_even - E_odd.
double gap_corr_identity_residual(int chain_size, double field, double anisotropy,
                                  double fd_step, Derivative scheme = Derivative::Richardson);

}  // namespace xygap
