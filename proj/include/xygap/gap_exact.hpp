#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "xygap/model.hpp"
#include "xygap/regime.hpp"

namespace xygap {

enum class Method { MomentumSum, IsotropicClosed, Fourier, Asymptotic, ED };

std::string_view to_string(Method method);

struct GapResult {
  double value = 0.0;
  Parity ground_parity = Parity::Even;
  Method method = Method::MomentumSum;
  Regime regime = Regime::IsotropicCritical;
  bool degenerate = false;
  // E_odd - E_even as produced by the method (signed).
  double sector_difference = 0.0;
  std::optional<double> truncation_residual;
  bool super_exponential = false;
};

/// Gaps below this are reported as a tie with Even ground parity.
inline constexpr double kDegenerateGapTolerance = 1e-14;

/// Builds a result from a signed E_odd - E_even.
GapResult make_gap_result(double sector_difference, Method method, Regime regime,
                          double tie_tolerance = kDegenerateGapTolerance);

long double sector_ground_energy(const ModelParams& params, Parity sector);

/// E_odd - E_even, evaluated without forming the two totals separately.
long double sector_difference(const ModelParams& params);

/// Same sum without parameter validation; Gamma may be negative (finite differences).
long double sector_difference_unchecked(int n_sites, long double field, long double anisotropy);

/// True when the lowest state of this sector leaves the k = pi mode empty,
/// which happens for Gamma > 1 in the even-N Odd and odd-N Even sectors.
bool pi_mode_flipped(int n_sites, Parity sector, double field);

GapResult gap_momentum_sum(const ModelParams& params);

struct OccupationIndices {
  int n = 0;
  int m = 0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double x = 0.0;
};

/// Throws Error{OutOfDomain} unless 0 <= Gamma < 1.
OccupationIndices occupation_indices(int chain_size, double field);

/// Isotropic chain, even N only.
GapResult gap_isotropic_closed(int chain_size, double field);

struct GapDip {
  int n_sites = 0;
  double gap = 0.0;
};

/// Chain sizes in [n_min, n_max] (stride n_step) with the smallest exact gaps,
/// sorted by gap. A numerical search only; nothing is claimed about the limit.
std::vector<GapDip> smallest_gaps(double field, double anisotropy, int n_min, int n_max,
                                  int n_step, std::size_t count);

}  // namespace xygap
