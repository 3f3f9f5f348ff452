#pragma once

#include <string_view>
#include <vector>

namespace xygap {

/// Parity of the fermion number N_c (equivalently of S^z_tot + N/2).
/// Even sectors use the antiperiodic fermion grid, Odd sectors the periodic one.
enum class Parity { Even, Odd };

std::string_view to_string(Parity parity);
Parity parse_parity(std::string_view text);
constexpr Parity opposite(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

/// Periodic XY chain in a transverse field. The longitudinal field is only
/// understood by the exact-diagonalization oracle.
struct ModelParams {
  int n_sites = 2;
  double anisotropy = 0.0;          // gamma in [0, 1]
  double field = 0.0;               // transverse field Gamma >= 0
  double longitudinal_field = 0.0;  // h

  /// Throws Error{InvalidSize | InvalidParameter} on a bad parameter set.
  void validate() const;
};

/// Throws Error{UnsupportedField} when h != 0.
void require_transverse_only(const ModelParams& params);

/// Wave number k = numerator * pi / denominator with numerator in (-denominator, denominator].
/// Kept rational so that grid identities and the special points 0, pi/2, pi stay exact.
struct Momentum {
  int numerator = 0;
  int denominator = 1;

  double radians() const;
  long double radians_ld() const;
  // Exact at multiples of pi/2.
  long double cos_ld() const;
  long double sin_ld() const;

  bool is_zero() const { return numerator == 0; }
  bool is_pi() const { return numerator == denominator; }
  friend bool operator==(const Momentum&, const Momentum&) = default;
};

struct MomentumGrid {
  int chain_size = 0;
  Parity sector = Parity::Even;
  std::vector<Momentum> momenta;  // ascending in k
};

/// Allowed wave numbers of the given parity sector. Odd sectors take even
/// numerators (periodic fermions), Even sectors odd numerators (antiperiodic).
MomentumGrid momentum_grid(int chain_size, Parity sector);

/// Single-mode energy eps(k) = sqrt((cos k + Gamma)^2 + (gamma sin k)^2).
double dispersion(double k, double field, double anisotropy);
long double dispersion(const Momentum& k, long double field, long double anisotropy);

struct BogoliubovAngle {
  double cos_theta = 1.0;
  double sin_theta = 0.0;
};

/// cos(theta_k) = (cos k + Gamma)/eps(k), sin(theta_k) = gamma sin k / eps(k).
/// Throws Error{DegenerateMode} where eps(k) vanishes.
BogoliubovAngle bogoliubov_angle(double k, double field, double anisotropy);
BogoliubovAngle bogoliubov_angle(const Momentum& k, double field, double anisotropy);

/// Threshold below which eps(k) counts as an exact zero.
inline constexpr double kDegenerateModeTolerance = 1e-13;

}  // namespace xygap
