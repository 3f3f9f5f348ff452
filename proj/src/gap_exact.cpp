#include "xygap/gap_exact.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>

#include "xygap/errors.hpp"
#include "xygap/summation.hpp"

namespace xygap {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::MomentumSum: return "exact";
    case Method::IsotropicClosed: return "closed";
    case Method::Fourier: return "fourier";
    case Method::Asymptotic: return "asymptotic";
    case Method::ED: return "ed";
  }
  return "unknown";
}

GapResult make_gap_result(double sector_difference, Method method, Regime regime,
                          double tie_tolerance) {
  GapResult r;
  r.value = std::fabs(sector_difference);
  r.sector_difference = sector_difference;
  r.method = method;
  r.regime = regime;
  r.degenerate = r.value < tie_tolerance;
  r.ground_parity = (r.degenerate || sector_difference > 0.0) ? Parity::Even : Parity::Odd;
  return r;
}

namespace {

long double pi_penalty(int n, Parity sector, long double field) {
  return pi_mode_flipped(n, sector, static_cast<double>(field)) ? 2.0L * (field - 1.0L) : 0.0L;
}

__float128 cos_q(const Momentum& k) {
  if (k.numerator == 0) return 1;
  if (k.numerator == k.denominator) return -1;
  if (2 * std::abs(k.numerator) == k.denominator) return 0;
  return cosq(M_PIq * k.numerator / k.denominator);
}

// Same sum in quad precision, for differences far below the long double roundoff.
long double sector_difference_q(int n, long double field, long double anisotropy) {
  const __float128 G = field, g = anisotropy;
  __float128 sum = 0;
  auto eps = [&](const Momentum& k) {
    const __float128 c = cos_q(k);
    const __float128 s2 = (1 - c) * (1 + c);
    return sqrtq((c + G) * (c + G) + g * g * s2);
  };
  for (const auto& k : momentum_grid(n, Parity::Odd).momenta) sum -= eps(k);
  for (const auto& k : momentum_grid(n, Parity::Even).momenta) sum += eps(k);
  sum += static_cast<__float128>(pi_penalty(n, Parity::Odd, field));
  sum -= static_cast<__float128>(pi_penalty(n, Parity::Even, field));
  // below this the sign is roundoff; report an exact tie
  const __float128 floor_q = 64 * n * FLT128_EPSILON * (1 + fabsq(G) + fabsq(g));
  if (fabsq(sum) < floor_q) return 0.0L;
  return static_cast<long double>(sum);
}

void check_analytic(const ModelParams& params) {
  params.validate();
  require_transverse_only(params);
}

}  // namespace

bool pi_mode_flipped(int n_sites, Parity sector, double field) {
  return field > 1.0 && (n_sites % 2 == 0) == (sector == Parity::Odd);
}

long double sector_ground_energy(const ModelParams& params, Parity sector) {
  check_analytic(params);
  const auto grid = momentum_grid(params.n_sites, sector);
  std::vector<long double> terms;
  terms.reserve(grid.momenta.size());
  for (const auto& k : grid.momenta) {
    terms.push_back(-dispersion(k, params.field, params.anisotropy));
  }
  return sum_descending(std::move(terms)) + pi_penalty(params.n_sites, sector, params.field);
}

long double sector_difference(const ModelParams& params) {
  check_analytic(params);
  return sector_difference_unchecked(params.n_sites, params.field, params.anisotropy);
}

long double sector_difference_unchecked(int n_sites, long double field, long double anisotropy) {
  std::vector<long double> terms;
  terms.reserve(2 * static_cast<std::size_t>(n_sites) + 2);
  for (const auto& k : momentum_grid(n_sites, Parity::Odd).momenta) {
    terms.push_back(-dispersion(k, field, anisotropy));
  }
  for (const auto& k : momentum_grid(n_sites, Parity::Even).momenta) {
    terms.push_back(dispersion(k, field, anisotropy));
  }
  terms.push_back(pi_penalty(n_sites, Parity::Odd, field));
  terms.push_back(-pi_penalty(n_sites, Parity::Even, field));
  const long double d = sum_descending(std::move(terms));
  const long double roundoff =
      64.0L * n_sites * LDBL_EPSILON * (1.0L + std::fabs(field) + std::fabs(anisotropy));
  if (std::fabs(d) < 1e4L * roundoff) return sector_difference_q(n_sites, field, anisotropy);
  return d;
}

GapResult gap_momentum_sum(const ModelParams& params) {
  const double d = static_cast<double>(sector_difference(params));
  return make_gap_result(d, Method::MomentumSum,
                         regime_classify(params.field, params.anisotropy));
}

OccupationIndices occupation_indices(int chain_size, double field) {
  if (chain_size < 2) {
    throw Error(ErrorKind::InvalidSize, "chain size must be >= 2");
  }
  if (!(field >= 0.0 && field < 1.0)) {
    throw Error(ErrorKind::OutOfDomain, "occupation indices need 0 <= Gamma < 1");
  }
  OccupationIndices o;
  o.x = std::acos(-field);
  double y = chain_size * o.x / (2.0 * std::numbers::pi);
  if (std::fabs(y - std::round(y)) < 1e-12) y = std::round(y);
  o.n = static_cast<int>(std::floor(y));
  o.m = static_cast<int>(std::floor(y + 0.5));
  o.delta1 = y - o.n;
  o.delta2 = y + 0.5 - o.m;
  return o;
}

GapResult gap_isotropic_closed(int chain_size, double field) {
  if (chain_size < 2) throw Error(ErrorKind::InvalidSize, "chain size must be >= 2");
  if (chain_size % 2 != 0) {
    throw Error(ErrorKind::OutOfDomain, "closed isotropic form needs even N");
  }
  if (!(field >= 0.0 && field < 1.0)) {
    throw Error(ErrorKind::OutOfDomain, "closed isotropic form needs 0 <= Gamma < 1");
  }
  const double pi = std::numbers::pi;
  if (std::cos(pi / chain_size) < field) {
    // Only k = 0 is below the Fermi point; the odd sector wins by 2(1 - Gamma).
    return make_gap_result(-2.0 * (1.0 - field), Method::IsotropicClosed,
                           Regime::IsotropicCritical);
  }
  const auto o = occupation_indices(chain_size, field);
  const bool first = o.delta1 < 0.5;
  const double a = first ? 1.0 - 4.0 * o.delta1 : 3.0 - 4.0 * o.delta1;
  const double h = pi / (2.0 * chain_size);
  const double inner =
      2.0 * ((field * std::cos(h * a) + std::sqrt(1.0 - field * field) * std::sin(h * a)) /
                 std::cos(h) -
             field);
  return make_gap_result(first ? inner : -inner, Method::IsotropicClosed,
                         Regime::IsotropicCritical);
}

std::vector<GapDip> smallest_gaps(double field, double anisotropy, int n_min, int n_max,
                                  int n_step, std::size_t count) {
  if (n_min < 2 || n_max < n_min || n_step < 1) {
    throw Error(ErrorKind::InvalidParameter, "bad N range for the dip search");
  }
  std::vector<GapDip> dips;
  for (int n = n_min; n <= n_max; n += n_step) {
    dips.push_back({n, gap_momentum_sum({n, anisotropy, field, 0.0}).value});
  }
  const auto keep = std::min(count, dips.size());
  std::partial_sort(dips.begin(), dips.begin() + static_cast<std::ptrdiff_t>(keep), dips.end(),
                    [](const GapDip& a, const GapDip& b) { return a.gap < b.gap; });
  dips.resize(keep);
  return dips;
}

}  // namespace xygap
