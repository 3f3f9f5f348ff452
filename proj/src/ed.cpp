#include "xygap/ed.hpp"

#include <Eigen/Dense>
#include <bit>
#include <stdexcept>
#include <string>

#include "xygap/errors.hpp"
#include "xygap/hamiltonian.hpp"
#include "xygap/lanczos.hpp"
#include "xygap/regime.hpp"

namespace xygap {

EdSector to_ed_sector(Parity p) { return p == Parity::Even ? EdSector::Even : EdSector::Odd; }

SectorSpectrum ed_sector_spectrum(const ModelParams& params, EdSector sector, int n_eigs,
                                  EdSolver solver) {
  params.validate();
  if (params.n_sites > kMaxEdSites) {
    throw Error(ErrorKind::SizeCap, "exact diagonalization is capped at N = " +
                                        std::to_string(kMaxEdSites));
  }
  if (params.longitudinal_field != 0.0 && sector != EdSector::Full) {
    throw Error(ErrorKind::SectorMixing, "h != 0 needs the full (merged) space");
  }
  if (n_eigs < 1) throw Error(ErrorKind::InvalidParameter, "n_eigs must be >= 1");

  std::optional<Parity> parity;
  if (sector == EdSector::Even) parity = Parity::Even;
  if (sector == EdSector::Odd) parity = Parity::Odd;
  auto basis = std::make_shared<const SectorBasis>(params.n_sites, parity);
  const XyHamiltonian ham(params, *basis);

  if (solver == EdSolver::Auto) {
    solver = params.n_sites <= kMaxDenseSites ? EdSolver::Dense : EdSolver::Lanczos;
  }

  SectorSpectrum out;
  out.chain_size = params.n_sites;
  out.sector = sector;
  out.basis = basis;
  const auto dim = static_cast<Eigen::Index>(ham.dimension());
  const Eigen::Index want = std::min<Eigen::Index>(n_eigs, dim);
  if (solver == EdSolver::Dense) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(ham.dense());
    out.lowest_energies.assign(eig.eigenvalues().data(), eig.eigenvalues().data() + want);
    const Eigen::VectorXd g = eig.eigenvectors().col(0);
    out.ground_vector = std::make_shared<const std::vector<double>>(g.data(), g.data() + dim);
  } else {
    LanczosOptions opt;
    opt.n_eigs = static_cast<int>(want);
    auto res = lanczos_lowest(
        [&ham](std::span<const double> x, std::span<double> y) { ham.apply(x, y); },
        ham.dimension(), opt);
    if (!res.converged) throw std::runtime_error("Lanczos iteration did not converge");
    out.lowest_energies = std::move(res.eigenvalues);
    out.ground_vector = std::make_shared<const std::vector<double>>(std::move(res.ground_vector));
  }
  return out;
}

GapResult ed_gap(const ModelParams& params, EdSolver solver) {
  const double even = ed_sector_spectrum(params, EdSector::Even, 1, solver).lowest_energies[0];
  const double odd = ed_sector_spectrum(params, EdSector::Odd, 1, solver).lowest_energies[0];
  return make_gap_result(odd - even, Method::ED, regime_classify(params.field, params.anisotropy),
                         kEdDegeneracyTolerance);
}

namespace {

void check_distance(const SectorSpectrum& spectrum, int distance) {
  if (!spectrum.ground_vector || !spectrum.basis) {
    throw Error(ErrorKind::InvalidParameter, "spectrum carries no ground vector");
  }
  if (distance < 1 || distance > spectrum.chain_size) {
    throw Error(ErrorKind::InvalidParameter, "distance must lie in [1, N]");
  }
}

double spin(BasisState s, int site) { return ((s >> site) & 1U) ? 1.0 : -1.0; }

double connected(const std::vector<double>& mag, const std::vector<double>& pair, int n,
                 int distance) {
  double total = 0.0;
  for (int i = 0; i < n; ++i) total += pair[i] - mag[i] * mag[(i + distance) % n];
  return total / n;
}

}  // namespace

double ed_corr_zz(const SectorSpectrum& spectrum, int distance) {
  check_distance(spectrum, distance);
  const int n = spectrum.chain_size;
  const auto& psi = *spectrum.ground_vector;
  const auto& basis = *spectrum.basis;
  std::vector<double> mag(n, 0.0), pair(n, 0.0);
  double* mp = mag.data();
  double* pp = pair.data();
  const auto dim = static_cast<std::int64_t>(psi.size());
#pragma omp parallel for schedule(static) reduction(+ : mp[:n], pp[:n])
  for (std::int64_t k = 0; k < dim; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const double p = psi[idx] * psi[idx];
    const BasisState s = basis.state(idx);
    for (int i = 0; i < n; ++i) {
      const double zi = spin(s, i);
      mp[i] += p * zi;
      pp[i] += p * zi * spin(s, (i + distance) % n);
    }
  }
  return connected(mag, pair, n, distance);
}

double ed_corr_zz_serial(const SectorSpectrum& spectrum, int distance) {
  check_distance(spectrum, distance);
  const int n = spectrum.chain_size;
  const auto& psi = *spectrum.ground_vector;
  std::vector<double> mag(n, 0.0), pair(n, 0.0);
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const double p = psi[k] * psi[k];
    const BasisState s = spectrum.basis->state(k);
    for (int i = 0; i < n; ++i) {
      mag[i] += p * spin(s, i);
      pair[i] += p * spin(s, i) * spin(s, (i + distance) % n);
    }
  }
  return connected(mag, pair, n, distance);
}

CorrelationResult ed_corr_zz(const ModelParams& params, int distance, Parity sector) {
  if (params.longitudinal_field != 0.0) {
    throw Error(ErrorKind::SectorMixing, "sector correlators need h = 0");
  }
  const auto spectrum = ed_sector_spectrum(params, to_ed_sector(sector), 1);
  CorrelationResult r;
  r.chain_size = params.n_sites;
  r.distance = distance;
  r.sector = sector;
  r.method = CorrelationMethod::ED;
  r.value = ed_corr_zz(spectrum, distance);
  return r;
}

}  // namespace xygap
