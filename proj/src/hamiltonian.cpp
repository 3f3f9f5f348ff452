#include "xygap/hamiltonian.hpp"

#include <bit>

#include "xygap/errors.hpp"

namespace xygap {

XyHamiltonian::XyHamiltonian(const ModelParams& params, const SectorBasis& basis)
    : params_(params), basis_(basis) {
  params_.validate();
  if (basis.n_sites() != params.n_sites) {
    throw Error(ErrorKind::InvalidParameter, "basis and model disagree on the chain size");
  }
  if (params.longitudinal_field != 0.0 && basis.parity()) {
    throw Error(ErrorKind::SectorMixing, "a longitudinal field couples the two parity sectors");
  }
  const int n = params.n_sites;
  // N = 2 keeps both directed bonds (0,1) and (1,0), as the periodic sum prescribes.
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    bond_first_.push_back(i);
    bond_second_.push_back(j);
    bond_masks_.push_back((BasisState{1} << i) | (BasisState{1} << j));
  }
  diagonal_.resize(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const int up = std::popcount(basis.state(k));
    diagonal_[k] = -params.field * (2.0 * up - n);
  }
}

namespace {

template <class Visit>
bool for_each_offdiagonal(BasisState s, const SectorBasis& basis,
                          const std::vector<BasisState>& masks, const std::vector<int>& first,
                          const std::vector<int>& second, double anisotropy, double h,
                          int n_sites, Visit&& visit) {
  bool leak = false;
  for (std::size_t b = 0; b < masks.size(); ++b) {
    const BasisState t = s ^ masks[b];
    const bool aligned = ((s >> first[b]) & 1U) == ((s >> second[b]) & 1U);
    const auto idx = basis.index_of(t);
    if (idx < 0) {
      leak = true;
      continue;
    }
    visit(static_cast<std::size_t>(idx), aligned ? -anisotropy : -1.0);
  }
  if (h != 0.0) {
    for (int i = 0; i < n_sites; ++i) {
      const auto idx = basis.index_of(s ^ (BasisState{1} << i));
      if (idx < 0) {
        leak = true;
        continue;
      }
      visit(static_cast<std::size_t>(idx), -h);
    }
  }
  return leak;
}

void check_sizes(std::size_t dim, std::span<const double> x, std::span<double> y) {
  if (x.size() != dim || y.size() != dim) {
    throw Error(ErrorKind::InvalidParameter, "vector length does not match the basis");
  }
}

}  // namespace

void XyHamiltonian::apply(std::span<const double> x, std::span<double> y) const {
  check_sizes(dimension(), x, y);
  const auto dim = static_cast<std::int64_t>(dimension());
  bool leak = false;
#pragma omp parallel for schedule(static) reduction(|| : leak)
  for (std::int64_t i = 0; i < dim; ++i) {
    const auto row_index = static_cast<std::size_t>(i);
    double acc = diagonal_[row_index] * x[row_index];
    leak = for_each_offdiagonal(basis_.state(row_index), basis_, bond_masks_, bond_first_,
                                bond_second_, params_.anisotropy, params_.longitudinal_field,
                                params_.n_sites,
                                [&](std::size_t j, double amp) { acc += amp * x[j]; }) ||
           leak;
    y[row_index] = acc;
  }
  if (leak) throw Error(ErrorKind::SectorMixing, "H moved amplitude out of the parity sector");
}

void XyHamiltonian::apply_serial(std::span<const double> x, std::span<double> y) const {
  check_sizes(dimension(), x, y);
  for (std::size_t i = 0; i < dimension(); ++i) y[i] = row(i, x);
}

double XyHamiltonian::row(std::size_t i, std::span<const double> x) const {
  double acc = diagonal_[i] * x[i];
  const bool leak = for_each_offdiagonal(
      basis_.state(i), basis_, bond_masks_, bond_first_, bond_second_, params_.anisotropy,
      params_.longitudinal_field, params_.n_sites,
      [&](std::size_t j, double amp) { acc += amp * x[j]; });
  if (leak) throw Error(ErrorKind::SectorMixing, "H moved amplitude out of the parity sector");
  return acc;
}

Eigen::MatrixXd XyHamiltonian::dense() const {
  const auto dim = static_cast<Eigen::Index>(dimension());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t i = 0; i < dimension(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    m(r, r) += diagonal_[i];
    const bool leak = for_each_offdiagonal(
        basis_.state(i), basis_, bond_masks_, bond_first_, bond_second_, params_.anisotropy,
        params_.longitudinal_field, params_.n_sites,
        [&](std::size_t j, double amp) { m(r, static_cast<Eigen::Index>(j)) += amp; });
    if (leak) throw Error(ErrorKind::SectorMixing, "H moved amplitude out of the parity sector");
  }
  return m;
}

}  // namespace xygap
