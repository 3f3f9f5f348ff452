#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "xygap/model.hpp"
#include "xygap/sector_basis.hpp"

namespace xygap {

/// Matrix-free XY Hamiltonian on a SectorBasis. Real symmetric in the z basis:
/// each bond flips both spins with amplitude -gamma (aligned) or -1 (anti-aligned),
/// the transverse field is diagonal and h flips single spins.
class XyHamiltonian {
 public:
  XyHamiltonian(const ModelParams& params, const SectorBasis& basis);

  std::size_t dimension() const { return basis_.size(); }
  const SectorBasis& basis() const { return basis_; }

  /// y = H x, OpenMP over rows. Throws Error{SectorMixing} if a flip leaves the basis.
  void apply(std::span<const double> x, std::span<double> y) const;
  void apply_serial(std::span<const double> x, std::span<double> y) const;

  Eigen::MatrixXd dense() const;

 private:
  double row(std::size_t i, std::span<const double> x) const;

  ModelParams params_;
  const SectorBasis& basis_;
  std::vector<BasisState> bond_masks_;
  std::vector<int> bond_first_;
  std::vector<int> bond_second_;
  std::vector<double> diagonal_;
};

}  // namespace xygap
