#pragma once

#include <functional>
#include <span>
#include <vector>

namespace xygap {

using LinearOperator = std::function<void(std::span<const double>, std::span<double>)>;

struct LanczosOptions {
  int n_eigs = 1;
  int krylov_size = 60;
  int max_restarts = 200;
  double tolerance = 1e-12;  // residual relative to max(1, |theta|)
  unsigned seed = 12345;
};

struct LanczosResult {
  std::vector<double> eigenvalues;  // ascending
  std::vector<double> ground_vector;
  int iterations = 0;
  bool converged = false;
};

/// Thick-restart Lanczos with full reorthogonalization for the lowest
/// eigenpairs of a symmetric operator of the given dimension.
LanczosResult lanczos_lowest(const LinearOperator& op, std::size_t dimension,
                             const LanczosOptions& options = {});

}  // namespace xygap
