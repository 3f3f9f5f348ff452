#include "xygap/lanczos.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "xygap/errors.hpp"

namespace xygap {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// Orthogonalizes w against the first `cols` columns of V (two Gram-Schmidt passes)
// and returns the projection coefficients.
VectorXd orthogonalize(const MatrixXd& V, Index cols, VectorXd& w) {
  VectorXd h = V.leftCols(cols).transpose() * w;
  w.noalias() -= V.leftCols(cols) * h;
  const VectorXd h2 = V.leftCols(cols).transpose() * w;
  w.noalias() -= V.leftCols(cols) * h2;
  return h + h2;
}

VectorXd random_vector(Index dim, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  VectorXd v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = u(rng);
  return v;
}

}  // namespace

LanczosResult lanczos_lowest(const LinearOperator& op, std::size_t dimension,
                             const LanczosOptions& options) {
  if (dimension == 0) throw Error(ErrorKind::InvalidParameter, "empty operator");
  if (options.n_eigs < 1) throw Error(ErrorKind::InvalidParameter, "n_eigs must be >= 1");
  const auto dim = static_cast<Index>(dimension);
  const Index nev = std::min<Index>(options.n_eigs, dim);
  const Index m = std::min<Index>(std::max<Index>(options.krylov_size, nev + 2), dim);
  const Index keep = std::min<Index>(m - 1, std::max<Index>(nev + 4, m / 3));

  std::mt19937 rng(options.seed);
  MatrixXd V = MatrixXd::Zero(dim, m + 1);
  MatrixXd H = MatrixXd::Zero(m + 1, m);
  VectorXd v0 = random_vector(dim, rng);
  V.col(0) = v0 / v0.norm();

  LanczosResult result;
  Index start = 0;
  VectorXd w(dim);
  for (int restart = 0; restart <= options.max_restarts; ++restart) {
    Index built = m;
    for (Index j = start; j < m; ++j) {
      op(std::span<const double>(V.col(j).data(), dimension),
         std::span<double>(w.data(), dimension));
      H.col(j).head(j + 1) = orthogonalize(V, j + 1, w);
      double beta = w.norm();
      if (beta < 1e-12 * std::max(1.0, H.col(j).head(j + 1).cwiseAbs().maxCoeff())) {
        if (j + 1 == dim) {
          built = j + 1;
          H(j + 1, j) = 0.0;
          break;
        }
        // invariant subspace: continue from a fresh orthogonal direction
        w = random_vector(dim, rng);
        orthogonalize(V, j + 1, w);
        beta = 0.0;
        V.col(j + 1) = w / w.norm();
      } else {
        V.col(j + 1) = w / beta;
      }
      H(j + 1, j) = beta;
    }

    MatrixXd T = H.topLeftCorner(built, built);
    T = 0.5 * (T + T.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<MatrixXd> eig(T);
    const VectorXd& theta = eig.eigenvalues();
    const MatrixXd& Y = eig.eigenvectors();
    const double beta_last = built < dim ? H(built, built - 1) : 0.0;

    bool converged = built == dim;
    if (!converged) {
      converged = true;
      for (Index i = 0; i < nev; ++i) {
        const double res = std::fabs(beta_last * Y(built - 1, i));
        if (res > options.tolerance * std::max(1.0, std::fabs(theta(i)))) converged = false;
      }
    }
    result.iterations = restart + 1;
    if (converged || restart == options.max_restarts) {
      result.converged = converged;
      result.eigenvalues.assign(theta.data(), theta.data() + nev);
      VectorXd g = V.leftCols(built) * Y.col(0);
      g /= g.norm();
      result.ground_vector.assign(g.data(), g.data() + dim);
      return result;
    }

    // Thick restart: keep the lowest Ritz vectors plus the residual direction.
    const MatrixXd X = V.leftCols(m) * Y.leftCols(keep);
    const VectorXd next = V.col(m);
    V.leftCols(keep) = X;
    V.col(keep) = next;
    H.setZero();
    for (Index i = 0; i < keep; ++i) {
      H(i, i) = theta(i);
      H(keep, i) = beta_last * Y(m - 1, i);
    }
    start = keep;
  }
  return result;
}

}  // namespace xygap
