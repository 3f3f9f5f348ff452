#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "xygap/correlations.hpp"
#include "xygap/ed.hpp"
#include "xygap/errors.hpp"
#include "xygap/gap_exact.hpp"
#include "xygap/hamiltonian.hpp"
#include "xygap/lanczos.hpp"
#include "xygap/sector_basis.hpp"

using namespace xygap;
using std::numbers::pi;

TEST_CASE("sector basis") {
  const SectorBasis even(5, Parity::Even), odd(5, Parity::Odd), full(5, std::nullopt);
  CHECK(even.size() == 16);
  CHECK(odd.size() == 16);
  CHECK(full.size() == 32);
  for (std::size_t i = 0; i < odd.size(); ++i) {
    CHECK(std::popcount(odd.state(i)) % 2 == 1);
    CHECK(odd.index_of(odd.state(i)) == static_cast<std::int32_t>(i));
  }
  CHECK(odd.index_of(0) == -1);
  CHECK_THROWS_AS(SectorBasis(25, std::nullopt), Error);
}

TEST_CASE("dense matrix equals the kronecker construction") {
  for (int n : {2, 3, 4, 5, 6}) {
    const ModelParams p{n, 0.37, 0.81, 0.23};
    const SectorBasis full(n, std::nullopt);
    const XyHamiltonian H(p, full);
    const Eigen::MatrixXd ref = oracle::hamiltonian(n, p.anisotropy, p.field, p.longitudinal_field);
    CHECK((H.dense() - ref).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("parallel and serial apply agree") {
  const SectorBasis basis(12, Parity::Odd);
  const XyHamiltonian H({12, 0.4, 0.7, 0.0}, basis);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> nd;
  std::vector<double> x(basis.size()), a(basis.size()), b(basis.size());
  for (auto& v : x) v = nd(rng);
  H.apply(x, a);
  H.apply_serial(x, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::fabs(a[i] - b[i]));
  CHECK(worst == 0.0);
}

TEST_CASE("longitudinal field needs the full space") {
  const SectorBasis even(4, Parity::Even);
  CHECK_THROWS_AS(XyHamiltonian({4, 0.5, 0.5, 0.1}, even), Error);
  try {
    ed_sector_spectrum({4, 0.5, 0.5, 0.1}, EdSector::Even);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SectorMixing);
  }
  const auto full = ed_sector_spectrum({4, 0.5, 0.5, 0.1}, EdSector::Full, 2);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(oracle::hamiltonian(4, 0.5, 0.5, 0.1));
  CHECK(full.lowest_energies[0] == doctest::Approx(es.eigenvalues()(0)).epsilon(1e-12));
}

TEST_CASE("lanczos matches dense diagonalization") {
  for (int n : {6, 8, 10}) {
    for (auto [G, g] : {std::pair{0.3, 0.2}, std::pair{1.0, 1.0}, std::pair{1.5, 0.5}, std::pair{0.0, 0.0}}) {
      for (auto s : {EdSector::Even, EdSector::Odd}) {
        const ModelParams p{n, g, G, 0.0};
        const auto d = ed_sector_spectrum(p, s, 2, EdSolver::Dense);
        const auto l = ed_sector_spectrum(p, s, 2, EdSolver::Lanczos);
        CHECK(l.lowest_energies[0] == doctest::Approx(d.lowest_energies[0]).epsilon(1e-10));
        CHECK(l.lowest_energies[1] == doctest::Approx(d.lowest_energies[1]).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("lanczos on a diagonal operator") {
  const std::size_t dim = 500;
  auto op = [](std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = (static_cast<double>(i) - 3.5) * x[i];
  };
  LanczosOptions opt;
  opt.n_eigs = 3;
  const auto r = lanczos_lowest(op, dim, opt);
  CHECK(r.converged);
  CHECK(r.eigenvalues[0] == doctest::Approx(-3.5));
  CHECK(r.eigenvalues[1] == doctest::Approx(-2.5));
  CHECK(r.eigenvalues[2] == doctest::Approx(-1.5));
  CHECK(std::fabs(r.ground_vector[0]) == doctest::Approx(1.0));
}

TEST_CASE("ed spectrum examples") {
  const auto e = ed_sector_spectrum({4, 0.0, 2.0, 0.0}, EdSector::Even);
  const auto o = ed_sector_spectrum({4, 0.0, 2.0, 0.0}, EdSector::Odd);
  CHECK(std::fabs(o.lowest_energies[0] - e.lowest_energies[0]) == doctest::Approx(2.0).epsilon(1e-10));
  const auto ising = ed_gap({4, 1.0, 0.0, 0.0});
  CHECK(ising.value < 1e-10);
  CHECK(ising.degenerate);
  CHECK(ed_gap({4, 0.0, 0.0, 0.0}).value == doctest::Approx(2 * std::sqrt(2.0) - 2).epsilon(1e-12));
  CHECK(ed_gap({8, 1.0, 1.0, 0.0}).value == doctest::Approx(gap_momentum_sum({8, 1.0, 1.0, 0.0}).value).epsilon(1e-10));
  CHECK(ed_gap({4, 0.0, 0.8, 0.0}).value == doctest::Approx(0.4).epsilon(1e-10));
  CHECK(ed_gap({6, 0.0, 0.5, 0.0}).value == doctest::Approx(std::sqrt(3.0) * std::tan(pi / 12)).epsilon(1e-10));
  CHECK(ed_gap({6, 0.0, 0.5, 0.0}).method == Method::ED);
  CHECK_THROWS_AS(ed_gap({15, 0.5, 0.5, 0.0}), Error);
}

TEST_CASE("ed gap equals momentum sums") {
  for (int n = 2; n <= 12; ++n) {
    for (double G : {0.0, 0.2, 0.5, 0.85, 1.0, 1.5}) {
      for (double g : {0.0, 0.15, 0.5, 0.95, 1.0}) {
        const auto ed = ed_gap({n, g, G, 0.0});
        const auto ex = gap_momentum_sum({n, g, G, 0.0});
        CHECK(std::fabs(ed.value - ex.value) <= 1e-8);
        if (!ed.degenerate && ex.value > 1e-8) CHECK(ed.ground_parity == ex.ground_parity);
      }
    }
  }
}

TEST_CASE("lanczos sizes beyond the dense limit") {
  const ModelParams p{13, 0.5, 0.7, 0.0};
  CHECK(ed_gap(p).value == doctest::Approx(gap_momentum_sum(p).value).epsilon(1e-9));
}

TEST_CASE("ed correlator") {
  CHECK(std::fabs(ed_corr_zz({4, 0.0, 10.0, 0.0}, 2, Parity::Even).value) < 1e-3);
  CHECK(ed_corr_zz({6, 0.2, 0.3, 0.0}, 3, Parity::Odd).value ==
        doctest::Approx(corr_zz_finite(6, 3, 0.3, 0.2, Parity::Odd).value).epsilon(1e-8));
  const auto s = ed_sector_spectrum({4, 0.4, 0.6, 0.0}, EdSector::Odd);
  double m = 0.0;
  const auto& v = *s.ground_vector;
  for (std::size_t i = 0; i < v.size(); ++i) m += v[i] * v[i] * ((s.basis->state(i) & 1u) ? 1.0 : -1.0);
  CHECK(ed_corr_zz(s, 4) == doctest::Approx(1 - m * m));
  for (int r = 1; r <= 4; ++r) CHECK(ed_corr_zz(s, r) == doctest::Approx(ed_corr_zz_serial(s, r)).epsilon(1e-14));
}
