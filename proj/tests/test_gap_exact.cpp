#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "xygap/errors.hpp"
#include "xygap/gap_exact.hpp"

using namespace xygap;
using std::numbers::pi;

TEST_CASE("sector ground energies") {
  CHECK(static_cast<double>(sector_ground_energy({4, 0.0, 0.0, 0.0}, Parity::Even)) ==
        doctest::Approx(-2 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(static_cast<double>(sector_ground_energy({4, 0.0, 0.0, 0.0}, Parity::Odd)) ==
        doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(static_cast<double>(sector_ground_energy({2, 1.0, 0.5, 0.0}, Parity::Even)) ==
        doctest::Approx(-2 * std::sqrt(1.25)).epsilon(1e-15));
  CHECK_THROWS_AS(sector_ground_energy({4, 0.0, 0.0, 0.1}, Parity::Even), Error);
}

TEST_CASE("gap from momentum sums") {
  auto r = gap_momentum_sum({4, 0.0, 0.0, 0.0});
  CHECK(r.value == doctest::Approx(2 * std::sqrt(2.0) - 2).epsilon(1e-15));
  CHECK(r.ground_parity == Parity::Even);
  CHECK(r.method == Method::MomentumSum);
  CHECK(gap_momentum_sum({2, 1.0, 0.5, 0.0}).value == doctest::Approx(2 * std::sqrt(1.25) - 2));
  r = gap_momentum_sum({8, 1.0, 1.0, 0.0});
  CHECK(r.value == doctest::Approx(0.196980).epsilon(1e-5));
  CHECK(std::fabs(r.value / (pi / 16) - 1) < 0.005);
  CHECK(gap_momentum_sum({4, 0.0, 0.8, 0.0}).value == doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("momentum sums agree with a plain double oracle") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> size(2, 60);
  std::uniform_real_distribution<double> field(0.0, 2.0), g(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const int n = size(rng);
    const double G = field(rng), gg = g(rng);
    const auto r = gap_momentum_sum({n, gg, G, 0.0});
    CHECK(r.value >= 0.0);
    CHECK(std::fabs(r.value - oracle::gap(n, G, gg)) <= 1e-12 * n);
    const double diff = oracle::sector_energy(n, G, gg, 1) - oracle::sector_energy(n, G, gg, 0);
    if (std::fabs(diff) > 1e-10) {
      CHECK(r.ground_parity == (diff > 0 ? Parity::Even : Parity::Odd));
    }
  }
}

TEST_CASE("degenerate results") {
  // zero-field Ising chain: both sectors share the ground energy up to exponentially small terms
  const auto r = gap_momentum_sum({4, 1.0, 0.0, 0.0});
  CHECK(r.value < 1e-14);
  CHECK(r.degenerate);
  CHECK(r.ground_parity == Parity::Even);
  const auto m = make_gap_result(-0.25, Method::MomentumSum, Regime::Paramagnetic);
  CHECK(m.value == 0.25);
  CHECK(m.ground_parity == Parity::Odd);
  CHECK_FALSE(m.degenerate);
}

TEST_CASE("occupation indices") {
  auto o = occupation_indices(6, 0.5);
  CHECK(o.n == 2);
  CHECK(o.m == 2);
  CHECK(o.delta1 == 0.0);
  CHECK(o.delta2 == 0.5);
  CHECK(o.x == doctest::Approx(2 * pi / 3));
  CHECK(occupation_indices(7, 0.5).delta1 == doctest::Approx(1.0 / 3));
  o = occupation_indices(4, 0.0);
  CHECK(o.n == 1);
  CHECK(o.m == 1);
  CHECK(o.delta1 == 0.0);
  CHECK(o.delta2 == 0.5);
  CHECK_THROWS_AS(occupation_indices(4, 1.0), Error);
}

TEST_CASE("closed isotropic gap") {
  CHECK(gap_isotropic_closed(6, 0.5).value == doctest::Approx(std::sqrt(3.0) * std::tan(pi / 12)).epsilon(1e-15));
  CHECK(gap_isotropic_closed(4, 0.8).value == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(gap_isotropic_closed(4, 0.0).value == doctest::Approx(2 * std::tan(pi / 8)).epsilon(1e-15));
  for (int l = 1; l <= 50; ++l) {
    const int n = 6 * l;
    CHECK(gap_isotropic_closed(n, 0.5).value ==
          doctest::Approx(std::sqrt(3.0) * std::tan(pi / (2 * n))).epsilon(1e-12));
  }
  for (int n = 2; n <= 40; n += 2) {
    if (std::cos(pi / n) < 0.95) CHECK(gap_isotropic_closed(n, 0.95).value == doctest::Approx(0.1));
  }
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> half(1, 500);
  std::uniform_real_distribution<double> field(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 * half(rng);
    const double G = field(rng);
    const auto c = gap_isotropic_closed(n, G);
    const auto e = gap_momentum_sum({n, 0.0, G, 0.0});
    CHECK(std::fabs(c.value - e.value) <= 1e-12 * n);
    if (e.value > 1e-9) CHECK(c.ground_parity == e.ground_parity);
  }
  CHECK_THROWS_AS(gap_isotropic_closed(5, 0.3), Error);
  CHECK_THROWS_AS(gap_isotropic_closed(6, 1.0), Error);
}

TEST_CASE("smallest gaps search") {
  const auto dips = smallest_gaps(0.2, 0.15, 10, 60, 1, 3);
  REQUIRE(dips.size() == 3);
  CHECK(dips[0].gap <= dips[1].gap);
  CHECK(dips[1].gap <= dips[2].gap);
  for (const auto& d : dips) CHECK(d.gap == doctest::Approx(gap_momentum_sum({d.n_sites, 0.15, 0.2, 0.0}).value));
}
