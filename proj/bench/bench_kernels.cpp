// Serial vs OpenMP timings for the parallel kernels.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "xygap/ed.hpp"
#include "xygap/hamiltonian.hpp"
#include "xygap/scan.hpp"
#include "xygap/sector_basis.hpp"

using namespace xygap;

namespace {

template <class F>
double seconds(F&& f, int reps) {
  f();
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %10.3f ms   openmp %10.3f ms   speedup %5.2fx\n", name, serial * 1e3,
              parallel * 1e3, serial / parallel);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  {
    const SectorBasis basis(16, std::nullopt);
    const XyHamiltonian H({16, 0.4, 0.7, 0.2}, basis);
    std::vector<double> x(basis.size()), y(basis.size());
    std::mt19937_64 rng(1);
    std::normal_distribution<double> nd;
    for (auto& v : x) v = nd(rng);
    report("apply N=16 full space", seconds([&] { H.apply_serial(x, y); }, 10),
           seconds([&] { H.apply(x, y); }, 10));
  }

  {
    const auto s = ed_sector_spectrum({14, 0.4, 0.7, 0.0}, EdSector::Odd, 1);
    auto all_r = [&](auto corr) {
      double acc = 0.0;
      for (int r = 1; r <= 14; ++r) acc += corr(s, r);
      return acc;
    };
    report("ed correlator N=14, R=1..14",
           seconds([&] { all_r([](const SectorSpectrum& sp, int r) { return ed_corr_zz_serial(sp, r); }); }, 5),
           seconds([&] { all_r([](const SectorSpectrum& sp, int r) { return ed_corr_zz(sp, r); }); }, 5));
  }

  {
    ScanSpec spec;
    spec.n_min = 2;
    spec.n_max = 400;
    spec.fields = {0.1, 0.3, 0.5, 0.9};
    spec.anisotropies = {0.0, 0.15, 0.95};
    spec.methods = {ScanMethod::Exact};
    const auto pts = spec.points();
    report("scan 4788 points exact", seconds([&] { run_scan_serial(pts); }, 1),
           seconds([&] { run_scan(pts, 0); }, 1));
  }
}
