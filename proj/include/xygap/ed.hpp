#pragma once

#include <memory>
#include <vector>

#include "xygap/correlations.hpp"
#include "xygap/gap_exact.hpp"
#include "xygap/model.hpp"
#include "xygap/sector_basis.hpp"

namespace xygap {

enum class EdSector { Even, Odd, Full };

EdSector to_ed_sector(Parity p);

enum class EdSolver { Auto, Dense, Lanczos };

inline constexpr int kMaxEdSites = 14;
inline constexpr int kMaxDenseSites = 10;
inline constexpr double kEdDegeneracyTolerance = 1e-10;

struct SectorSpectrum {
  int chain_size = 0;
  EdSector sector = EdSector::Full;
  std::vector<double> lowest_energies;  // ascending
  std::shared_ptr<const SectorBasis> basis;
  std::shared_ptr<const std::vector<double>> ground_vector;
};

SectorSpectrum ed_sector_spectrum(const ModelParams& params, EdSector sector, int n_eigs = 2,
                                  EdSolver solver = EdSolver::Auto);

GapResult ed_gap(const ModelParams& params, EdSolver solver = EdSolver::Auto);

/// Translation-averaged connected <sz_i sz_{i+R}> in the sector ground state.
CorrelationResult ed_corr_zz(const ModelParams& params, int distance, Parity sector);
double ed_corr_zz(const SectorSpectrum& spectrum, int distance);
double ed_corr_zz_serial(const SectorSpectrum& spectrum, int distance);

}  // namespace xygap
