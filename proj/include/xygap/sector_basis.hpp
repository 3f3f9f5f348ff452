#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "xygap/model.hpp"

namespace xygap {

using BasisState = std::uint32_t;

/// Computational z-basis states of an N-site ring, bit i set = spin up on site i.
/// Restricted to one parity of the up-spin count, or the full space.
class SectorBasis {
 public:
  SectorBasis(int n_sites, std::optional<Parity> parity);

  int n_sites() const { return n_sites_; }
  std::optional<Parity> parity() const { return parity_; }
  std::size_t size() const { return states_.size(); }
  BasisState state(std::size_t index) const { return states_[index]; }
  const std::vector<BasisState>& states() const { return states_; }

  /// -1 when the state lies outside this basis.
  std::int32_t index_of(BasisState s) const { return lookup_[s]; }

 private:
  int n_sites_;
  std::optional<Parity> parity_;
  std::vector<BasisState> states_;
  std::vector<std::int32_t> lookup_;
};

inline constexpr int kMaxBasisSites = 24;

}  // namespace xygap
