#include "xygap/sector_basis.hpp"

#include <bit>
#include <string>

#include "xygap/errors.hpp"

namespace xygap {

SectorBasis::SectorBasis(int n_sites, std::optional<Parity> parity)
    : n_sites_(n_sites), parity_(parity) {
  if (n_sites < 1 || n_sites > kMaxBasisSites) {
    throw Error(ErrorKind::SizeCap, "basis supports 1.." + std::to_string(kMaxBasisSites) +
                                        " sites, got " + std::to_string(n_sites));
  }
  const BasisState full = BasisState{1} << n_sites;
  lookup_.assign(full, -1);
  states_.reserve(parity ? full / 2 : full);
  for (BasisState s = 0; s < full; ++s) {
    const bool odd = std::popcount(s) % 2 == 1;
    if (parity && odd != (*parity == Parity::Odd)) continue;
    lookup_[s] = static_cast<std::int32_t>(states_.size());
    states_.push_back(s);
  }
}

}  // namespace xygap
