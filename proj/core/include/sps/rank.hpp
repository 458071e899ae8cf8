#ifndef SPS_RANK_HPP
#define SPS_RANK_HPP

#include <cstddef>

#include <sps/set_pair_system.hpp>

namespace sps {

/// Rank of the 0/1 edge-incidence matrix over the rationals. Exact
/// integer arithmetic throughout; no floating point.
std::size_t incidence_rank(const Hypergraph& family);

} // namespace sps

#endif
