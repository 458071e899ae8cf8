#ifndef SPS_TRANSVERSAL_HPP
#define SPS_TRANSVERSAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include <sps/set_pair_system.hpp>

namespace sps {

struct TransversalResult {
    std::optional<std::size_t> value;   // unset when the budget ran out
    std::uint64_t nodes = 0;

    bool budget_exceeded() const { return !value.has_value(); }
};

/// Minimum vertex set meeting every edge, by exhaustive branch and bound.
/// Exponential time; intended for small instances. Throws on an empty
/// edge (no transversal exists).
TransversalResult transversal_number(const Hypergraph& family,
                                     std::uint64_t node_budget = 10'000'000);

} // namespace sps

#endif
