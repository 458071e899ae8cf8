#ifndef SPS_SEARCH_HPP
#define SPS_SEARCH_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>

#include <sps/constraint_profile.hpp>
#include <sps/set_pair_system.hpp>

namespace sps {

struct SearchLimits {
    std::size_t max_vertices = 64;
    std::uint64_t node_budget = 50'000'000;
    std::chrono::milliseconds time_budget{600'000};
};

/// Individually toggleable sound prunes; disabling any of them may only
/// slow the search down, never change SAT/UNSAT status.
struct SearchOptions {
    bool degree_prune = true;     // d_A(v) <= b+1 cutoff for linear A (and mirrored)
    bool bollobas_cap = true;     // immediate UNSAT above the binomial bound
    bool ground_cap = true;       // 1-cross systems need at least m vertices
};

enum class SearchStatus { sat, unsat, unknown };

struct SearchOutcome {
    SearchStatus status = SearchStatus::unknown;
    std::optional<SetPairSystem> witness;   // present iff status == sat
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{0};
};

/// Exhaustive orderly search for a system of exactly size m. UNSAT is
/// claimed only when the search space was complete: the vertex cap
/// a*m (or (a+b)*m when I_B is constrained) fits inside max_vertices
/// and no budget was exhausted. Requires finite a and b.
SearchOutcome decide_size(const ConstraintProfile& profile, std::size_t m,
                          const SearchLimits& limits, const SearchOptions& options = {});

struct MaximizeResult {
    std::size_t best_m = 0;
    std::optional<SetPairSystem> witness;
    bool proven_optimal = false;
    std::uint64_t nodes_explored = 0;
};

/// Increments m from 2, stopping at the first UNSAT (optimal proven),
/// the first UNKNOWN, or the profile's theorem bound.
MaximizeResult maximize(const ConstraintProfile& profile, const SearchLimits& limits,
                        const SearchOptions& options = {});

/// The vertex count that makes an exhaustive search a proof.
std::size_t sound_vertex_cap(const ConstraintProfile& profile, std::size_t m);

} // namespace sps

#endif
