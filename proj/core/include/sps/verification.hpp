#ifndef SPS_VERIFICATION_HPP
#define SPS_VERIFICATION_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <sps/constraint_profile.hpp>
#include <sps/set_pair_system.hpp>

namespace sps {

/// The six pairwise conditions, in the conventional order.
enum class Condition {
    disjoint_pairs = 0,     // A_i and B_i disjoint
    a_size,                 // |A_i| <= a
    b_size,                 // |B_i| <= b
    a_intersections,        // |A_i cap A_j| in I_A
    b_intersections,        // |B_i cap B_j| in I_B
    cross_intersections,    // 0 < |A_i cap B_j| in I_cross
};

constexpr std::size_t kConditionCount = 6;

struct Violation {
    std::size_t i = 0;
    std::size_t j = 0;              // equal to i for the per-pair conditions
    std::size_t intersection_size = 0;
};

struct ConditionResult {
    bool passed = true;
    std::optional<Violation> witness;   // first violation found
};

struct DegreeStats {
    std::vector<unsigned> d_a;
    std::vector<unsigned> d_b;
    std::vector<unsigned> d_h;
};

struct VerificationReport {
    bool passed = false;
    bool degenerate_size = false;       // m < 2 is a distinguished failure
    std::array<ConditionResult, kConditionCount> conditions;
    std::size_t size = 0;
    std::vector<std::size_t> a_sizes;
    std::vector<std::size_t> b_sizes;
    DegreeStats degrees;

    const ConditionResult& condition(Condition c) const {
        return conditions[static_cast<std::size_t>(c)];
    }
};

/// Checks all six profile conditions and reports every failing one with a
/// witness. Failures are data, not errors.
VerificationReport verify(const SetPairSystem& sps, const ConstraintProfile& profile);

DegreeStats degree_profile(const SetPairSystem& sps);

struct IdentityCheck {
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    bool holds = false;
};

/// sum_v d_A(v)*d_B(v) against m^2-m. Requires a 1-cross intersecting
/// system; throws std::invalid_argument otherwise.
IdentityCheck cross_degree_identity(const SetPairSystem& sps);

/// Per edge, the number of other edges it intersects.
std::vector<std::size_t> adjacency_counts(const Hypergraph& family);

/// Pads every A_i to exactly a vertices and every B_i to exactly b, using
/// fresh vertices private to each set. Throws if a set is already larger
/// than its target.
SetPairSystem pad_to_uniform(const SetPairSystem& sps, std::size_t a, std::size_t b);

} // namespace sps

#endif
