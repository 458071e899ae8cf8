#ifndef SPS_BOUNDS_HPP
#define SPS_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <sps/constraint_profile.hpp>

namespace sps {

using boost::multiprecision::cpp_int;

enum class BoundKind { exact, upper_bound };

struct BoundResult {
    std::optional<cpp_int> value;   // unset: nothing known beyond trivialities
    BoundKind kind = BoundKind::upper_bound;
    std::string source;             // which theorem supplied the value
};

/// C(a+b, a), arbitrary precision.
cpp_int bollobas_bound(unsigned a, unsigned b);

/// Tightest applicable upper bound (exact where known) for the profile
/// with a=b=n (or the profile's own a,b for two-parameter shapes).
BoundResult upper_bound(const ConstraintProfile& profile, unsigned n);

/// Exact value lookup where the profile and n fall into a solved case.
std::optional<BoundResult> known_exact(const ConstraintProfile& profile, unsigned n);

struct KnownValue {
    std::string shape;
    unsigned n = 0;
    cpp_int value;
    std::string source;
};

/// The static table of solved cases with small explicit parameters.
std::vector<KnownValue> known_values();

} // namespace sps

#endif
