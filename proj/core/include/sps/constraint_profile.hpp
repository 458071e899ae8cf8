#ifndef SPS_CONSTRAINT_PROFILE_HPP
#define SPS_CONSTRAINT_PROFILE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sps {

/// Allowed intersection sizes for one of the pairwise conditions:
/// either a wildcard (any size) or an explicit set of sizes.
class IntersectionRule {
public:
    static IntersectionRule wildcard() { return IntersectionRule(); }

    static IntersectionRule exactly(std::vector<unsigned> sizes) {
        IntersectionRule r;
        r.wildcard_ = false;
        std::sort(sizes.begin(), sizes.end());
        sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
        r.allowed_ = std::move(sizes);
        return r;
    }

    /// {0,1}: linear hypergraph.
    static IntersectionRule lin() { return exactly({0, 1}); }
    /// {1}: 1-intersecting hypergraph.
    static IntersectionRule intersecting() { return exactly({1}); }
    /// {1}: the 1-cross condition.
    static IntersectionRule one() { return exactly({1}); }

    bool is_wildcard() const { return wildcard_; }
    const std::vector<unsigned>& allowed_sizes() const { return allowed_; }

    bool allows(std::size_t k) const {
        if (wildcard_) return true;
        return std::binary_search(allowed_.begin(), allowed_.end(), static_cast<unsigned>(k));
    }

    bool operator==(const IntersectionRule&) const = default;

    std::string to_string() const {
        if (wildcard_) return "*";
        if (allowed_ == std::vector<unsigned>{0, 1}) return "lin";
        if (allowed_ == std::vector<unsigned>{1}) return "{1}";
        std::string s = "{";
        for (std::size_t i = 0; i < allowed_.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(allowed_[i]);
        }
        return s + "}";
    }

private:
    bool wildcard_ = true;
    std::vector<unsigned> allowed_;
};

/// The constraint tuple (a, b, I_A, I_B, I_cross). Unset a or b means
/// unbounded set sizes. 0 is never a legal member of I_cross.
struct ConstraintProfile {
    std::optional<unsigned> a;
    std::optional<unsigned> b;
    IntersectionRule i_a = IntersectionRule::wildcard();
    IntersectionRule i_b = IntersectionRule::wildcard();
    IntersectionRule i_cross = IntersectionRule::wildcard();

    ConstraintProfile() = default;

    ConstraintProfile(std::optional<unsigned> a_, std::optional<unsigned> b_,
                      IntersectionRule ia, IntersectionRule ib, IntersectionRule ic)
        : a(a_), b(b_), i_a(std::move(ia)), i_b(std::move(ib)), i_cross(std::move(ic)) {
        if ((a && *a == 0) || (b && *b == 0))
            throw std::invalid_argument("ConstraintProfile: a and b must be positive");
        if (!i_cross.is_wildcard() && i_cross.allows(0))
            throw std::invalid_argument("ConstraintProfile: 0 is not allowed in I_cross");
    }

    bool one_cross() const { return i_cross == IntersectionRule::one(); }

    bool operator==(const ConstraintProfile&) const = default;

    std::string to_string() const {
        auto bound = [](const std::optional<unsigned>& x) {
            return x ? std::to_string(*x) : std::string("*");
        };
        return "(" + bound(a) + "," + bound(b) + "," + i_a.to_string() + "," +
               i_b.to_string() + "," + i_cross.to_string() + ")";
    }
};

} // namespace sps

#endif
