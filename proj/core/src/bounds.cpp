#include <sps/bounds.hpp>

namespace sps {

namespace {

bool is_star(const IntersectionRule& r) { return r.is_wildcard(); }

// at least as restrictive as a linear hypergraph
bool implies_linear(const IntersectionRule& r) {
    if (r.is_wildcard()) return false;
    for (unsigned k : r.allowed_sizes())
        if (k > 1) return false;
    return true;
}

bool is_intersecting(const IntersectionRule& r) {
    return !r.is_wildcard() && r.allowed_sizes() == std::vector<unsigned>{1};
}

bool is_cross_one(const IntersectionRule& r) {
    return !r.is_wildcard() && r.allowed_sizes() == std::vector<unsigned>{1};
}

cpp_int two_by_n_value(unsigned n) {
    if (n == 2) return 5;
    if (n == 3) return 7;
    return cpp_int(n / 2 + 1) * cpp_int((n + 1) / 2 + 1);
}

// stated constant n^2/2+n+1, floored; the proof's slack constant is
// n^2/2+n+3/2 and is recorded in the source tag
cpp_int linear_both_value(unsigned n) {
    return (cpp_int(n) * n + 2 * cpp_int(n) + 2) / 2;
}

constexpr const char* kSourceBollobas = "bollobas-binomial";
constexpr const char* kSourceTwoByN = "two-by-n-floor-ceil";
constexpr const char* kSourceLinearSide = "linear-side: n^2+n+1";
constexpr const char* kSourceLinearBoth =
    "linear-both: floor(n^2/2+n+1) (proof slack: n^2/2+n+3/2)";
constexpr const char* kSourceOneInt = "one-intersecting: C(n,2)+1";
constexpr const char* kSourceSmallTable = "small-exact-table";

} // namespace

cpp_int bollobas_bound(unsigned a, unsigned b) {
    cpp_int r = 1;
    const unsigned k = a < b ? a : b;
    for (unsigned i = 1; i <= k; ++i) {
        r *= a + b - k + i;
        r /= i;
    }
    return r;
}

std::optional<BoundResult> known_exact(const ConstraintProfile& profile, unsigned n) {
    // m(2,n,*,*,1), either orientation
    if (is_star(profile.i_a) && is_star(profile.i_b) && is_cross_one(profile.i_cross) &&
        profile.a && profile.b) {
        const unsigned lo = std::min(*profile.a, *profile.b);
        const unsigned hi = std::max(*profile.a, *profile.b);
        if (lo == 2 && hi >= 2)
            return BoundResult{two_by_n_value(hi), BoundKind::exact, kSourceTwoByN};
    }
    // m_n(int,int,1) for n = 2..5
    if (is_intersecting(profile.i_a) && is_intersecting(profile.i_b) &&
        is_cross_one(profile.i_cross) && n >= 2 && n <= 5) {
        static const unsigned table[] = {3, 4, 7, 10};
        return BoundResult{cpp_int(table[n - 2]), BoundKind::exact, kSourceSmallTable};
    }
    // m(a,b,*,*,*)
    if (is_star(profile.i_a) && is_star(profile.i_b) && is_star(profile.i_cross)) {
        const unsigned a = profile.a.value_or(n);
        const unsigned b = profile.b.value_or(n);
        return BoundResult{bollobas_bound(a, b), BoundKind::exact, kSourceBollobas};
    }
    return std::nullopt;
}

BoundResult upper_bound(const ConstraintProfile& profile, unsigned n) {
    if (auto exact = known_exact(profile, n)) return *exact;

    std::optional<cpp_int> best;
    std::string source;
    auto consider = [&](const cpp_int& v, const char* src, bool prefer_on_tie) {
        if (!best || v < *best || (v == *best && prefer_on_tie)) {
            best = v;
            source = src;
        }
    };

    const unsigned a = profile.a.value_or(n);
    const unsigned b = profile.b.value_or(n);
    if (profile.a || profile.b || n > 0)
        consider(bollobas_bound(a, b), kSourceBollobas, false);

    const bool lin_a = implies_linear(profile.i_a);
    const bool lin_b = implies_linear(profile.i_b);
    if (lin_a || lin_b)
        consider(cpp_int(n) * n + n + 1, kSourceLinearSide, true);
    if (lin_a && lin_b && is_cross_one(profile.i_cross))
        consider(linear_both_value(n), kSourceLinearBoth, true);
    if (is_intersecting(profile.i_a) && is_intersecting(profile.i_b) &&
        is_cross_one(profile.i_cross) && n > 2)
        consider(cpp_int(n) * (n - 1) / 2 + 1, kSourceOneInt, true);

    BoundResult r;
    r.value = best;
    r.kind = BoundKind::upper_bound;
    r.source = best ? source : "no-finite-bound";
    return r;
}

std::vector<KnownValue> known_values() {
    std::vector<KnownValue> t;
    t.push_back({"(2,2,*,*,1)", 2, 5, kSourceTwoByN});
    t.push_back({"(2,3,*,*,1)", 3, 7, kSourceTwoByN});
    for (unsigned n = 4; n <= 12; ++n)
        t.push_back({"(2,n,*,*,1)", n, two_by_n_value(n), kSourceTwoByN});
    for (unsigned n = 2; n <= 5; ++n) {
        static const unsigned table[] = {3, 4, 7, 10};
        t.push_back({"(n,n,int,int,1)", n, table[n - 2], kSourceSmallTable});
    }
    for (unsigned a = 1; a <= 4; ++a)
        for (unsigned b = a; b <= 4; ++b)
            t.push_back({"(" + std::to_string(a) + "," + std::to_string(b) + ",*,*,*)",
                         b, bollobas_bound(a, b), kSourceBollobas});
    return t;
}

} // namespace sps
