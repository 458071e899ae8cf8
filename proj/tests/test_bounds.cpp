#include <doctest.h>

#include <sps/bounds.hpp>

using namespace sps;

namespace {

ConstraintProfile make(std::optional<unsigned> a, std::optional<unsigned> b,
                       IntersectionRule ia, IntersectionRule ib, IntersectionRule ic) {
    return {a, b, std::move(ia), std::move(ib), std::move(ic)};
}

const auto star = IntersectionRule::wildcard();
const auto lin = IntersectionRule::lin();
const auto one = IntersectionRule::one();
const auto inter = IntersectionRule::intersecting();

} // namespace

TEST_CASE("binomial bound values") {
    CHECK(bollobas_bound(1, 1) == 2);
    CHECK(bollobas_bound(3, 3) == 20);
    CHECK(bollobas_bound(2, 4) == 15);
    CHECK(bollobas_bound(4, 2) == 15);
    CHECK(bollobas_bound(10, 10) == 184756);
    CHECK(bollobas_bound(30, 30) == cpp_int("118264581564861424"));
}

TEST_CASE("two-by-n exact values") {
    auto p = [](unsigned n) { return make(2, n, star, star, one); };
    CHECK(*upper_bound(p(2), 2).value == 5);
    CHECK(*upper_bound(p(3), 3).value == 7);
    CHECK(*upper_bound(p(4), 4).value == 9);
    CHECK(*upper_bound(p(5), 5).value == 12);
    CHECK(*upper_bound(p(6), 6).value == 16);
    CHECK(upper_bound(p(6), 6).kind == BoundKind::exact);
    // orientation symmetric
    CHECK(*upper_bound(make(6, 2, star, star, one), 6).value == 16);
}

TEST_CASE("one-intersecting small exact table and general bound") {
    auto p = [](unsigned n) { return make(n, n, inter, inter, one); };
    CHECK(*upper_bound(p(2), 2).value == 3);
    CHECK(*upper_bound(p(3), 3).value == 4);
    CHECK(*upper_bound(p(4), 4).value == 7);
    CHECK(*upper_bound(p(5), 5).value == 10);
    for (unsigned n = 2; n <= 5; ++n) CHECK(upper_bound(p(n), n).kind == BoundKind::exact);
    const auto r = upper_bound(p(6), 6);
    CHECK(*r.value == 16);   // C(6,2)+1
    CHECK(r.kind == BoundKind::upper_bound);
}

TEST_CASE("linear shapes") {
    const auto r = upper_bound(make(3, 3, lin, lin, one), 3);
    CHECK(*r.value == 8);
    CHECK(r.kind == BoundKind::upper_bound);
    // one linear side, everything else free: quadratic bound
    CHECK(*upper_bound(make(4, 4, lin, star, star), 4).value == 21);
    CHECK(*upper_bound(make(4, 4, star, lin, star), 4).value == 21);
    // the one-sided bound never exceeds the binomial bound it refines
    for (unsigned n = 2; n <= 12; ++n)
        CHECK(*upper_bound(make(n, n, lin, star, star), n).value <= bollobas_bound(n, n));
}

TEST_CASE("wildcard profile is the binomial bound, exactly attained") {
    const auto r = upper_bound(make(2, 2, star, star, star), 2);
    CHECK(*r.value == 6);
    CHECK(r.kind == BoundKind::exact);
}

TEST_CASE("monotone in n for fixed shape") {
    auto check_monotone = [](auto make_profile) {
        cpp_int prev = 0;
        for (unsigned n = 2; n <= 30; ++n) {
            const auto v = *upper_bound(make_profile(n), n).value;
            CHECK(v >= prev);
            prev = v;
        }
    };
    check_monotone([](unsigned n) { return make(2, n, star, star, one); });
    check_monotone([](unsigned n) { return make(n, n, inter, inter, one); });
    check_monotone([](unsigned n) { return make(n, n, lin, lin, one); });
    check_monotone([](unsigned n) { return make(n, n, lin, star, star); });
}

TEST_CASE("dominance: never above the binomial bound") {
    const IntersectionRule rules[] = {star, lin, inter};
    for (unsigned n = 2; n <= 8; ++n)
        for (const auto& ia : rules)
            for (const auto& ib : rules)
                for (const auto& ic : {star, one}) {
                    const auto r = upper_bound(make(n, n, ia, ib, ic), n);
                    REQUIRE(r.value.has_value());
                    CHECK(*r.value <= bollobas_bound(n, n));
                }
}

TEST_CASE("known values table is self-consistent") {
    const auto table = known_values();
    CHECK(!table.empty());
    bool saw_hup5 = false, saw_2n4 = false, saw_std22 = false;
    for (const auto& kv : table) {
        CHECK(kv.value > 0);
        if (kv.shape == "(n,n,int,int,1)" && kv.n == 5) {
            CHECK(kv.value == 10);
            saw_hup5 = true;
        }
        if (kv.shape == "(2,n,*,*,1)" && kv.n == 4) {
            CHECK(kv.value == 9);
            saw_2n4 = true;
        }
        if (kv.shape == "(2,2,*,*,*)") {
            CHECK(kv.value == 6);
            saw_std22 = true;
        }
    }
    CHECK(saw_hup5);
    CHECK(saw_2n4);
    CHECK(saw_std22);
}

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(make(0, 2, star, star, star), std::invalid_argument);
    CHECK_THROWS_AS(make(2, 2, star, star, IntersectionRule::exactly({0, 1})),
                    std::invalid_argument);
    CHECK(IntersectionRule::lin().allows(0));
    CHECK(IntersectionRule::lin().allows(1));
    CHECK_FALSE(IntersectionRule::lin().allows(2));
    CHECK(IntersectionRule::wildcard().allows(17));
}
