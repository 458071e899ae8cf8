#include <doctest.h>

#include <sps/search.hpp>
#include <sps/verification.hpp>

using namespace sps;

namespace {

const auto star = IntersectionRule::wildcard();
const auto one = IntersectionRule::one();
const auto inter = IntersectionRule::intersecting();
const auto lin = IntersectionRule::lin();

ConstraintProfile make(unsigned a, unsigned b, IntersectionRule ia, IntersectionRule ib,
                       IntersectionRule ic) {
    return {a, b, std::move(ia), std::move(ib), std::move(ic)};
}

} // namespace

TEST_CASE("vertex caps") {
    CHECK(sound_vertex_cap(make(2, 2, star, star, one), 5) == 10);
    CHECK(sound_vertex_cap(make(2, 3, star, star, one), 4) == 8);
    CHECK(sound_vertex_cap(make(2, 3, star, lin, one), 4) == 20);
    CHECK_THROWS_AS(
        sound_vertex_cap(ConstraintProfile(std::nullopt, 2, star, star, star), 3),
        std::invalid_argument);
}

TEST_CASE("decide_size preconditions") {
    SearchLimits lim;
    CHECK_THROWS_AS(decide_size(ConstraintProfile(std::nullopt, 2, star, star, star), 3, lim),
                    std::invalid_argument);
    CHECK_THROWS_AS(decide_size(make(2, 2, star, star, one), 1, lim), std::invalid_argument);
}

TEST_CASE("SAT results produce verifying witnesses") {
    SearchLimits lim;
    for (std::size_t m : {2, 3, 4, 5}) {
        const auto profile = make(2, 2, star, star, one);
        const auto o = decide_size(profile, m, lim);
        REQUIRE(o.status == SearchStatus::sat);
        REQUIRE(o.witness.has_value());
        CHECK(o.witness->size() == m);
        CHECK(verify(*o.witness, profile).passed);
    }
}

TEST_CASE("known maxima are reproduced and proven") {
    SearchLimits lim;
    auto check_max = [&](const ConstraintProfile& p, std::size_t expect) {
        const auto r = maximize(p, lim);
        CHECK(r.best_m == expect);
        CHECK(r.proven_optimal);
        REQUIRE(r.witness.has_value());
        CHECK(verify(*r.witness, p).passed);
    };
    check_max(make(1, 1, star, star, star), 2);
    check_max(make(1, 2, star, star, star), 3);
    check_max(make(2, 2, star, star, one), 5);
    check_max(make(2, 2, inter, inter, one), 3);
    check_max(make(3, 3, inter, inter, one), 4);
}

TEST_CASE("UNSAT above the maximum, exactly at the sound cap") {
    SearchLimits lim;
    lim.max_vertices = 12;   // equals the cap 2*6 for (2,2,*) at m=6
    const auto o = decide_size(make(2, 2, star, star, one), 6, lim);
    CHECK(o.status == SearchStatus::unsat);
}

TEST_CASE("a too-small ground set downgrades UNSAT to UNKNOWN") {
    SearchLimits lim;
    lim.max_vertices = 11;   // below the cap; exhaustion proves nothing
    const auto o = decide_size(make(2, 2, star, star, one), 6, lim);
    CHECK(o.status == SearchStatus::unknown);
}

TEST_CASE("budget exhaustion yields UNKNOWN, never a wrong UNSAT") {
    SearchLimits lim;
    lim.node_budget = 3;
    const auto o = decide_size(make(3, 3, inter, inter, one), 5, lim);
    CHECK(o.status == SearchStatus::unknown);
    CHECK(o.nodes_explored <= 4);
}

TEST_CASE("the binomial cap rejects impossible sizes instantly") {
    SearchLimits lim;
    const auto o = decide_size(make(1, 1, star, star, star), 3, lim);
    CHECK(o.status == SearchStatus::unsat);
    CHECK(o.nodes_explored == 0);
}

TEST_CASE("prune toggles never change the answer") {
    SearchLimits lim;
    const ConstraintProfile profiles[] = {
        make(2, 2, star, star, one),
        make(2, 2, lin, lin, one),
        make(3, 3, inter, inter, one),
        make(2, 3, star, star, one),
        make(2, 2, star, star, star),
    };
    for (const auto& p : profiles) {
        CAPTURE(p.to_string());
        SearchOptions all;
        SearchOptions none;
        none.degree_prune = none.bollobas_cap = none.ground_cap = false;
        const auto ra = maximize(p, lim, all);
        const auto rn = maximize(p, lim, none);
        CHECK(ra.best_m == rn.best_m);
        CHECK(ra.proven_optimal == rn.proven_optimal);
        for (std::size_t m = 2; m <= ra.best_m + 1; ++m) {
            const auto oa = decide_size(p, m, lim, all);
            const auto on = decide_size(p, m, lim, none);
            CHECK(oa.status == on.status);
        }
    }
}

TEST_CASE("single-threaded determinism: identical reruns") {
    SearchLimits lim;
    const auto p = make(2, 2, lin, lin, one);
    const auto a = maximize(p, lim);
    const auto b = maximize(p, lim);
    CHECK(a.best_m == b.best_m);
    CHECK(a.nodes_explored == b.nodes_explored);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    for (std::size_t i = 0; i < a.witness->size(); ++i) {
        CHECK(a.witness->pair(i).a == b.witness->pair(i).a);
        CHECK(a.witness->pair(i).b == b.witness->pair(i).b);
    }
}

TEST_CASE("the (2,3) one-cross maximum is found at 7") {
    SearchLimits lim;
    const auto p = make(2, 3, star, star, one);
    const auto o7 = decide_size(p, 7, lim);
    REQUIRE(o7.status == SearchStatus::sat);
    CHECK(verify(*o7.witness, p).passed);
    const auto o8 = decide_size(p, 8, lim);
    CHECK(o8.status == SearchStatus::unsat);
}
