#include <doctest.h>

#include <sps/constructions.hpp>
#include <sps/verification.hpp>

using namespace sps;

namespace {

ConstraintProfile star_one(unsigned a, unsigned b) {
    return {a, b, IntersectionRule::wildcard(), IntersectionRule::wildcard(),
            IntersectionRule::one()};
}

} // namespace

TEST_CASE("five cyclic pairs mod 5 verify as (2,2,*,*,1)") {
    const auto sys = catalog("w22").system;
    const auto rep = verify(sys, star_one(2, 2));
    CHECK(rep.passed);
    CHECK(rep.size == 5);
    for (const auto& c : rep.conditions) CHECK(c.passed);
}

TEST_CASE("the same system is not 1-intersecting on either side") {
    const auto sys = catalog("w22").system;
    const auto rep = verify(sys, ConstraintProfile(2, 2, IntersectionRule::intersecting(),
                                                   IntersectionRule::intersecting(),
                                                   IntersectionRule::one()));
    CHECK_FALSE(rep.passed);
    CHECK_FALSE(rep.condition(Condition::a_intersections).passed);
    CHECK_FALSE(rep.condition(Condition::b_intersections).passed);
    // all other conditions still reported as passing
    CHECK(rep.condition(Condition::disjoint_pairs).passed);
    CHECK(rep.condition(Condition::cross_intersections).passed);
    // witness is a genuinely disjoint A-pair
    const auto w = rep.condition(Condition::a_intersections).witness;
    REQUIRE(w.has_value());
    CHECK(w->intersection_size == 0);
    CHECK(sys.pair(w->i).a.intersection_size(sys.pair(w->j).a) == 0);
}

TEST_CASE("size bound violations are caught with witnesses") {
    const auto sys = catalog("w23").system;   // |B_i| = 3
    const auto rep = verify(sys, star_one(2, 2));
    CHECK_FALSE(rep.passed);
    CHECK_FALSE(rep.condition(Condition::b_size).passed);
    CHECK(rep.condition(Condition::a_size).passed);
}

TEST_CASE("single pair is degenerate, empty system too") {
    SetPairSystem one(4);
    one.add_pair(VertexSet(4, {0}), VertexSet(4, {1}));
    auto rep = verify(one, star_one(1, 1));
    CHECK_FALSE(rep.passed);
    CHECK(rep.degenerate_size);
    for (const auto& c : rep.conditions) CHECK(c.passed);

    rep = verify(SetPairSystem(0), ConstraintProfile{});
    CHECK_FALSE(rep.passed);
    CHECK(rep.degenerate_size);
}

TEST_CASE("overlapping own pair fails condition 1") {
    SetPairSystem sys(4);
    sys.add_pair(VertexSet(4, {0, 1}), VertexSet(4, {1, 2}));
    sys.add_pair(VertexSet(4, {2, 3}), VertexSet(4, {0}));
    const auto rep = verify(sys, ConstraintProfile{});
    CHECK_FALSE(rep.condition(Condition::disjoint_pairs).passed);
    const auto w = rep.condition(Condition::disjoint_pairs).witness;
    REQUIRE(w.has_value());
    CHECK(w->i == 0);
    CHECK(w->j == 0);
}

TEST_CASE("per-pair degree identity: sum of d_A over B_i is m-1") {
    for (const char* name : {"w22", "w23", "mod10_33", "mod8_n3", "pg23_diff_n4"}) {
        const auto sys = catalog(name).system;
        const auto deg = degree_profile(sys);
        const std::size_t m = sys.size();
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t sum = 0;
            for (unsigned v : sys.pair(i).b.to_sorted_vector()) sum += deg.d_a[v];
            CHECK_MESSAGE(sum == m - 1, name << " pair " << i);
        }
    }
}

TEST_CASE("global cross degree identity equals m^2-m") {
    for (const char* name : {"w22", "w23", "mod10_33", "ag24_plus10"}) {
        const auto sys = catalog(name).system;
        const auto id = cross_degree_identity(sys);
        CHECK(id.holds);
        CHECK(id.lhs == sys.size() * sys.size() - sys.size());
    }
}

TEST_CASE("cross degree identity rejects non-1-cross systems") {
    // the standard example with a=b=2 has cross intersections of size 2
    const auto sys = standard_example(2, 2).system;
    CHECK_THROWS_AS(cross_degree_identity(sys), std::invalid_argument);
}

TEST_CASE("degree profile sums") {
    const auto sys = catalog("mod10_33").system;
    const auto deg = degree_profile(sys);
    std::size_t sa = 0, sb = 0;
    for (unsigned d : deg.d_a) sa += d;
    for (unsigned d : deg.d_b) sb += d;
    CHECK(sa == 3 * sys.size());   // 3 vertices per A_i
    CHECK(sb == 3 * sys.size());
    for (std::size_t v = 0; v < sys.ground_set_size(); ++v)
        CHECK(deg.d_h[v] == deg.d_a[v] + deg.d_b[v]);
}

TEST_CASE("adjacency counts on the b-side of w22") {
    // each B_i meets exactly the two B_j at cyclic distance +-2... in fact
    // count them directly against a quadratic reference
    const auto fam = catalog("w22").system.b_side();
    const auto counts = adjacency_counts(fam);
    for (std::size_t i = 0; i < fam.edges.size(); ++i) {
        std::size_t ref = 0;
        for (std::size_t j = 0; j < fam.edges.size(); ++j)
            if (j != i && fam.edges[i].intersects(fam.edges[j])) ++ref;
        CHECK(counts[i] == ref);
    }
}

TEST_CASE("pad_to_uniform grows sets with private vertices") {
    const auto sys = catalog("w22").system;
    const auto padded = pad_to_uniform(sys, 4, 3);
    CHECK(padded.size() == sys.size());
    const auto rep = verify(padded, star_one(4, 3));
    CHECK(rep.passed);
    for (std::size_t i = 0; i < padded.size(); ++i) {
        CHECK(padded.pair(i).a.size() == 4);
        CHECK(padded.pair(i).b.size() == 3);
        // original vertices preserved
        for (unsigned v : sys.pair(i).a.to_sorted_vector())
            CHECK(padded.pair(i).a.contains(v));
    }
    // padding preserves every pairwise intersection
    for (std::size_t i = 0; i < sys.size(); ++i)
        for (std::size_t j = 0; j < sys.size(); ++j) {
            CHECK(padded.pair(i).a.intersection_size(padded.pair(j).b) ==
                  sys.pair(i).a.intersection_size(sys.pair(j).b));
            if (i != j)
                CHECK(padded.pair(i).a.intersection_size(padded.pair(j).a) ==
                      sys.pair(i).a.intersection_size(sys.pair(j).a));
        }
    CHECK_THROWS_AS(pad_to_uniform(sys, 1, 2), std::invalid_argument);
}
