#include <sps/verification.hpp>

#include <stdexcept>

namespace sps {

namespace {

void fail(ConditionResult& r, std::size_t i, std::size_t j, std::size_t k) {
    if (r.passed) {
        r.passed = false;
        r.witness = Violation{i, j, k};
    }
}

} // namespace

VerificationReport verify(const SetPairSystem& sps, const ConstraintProfile& profile) {
    VerificationReport rep;
    const std::size_t m = sps.size();
    rep.size = m;
    rep.degenerate_size = m < 2;

    auto& cond = rep.conditions;
    auto& c_disjoint = cond[static_cast<std::size_t>(Condition::disjoint_pairs)];
    auto& c_asize = cond[static_cast<std::size_t>(Condition::a_size)];
    auto& c_bsize = cond[static_cast<std::size_t>(Condition::b_size)];
    auto& c_aa = cond[static_cast<std::size_t>(Condition::a_intersections)];
    auto& c_bb = cond[static_cast<std::size_t>(Condition::b_intersections)];
    auto& c_cross = cond[static_cast<std::size_t>(Condition::cross_intersections)];

    rep.a_sizes.reserve(m);
    rep.b_sizes.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& p = sps.pair(i);
        const std::size_t sa = p.a.size();
        const std::size_t sb = p.b.size();
        rep.a_sizes.push_back(sa);
        rep.b_sizes.push_back(sb);
        if (const std::size_t k = p.a.intersection_size(p.b); k != 0)
            fail(c_disjoint, i, i, k);
        if (profile.a && sa > *profile.a) fail(c_asize, i, i, sa);
        if (profile.b && sb > *profile.b) fail(c_bsize, i, i, sb);
    }

    for (std::size_t i = 0; i < m; ++i) {
        const auto& pi = sps.pair(i);
        for (std::size_t j = i + 1; j < m; ++j) {
            const auto& pj = sps.pair(j);
            if (!profile.i_a.is_wildcard()) {
                const std::size_t k = pi.a.intersection_size(pj.a);
                if (!profile.i_a.allows(k)) fail(c_aa, i, j, k);
            }
            if (!profile.i_b.is_wildcard()) {
                const std::size_t k = pi.b.intersection_size(pj.b);
                if (!profile.i_b.allows(k)) fail(c_bb, i, j, k);
            }
        }
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            const std::size_t k = pi.a.intersection_size(sps.pair(j).b);
            if (k == 0 || !profile.i_cross.allows(k)) fail(c_cross, i, j, k);
        }
    }

    rep.degrees = degree_profile(sps);

    bool all = !rep.degenerate_size;
    for (const auto& c : cond) all = all && c.passed;
    rep.passed = all;
    return rep;
}

DegreeStats degree_profile(const SetPairSystem& sps) {
    DegreeStats d;
    const std::size_t n = sps.ground_set_size();
    d.d_a.assign(n, 0);
    d.d_b.assign(n, 0);
    d.d_h.assign(n, 0);
    for (const auto& p : sps.pairs()) {
        for (unsigned v : p.a.to_sorted_vector()) ++d.d_a[v];
        for (unsigned v : p.b.to_sorted_vector()) ++d.d_b[v];
    }
    for (std::size_t v = 0; v < n; ++v) d.d_h[v] = d.d_a[v] + d.d_b[v];
    return d;
}

IdentityCheck cross_degree_identity(const SetPairSystem& sps) {
    const ConstraintProfile one_cross{std::nullopt, std::nullopt,
                                      IntersectionRule::wildcard(),
                                      IntersectionRule::wildcard(),
                                      IntersectionRule::one()};
    const VerificationReport rep = verify(sps, one_cross);
    if (!rep.passed)
        throw std::invalid_argument(
            "cross_degree_identity: system is not 1-cross intersecting");

    const DegreeStats d = degree_profile(sps);
    IdentityCheck c;
    for (std::size_t v = 0; v < sps.ground_set_size(); ++v)
        c.lhs += static_cast<std::uint64_t>(d.d_a[v]) * d.d_b[v];
    const std::uint64_t m = sps.size();
    c.rhs = m * m - m;
    c.holds = c.lhs == c.rhs;
    return c;
}

std::vector<std::size_t> adjacency_counts(const Hypergraph& family) {
    const std::size_t m = family.edges.size();
    std::vector<std::size_t> counts(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (family.edges[i].intersects(family.edges[j])) {
                ++counts[i];
                ++counts[j];
            }
    return counts;
}

SetPairSystem pad_to_uniform(const SetPairSystem& sps, std::size_t a, std::size_t b) {
    std::size_t fresh_needed = 0;
    for (const auto& p : sps.pairs()) {
        if (p.a.size() > a || p.b.size() > b)
            throw std::invalid_argument("pad_to_uniform: set larger than its target size");
        fresh_needed += (a - p.a.size()) + (b - p.b.size());
    }

    const std::size_t n = sps.ground_set_size() + fresh_needed;
    SetPairSystem out(n);
    unsigned next = static_cast<unsigned>(sps.ground_set_size());
    for (const auto& p : sps.pairs()) {
        VertexSet pa = p.a.shifted(n, 0);
        VertexSet pb = p.b.shifted(n, 0);
        while (pa.size() < a) pa.insert(next++);
        while (pb.size() < b) pb.insert(next++);
        out.add_pair(std::move(pa), std::move(pb));
    }
    return out;
}

} // namespace sps
