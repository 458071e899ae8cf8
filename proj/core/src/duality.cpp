#include <sps/duality.hpp>

#include <stdexcept>

#include <sps/constraint_profile.hpp>
#include <sps/verification.hpp>

namespace sps {

namespace {

std::size_t recompute_width(const EdgePartition& p) {
    std::vector<std::size_t> through(2 * p.m, 0);
    for (const auto& part : p.parts)
        for (unsigned d : part.to_sorted_vector()) ++through[d];
    std::size_t w = 0;
    for (std::size_t c : through) w = std::max(w, c);
    return w;
}

} // namespace

std::string dual_vertex_name(std::size_t m, std::size_t encoded) {
    if (encoded < m) return "x" + std::to_string(encoded);
    return "y" + std::to_string(encoded - m);
}

EdgePartition dualize(const SetPairSystem& sps, PartitionKind kind) {
    const unsigned n = static_cast<unsigned>(sps.max_set_size());
    const IntersectionRule side = kind == PartitionKind::clique_of_t2m
                                      ? IntersectionRule::intersecting()
                                      : IntersectionRule::wildcard();
    const ConstraintProfile required{n, n, side, side, IntersectionRule::one()};
    const VerificationReport rep = verify(sps, required);
    if (!rep.passed) {
        std::string what = "dualize: system fails " + required.to_string();
        for (std::size_t c = 0; c < kConditionCount; ++c)
            if (!rep.conditions[c].passed)
                what += "; condition " + std::to_string(c + 1) + " violated";
        if (rep.degenerate_size) what += "; degenerate size";
        throw std::invalid_argument(what);
    }

    const std::size_t m = sps.size();
    EdgePartition out;
    out.m = m;
    out.kind = kind;
    for (std::size_t v = 0; v < sps.ground_set_size(); ++v) {
        VertexSet part(2 * m);
        for (std::size_t i = 0; i < m; ++i) {
            if (sps.pair(i).a.contains(static_cast<unsigned>(v)))
                part.insert(static_cast<unsigned>(i));
            if (sps.pair(i).b.contains(static_cast<unsigned>(v)))
                part.insert(static_cast<unsigned>(m + i));
        }
        if (!part.empty()) out.parts.push_back(std::move(part));
    }
    out.width = recompute_width(out);
    return out;
}

PartitionCheck verify_partition(const EdgePartition& p) {
    PartitionCheck check;
    const std::size_t m = p.m;

    for (const auto& part : p.parts)
        for (std::size_t i = 0; i < m; ++i)
            if (part.contains(static_cast<unsigned>(i)) &&
                part.contains(static_cast<unsigned>(m + i)))
                check.violations.push_back(
                    {PartitionViolation::Kind::matching_pair_in_part, i, m + i, 0});

    // cover counts over host edges
    std::vector<std::size_t> cross(m * m, 0);
    std::vector<std::size_t> same_x(m * m, 0), same_y(m * m, 0);
    for (const auto& part : p.parts) {
        const auto verts = part.to_sorted_vector();
        for (std::size_t s = 0; s < verts.size(); ++s)
            for (std::size_t t = s + 1; t < verts.size(); ++t) {
                const std::size_t u = verts[s], v = verts[t];
                if (u < m && v >= m) ++cross[u * m + (v - m)];
                else if (u < m && v < m) ++same_x[u * m + v];
                else ++same_y[(u - m) * m + (v - m)];
            }
    }

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            const std::size_t c = cross[i * m + j];
            if (c != 1)
                check.violations.push_back(
                    {PartitionViolation::Kind::cover_count, i, m + j, c});
        }
    if (p.kind == PartitionKind::clique_of_t2m) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                if (const std::size_t c = same_x[i * m + j]; c != 1)
                    check.violations.push_back(
                        {PartitionViolation::Kind::cover_count, i, j, c});
                if (const std::size_t c = same_y[i * m + j]; c != 1)
                    check.violations.push_back(
                        {PartitionViolation::Kind::cover_count, m + i, m + j, c});
            }
    }

    if (const std::size_t w = recompute_width(p); w != p.width)
        check.violations.push_back(
            {PartitionViolation::Kind::width_mismatch, 0, 0, w});

    check.valid = check.violations.empty();
    return check;
}

SetPairSystem undualize(const EdgePartition& p) {
    const PartitionCheck check = verify_partition(p);
    if (!check.valid)
        throw std::invalid_argument("undualize: partition fails verification");

    const std::size_t m = p.m;
    SetPairSystem out(p.parts.size());
    for (std::size_t i = 0; i < m; ++i) {
        VertexSet a(p.parts.size()), b(p.parts.size());
        for (std::size_t v = 0; v < p.parts.size(); ++v) {
            if (p.parts[v].contains(static_cast<unsigned>(i)))
                a.insert(static_cast<unsigned>(v));
            if (p.parts[v].contains(static_cast<unsigned>(m + i)))
                b.insert(static_cast<unsigned>(v));
        }
        out.add_pair(std::move(a), std::move(b));
    }
    return out;
}

} // namespace sps
