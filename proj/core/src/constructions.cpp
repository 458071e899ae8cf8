#include <sps/constructions.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

#include <sps/bounds.hpp>
#include <sps/verification.hpp>

namespace sps {

namespace {

IntersectionRule star() { return IntersectionRule::wildcard(); }
IntersectionRule one() { return IntersectionRule::one(); }
IntersectionRule lin() { return IntersectionRule::lin(); }
IntersectionRule inter() { return IntersectionRule::intersecting(); }

} // namespace

ConstructionRecord make_record(SetPairSystem system, ConstraintProfile profile,
                               std::size_t declared_size, std::string citation) {
    if (system.size() != declared_size)
        throw std::logic_error("construction bug: " + citation + " has size " +
                               std::to_string(system.size()) + ", declared " +
                               std::to_string(declared_size));
    const VerificationReport rep = verify(system, profile);
    if (!rep.passed)
        throw std::logic_error("construction bug: " + citation +
                               " fails verification against " + profile.to_string());
    return ConstructionRecord{std::move(system), std::move(profile), declared_size,
                              std::move(citation)};
}

ConstructionRecord standard_example(unsigned a, unsigned b, std::size_t size_budget) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("standard_example: a and b must be positive");
    const cpp_int m = bollobas_bound(a, b);
    if (m > size_budget)
        throw std::invalid_argument("standard_example: size " + m.str() +
                                    " exceeds budget");
    const unsigned n = a + b;
    SetPairSystem sys(n);

    // lexicographically first a-subset, then successor enumeration
    std::vector<unsigned> subset(a);
    for (unsigned i = 0; i < a; ++i) subset[i] = i;
    while (true) {
        VertexSet av(n), bv(n);
        for (unsigned v : subset) av.insert(v);
        for (unsigned v = 0; v < n; ++v)
            if (!av.contains(v)) bv.insert(v);
        sys.add_pair(std::move(av), std::move(bv));

        int i = static_cast<int>(a) - 1;
        while (i >= 0 && subset[static_cast<unsigned>(i)] ==
                             n - a + static_cast<unsigned>(i))
            --i;
        if (i < 0) break;
        ++subset[static_cast<unsigned>(i)];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < a; ++j)
            subset[j] = subset[j - 1] + 1;
    }

    return make_record(std::move(sys),
                       ConstraintProfile(a, b, star(), star(), star()),
                       static_cast<std::size_t>(m), "standard-example");
}

SetPairSystem cyclic_family(const std::vector<unsigned>& base_a,
                            const std::vector<unsigned>& base_b,
                            unsigned modulus, unsigned count, unsigned stride) {
    for (unsigned x : base_a)
        for (unsigned y : base_b)
            if (x % modulus == y % modulus)
                throw std::invalid_argument("cyclic_family: overlapping bases");
    if (count > modulus)
        throw std::invalid_argument("cyclic_family: count exceeds modulus");

    SetPairSystem sys(modulus);
    for (unsigned i = 0; i < count; ++i) {
        VertexSet av(modulus), bv(modulus);
        for (unsigned x : base_a) av.insert((x + stride * i) % modulus);
        for (unsigned y : base_b) bv.insert((y + stride * i) % modulus);
        sys.add_pair(std::move(av), std::move(bv));
    }
    return sys;
}

SetPairSystem product(const SetPairSystem& s1, const SetPairSystem& s2,
                      bool one_cross) {
    const IntersectionRule cross = one_cross ? one() : star();
    const ConstraintProfile needed{std::nullopt, std::nullopt, star(), star(), cross};
    if (!verify(s1, needed).passed || !verify(s2, needed).passed)
        throw std::invalid_argument(
            "product: input fails its cross-intersection requirement");

    const std::size_t g1 = s1.ground_set_size();
    const std::size_t t = s2.size();
    const std::size_t n = t * g1 + s2.ground_set_size();
    const unsigned host_offset = static_cast<unsigned>(t * g1);

    SetPairSystem out(n);
    for (std::size_t i = 0; i < t; ++i) {
        const unsigned copy_offset = static_cast<unsigned>(i * g1);
        const auto& host = s2.pair(i);
        const VertexSet host_a = host.a.shifted(n, host_offset);
        const VertexSet host_b = host.b.shifted(n, host_offset);
        for (std::size_t j = 0; j < s1.size(); ++j) {
            const auto& inner = s1.pair(j);
            out.add_pair(inner.a.shifted(n, copy_offset).union_with(host_a),
                         inner.b.shifted(n, copy_offset).union_with(host_b));
        }
    }
    return out;
}

ConstructionRecord w22_power(unsigned n, std::size_t size_budget) {
    if (n < 1) throw std::invalid_argument("w22_power: n must be >= 1");
    std::size_t expected = 1;
    for (unsigned i = 0; i < n / 2; ++i) {
        expected *= 5;
        if (expected > size_budget)
            throw std::invalid_argument("w22_power: size exceeds budget");
    }
    if (n % 2 == 1) expected *= 2;
    if (expected > size_budget)
        throw std::invalid_argument("w22_power: size exceeds budget");

    const SetPairSystem w22 = catalog("w22").system;
    SetPairSystem acc;
    if (n / 2 >= 1) {
        acc = w22;
        for (unsigned i = 1; i < n / 2; ++i) acc = product(acc, w22);
        if (n % 2 == 1) acc = product(acc, standard_example(1, 1).system);
    } else {
        acc = standard_example(1, 1).system;   // n == 1
    }

    return make_record(std::move(acc), ConstraintProfile(n, n, star(), star(), one()),
                       expected, "w22-power");
}

ConstructionRecord star_extremal_2n(unsigned n) {
    if (n < 4)
        throw std::invalid_argument(
            "star_extremal_2n: n >= 4 required (use w22/w23 for n = 2, 3)");
    const unsigned lo = n / 2;
    const unsigned hi = (n + 1) / 2;
    SetPairSystem sys = product(standard_example(1, hi).system,
                                standard_example(1, lo).system);
    return make_record(std::move(sys), ConstraintProfile(2, n, star(), star(), one()),
                       static_cast<std::size_t>(lo + 1) * (hi + 1),
                       "star-extremal-2n");
}

ConstructionRecord double_star(unsigned s) {
    if (s < 2) throw std::invalid_argument("double_star: size must be >= 2");
    // vertex 0 = hub of the A-side, 1 = hub of the B-side, then the
    // private vertices v_{i,j} (i != j) in row-major order
    const std::size_t n = 2 + static_cast<std::size_t>(s) * (s - 1);
    auto private_vertex = [s](unsigned i, unsigned j) {
        // i, j are 1-based and distinct
        const unsigned col = j > i ? j - 2 : j - 1;
        return 2 + (i - 1) * (s - 1) + col;
    };

    SetPairSystem sys(n);
    for (unsigned i = 1; i <= s; ++i) {
        VertexSet av(n), bv(n);
        av.insert(0);
        bv.insert(1);
        for (unsigned j = 1; j <= s; ++j) {
            if (j == i) continue;
            av.insert(private_vertex(i, j));
            bv.insert(private_vertex(j, i));
        }
        sys.add_pair(std::move(av), std::move(bv));
    }
    return make_record(std::move(sys), ConstraintProfile(s, s, inter(), inter(), one()),
                       s, "double-star");
}

SetPairSystem extend_plane(const AffinePlane& plane, ExtensionMode mode,
                           const InnerSupplier& inner_supplier) {
    const unsigned q = plane.q;
    if (mode == ExtensionMode::III && q % 2 == 0)
        throw std::invalid_argument("extend_plane: mode III requires odd q");
    const unsigned h = (q - 1) / 2;
    const unsigned need = mode == ExtensionMode::I ? q
                        : mode == ExtensionMode::II ? q - 1
                                                    : h;

    // first pass: inner copies and the total ground size
    std::vector<SetPairSystem> inners;
    std::size_t ground = plane.point_count();
    for (std::size_t d = 0; d < plane.parallel_classes.size(); ++d) {
        SetPairSystem inner = inner_supplier();
        if (inner.size() < need)
            throw std::invalid_argument("extend_plane: inner system smaller than " +
                                        std::to_string(need) + " pairs");
        ground += inner.ground_set_size();
        inners.push_back(std::move(inner));
    }

    SetPairSystem out(ground);
    unsigned offset = static_cast<unsigned>(plane.point_count());
    for (std::size_t d = 0; d < plane.parallel_classes.size(); ++d) {
        const auto& lines = plane.parallel_classes[d];
        const SetPairSystem& inner = inners[d];
        for (unsigned i = 1; i <= need; ++i) {
            const VertexSet& line_a = lines[i - 1];
            const VertexSet& line_b =
                mode == ExtensionMode::I ? lines[(i + q - 2) % q]   // A'_{i-1}, cyclically
                : mode == ExtensionMode::II ? lines[q - 1]          // A'_q for everyone
                                            : lines[i + h - 1];     // A'_{i+h}
            const auto& glue = inner.pair(i - 1);
            out.add_pair(line_a.shifted(ground, 0).union_with(glue.a.shifted(ground, offset)),
                         line_b.shifted(ground, 0).union_with(glue.b.shifted(ground, offset)));
        }
        offset += static_cast<unsigned>(inner.ground_set_size());
    }
    return out;
}

ConstructionRecord c_family(int kind, unsigned q) {
    if (kind < 1 || kind > 3) throw std::invalid_argument("c_family: kind must be 1..3");
    if (kind == 3 && (q % 2 == 0 || q < 5))
        throw std::invalid_argument("c_family: kind 3 needs odd q >= 5");

    const AffinePlane plane = affine_plane(q);
    const unsigned h = (q - 1) / 2;
    const unsigned inner_size = kind == 1 ? q : kind == 2 ? q - 1 : h;
    const ExtensionMode mode = kind == 1 ? ExtensionMode::I
                             : kind == 2 ? ExtensionMode::II
                                         : ExtensionMode::III;

    SetPairSystem sys = extend_plane(plane, mode, [&] {
        return double_star(inner_size).system;
    });

    switch (kind) {
    case 1:
        return make_record(std::move(sys),
                           ConstraintProfile(2 * q, 2 * q, inter(), inter(), star()),
                           static_cast<std::size_t>(q) * q + q, "c1-extension");
    case 2:
        return make_record(std::move(sys),
                           ConstraintProfile(2 * q - 1, 2 * q - 1, inter(), star(), one()),
                           static_cast<std::size_t>(q) * q - 1, "c2-extension");
    default: {
        const unsigned r = 3 * q / 2;
        return make_record(std::move(sys),
                           ConstraintProfile(r, r, inter(), inter(), one()),
                           (static_cast<std::size_t>(q) * q - 1) / 2, "c3-extension");
    }
    }
}

std::pair<unsigned, unsigned> final_construction_primes(int kind, unsigned n) {
    if (kind < 1 || kind > 3)
        throw std::invalid_argument("final_construction: kind must be 1..3");
    for (unsigned q = n; q >= 3; --q) {
        if (!is_prime(q) || q % 2 == 0) continue;
        for (unsigned p = kind == 3 ? 5 : 3; p <= n; p += 2) {
            if (!is_prime(p)) continue;
            bool ok = false;
            switch (kind) {
            case 1: ok = p * p + p >= q && q + 2 * p <= n; break;
            case 2: ok = p * p - 1 >= q && q + 2 * p - 1 <= n; break;
            case 3: ok = (p * p - 1) / 2 >= (q - 1) / 2 && q + 3 * p / 2 <= n; break;
            }
            if (ok) return {q, p};
        }
    }
    throw std::invalid_argument("final_construction: no feasible primes for n = " +
                                std::to_string(n));
}

ConstructionRecord final_construction(int kind, unsigned n) {
    const auto [q, p] = final_construction_primes(kind, n);
    const AffinePlane plane = affine_plane(q);
    const ExtensionMode mode = kind == 1 ? ExtensionMode::I
                             : kind == 2 ? ExtensionMode::II
                                         : ExtensionMode::III;

    SetPairSystem sys = extend_plane(plane, mode, [&] {
        return c_family(kind, p).system;
    });

    const std::string citation = "final-construction-" + std::to_string(kind) +
                                 " q=" + std::to_string(q) + " p=" + std::to_string(p);
    switch (kind) {
    case 1:
        return make_record(std::move(sys),
                           ConstraintProfile(n, n, inter(), inter(), star()),
                           static_cast<std::size_t>(q) * (q + 1), citation);
    case 2:
        return make_record(std::move(sys),
                           ConstraintProfile(n, n, inter(), star(), one()),
                           static_cast<std::size_t>(q) * q - 1, citation);
    default:
        return make_record(std::move(sys),
                           ConstraintProfile(n, n, inter(), inter(), one()),
                           (static_cast<std::size_t>(q) * q - 1) / 2, citation);
    }
}

ConstructionRecord ag24_plus10() {
    const AffinePlane plane = affine_plane(4);
    const std::size_t n = plane.point_count() + 10;   // 16 plane points + w_1..w_10
    auto w = [&](unsigned i) { return static_cast<unsigned>(plane.point_count()) + i - 1; };

    SetPairSystem sys(n);
    std::vector<SetPair> pairs(10);
    for (unsigned cls = 0; cls < 5; ++cls) {
        const unsigned i = 2 * cls + 1;   // 1, 3, 5, 7, 9
        const auto& lines = plane.parallel_classes[cls];
        VertexSet a1 = lines[0].shifted(n, 0);
        VertexSet b1 = lines[1].shifted(n, 0);
        VertexSet a2 = lines[2].shifted(n, 0);
        VertexSet b2 = lines[3].shifted(n, 0);
        a1.insert(w(i));
        b1.insert(w(i + 1));
        a2.insert(w(i + 1));
        b2.insert(w(i));
        pairs[i - 1] = SetPair{std::move(a1), std::move(b1)};
        pairs[i] = SetPair{std::move(a2), std::move(b2)};
    }
    for (auto& p : pairs) sys.add_pair(std::move(p.a), std::move(p.b));

    // both sides are linear but not 1-intersecting: the two A-lines taken
    // from the same parallel class are disjoint and carry distinct w's
    return make_record(std::move(sys), ConstraintProfile(5, 5, lin(), lin(), one()),
                       10, "ag24-plus-10");
}

ConstructionRecord catalog(const std::string& name) {
    if (name == "w22")
        return make_record(cyclic_family({0, 1}, {2, 4}, 5, 5),
                           ConstraintProfile(2, 2, star(), star(), one()), 5,
                           "cyclic-mod-5");
    if (name == "w23")
        return make_record(cyclic_family({0, 1}, {2, 4, 6}, 7, 7),
                           ConstraintProfile(2, 3, star(), star(), one()), 7,
                           "cyclic-mod-7");
    if (name == "mod10_33")
        return make_record(cyclic_family({0, 1, 2}, {3, 6, 9}, 10, 10),
                           ConstraintProfile(3, 3, star(), star(), one()), 10,
                           "cyclic-mod-10");
    if (name == "mod8_n3")
        return make_record(cyclic_family({0, 1, 3}, {4, 5, 7}, 8, 4),
                           ConstraintProfile(3, 3, inter(), inter(), one()), 4,
                           "cyclic-mod-8");
    if (name == "pg23_diff_n4")
        return make_record(cyclic_family({1, 2, 5, 7}, {8, 9, 12, 0}, 14, 7),
                           ConstraintProfile(4, 4, inter(), inter(), one()), 7,
                           "difference-set-mod-14");
    if (name == "mod14_lin3")
        // the B side has pairs meeting in two vertices, so only the A
        // side is declared linear
        return make_record(cyclic_family({0, 1, 2}, {4, 8, 12}, 14, 7, 2),
                           ConstraintProfile(3, 3, lin(), star(), one()), 7,
                           "cyclic-mod-14-stride-2");
    if (name == "ag24_plus10") return ag24_plus10();
    throw std::invalid_argument("catalog: unknown name '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"w22", "w23", "mod10_33", "mod8_n3", "pg23_diff_n4", "mod14_lin3",
            "ag24_plus10"};
}

} // namespace sps
