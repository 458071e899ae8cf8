#include <sps/search.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include <sps/bounds.hpp>

namespace sps {

namespace {

using Mask = std::uint64_t;

// Set order used for the symmetry-breaking canonical form: compare by
// the lowest element where the two sets differ.
bool set_less(Mask x, Mask y) {
    if (x == y) return false;
    const Mask low = (x ^ y) & (~(x ^ y) + 1);
    return (x & low) != 0;
}

bool pair_less(Mask a1, Mask b1, Mask a2, Mask b2) {
    if (a1 != a2) return set_less(a1, a2);
    return set_less(b1, b2);
}

bool rule_at_most_one(const IntersectionRule& r) {
    if (r.is_wildcard()) return false;
    for (unsigned k : r.allowed_sizes())
        if (k > 1) return false;
    return true;
}

struct Searcher {
    // problem
    unsigned a = 0, b = 0;
    const IntersectionRule* ia = nullptr;
    const IntersectionRule* ib = nullptr;
    const IntersectionRule* ic = nullptr;
    std::size_t m = 0;
    std::size_t max_v = 0;

    // budgets
    std::uint64_t node_budget = 0;
    std::chrono::steady_clock::time_point deadline;
    bool exhausted = true;
    std::uint64_t nodes = 0;

    // state
    std::vector<Mask> as, bs;
    std::vector<unsigned> deg_a, deg_b;   // per vertex, current pairs only
    bool prune_da = false, prune_db = false;
    std::size_t used = 0;
    bool found = false;
    std::size_t found_used = 0;
    std::vector<Mask> sol_a, sol_b;

    bool budget_ok() {
        if (nodes > node_budget) {
            exhausted = false;
            return false;
        }
        if ((nodes & 0x1fff) == 0 && std::chrono::steady_clock::now() > deadline) {
            exhausted = false;
            return false;
        }
        return true;
    }

    bool cross_ok(Mask x, Mask y) const {
        const auto k = static_cast<std::size_t>(std::popcount(x & y));
        return k > 0 && ic->allows(k);
    }

    // Valid used-vertex cores for the next A (fresh bits meet nothing
    // placed earlier, so validity against prior pairs depends on the
    // core alone).
    bool a_core_ok(Mask s) const {
        for (std::size_t j = 0; j < as.size(); ++j) {
            if (!ia->allows(static_cast<std::size_t>(std::popcount(s & as[j])))) return false;
            if (!cross_ok(s, bs[j])) return false;
        }
        if (prune_da) {
            Mask rest = s;
            while (rest) {
                const unsigned v = static_cast<unsigned>(std::countr_zero(rest));
                if (deg_a[v] + 1 > b + 1) return false;
                rest &= rest - 1;
            }
        }
        return true;
    }

    // Disjointness from the current A is structural: cores are drawn
    // from the pool excluding it and fresh runs start past it.
    bool b_core_ok(Mask t) const {
        for (std::size_t j = 0; j < bs.size(); ++j) {
            if (!ib->allows(static_cast<std::size_t>(std::popcount(t & bs[j])))) return false;
            if (!cross_ok(as[j], t)) return false;
        }
        if (prune_db) {
            Mask rest = t;
            while (rest) {
                const unsigned v = static_cast<unsigned>(std::countr_zero(rest));
                if (deg_b[v] + 1 > a + 1) return false;
                rest &= rest - 1;
            }
        }
        return true;
    }

    void bump(std::vector<unsigned>& deg, Mask x, int delta) {
        while (x) {
            const unsigned v = static_cast<unsigned>(std::countr_zero(x));
            deg[v] = static_cast<unsigned>(static_cast<int>(deg[v]) + delta);
            x &= x - 1;
        }
    }

    static Mask fresh_run(std::size_t from, std::size_t count) {
        Mask m2 = 0;
        for (std::size_t i = 0; i < count; ++i) m2 |= Mask{1} << (from + i);
        return m2;
    }

    void place(Mask am, Mask bm, std::size_t new_used) {
        const std::size_t old_used = used;
        as.push_back(am);
        bs.push_back(bm);
        bump(deg_a, am, 1);
        bump(deg_b, bm, 1);
        used = new_used;
        ++nodes;

        if (as.size() == m) {
            found = true;
            found_used = used;
            sol_a = as;
            sol_b = bs;
        } else if (budget_ok()) {
            extend();
        }

        used = old_used;
        bump(deg_a, am, -1);
        bump(deg_b, bm, -1);
        as.pop_back();
        bs.pop_back();
    }

    void try_b_sides(Mask am, std::size_t used_after_a) {
        const Mask last_a = as.empty() ? 0 : as.back();
        const Mask last_b = as.empty() ? 0 : bs.back();
        const bool a_tied = !as.empty() && am == last_a;

        std::vector<unsigned> pool;
        for (std::size_t v = 0; v < used_after_a; ++v)
            if (!(am & (Mask{1} << v))) pool.push_back(static_cast<unsigned>(v));

        auto emit = [&](Mask t) {
            if (!b_core_ok(t)) return;
            const auto core = static_cast<unsigned>(std::popcount(t));
            const std::size_t kf_max =
                std::min<std::size_t>(b - core, max_v - used_after_a);
            for (std::size_t kf = 0; kf <= kf_max; ++kf) {
                if (found || !exhausted) return;
                if (core + kf == 0) continue;
                const Mask bm = t | fresh_run(used_after_a, kf);
                if (a_tied && !set_less(last_b, bm)) continue;
                place(am, bm, used_after_a + kf);
            }
        };

        // all cores of size <= b over the pool
        std::vector<std::pair<std::size_t, Mask>> stack{{0, 0}};
        emit(0);
        while (!stack.empty() && !found && exhausted) {
            auto [start, t] = stack.back();
            stack.pop_back();
            for (std::size_t i = start; i < pool.size(); ++i) {
                const Mask t2 = t | (Mask{1} << pool[i]);
                emit(t2);
                if (found || !exhausted) return;
                if (static_cast<unsigned>(std::popcount(t2)) < b)
                    stack.push_back({i + 1, t2});
            }
        }
    }

    void extend() {
        const Mask last_a = as.empty() ? 0 : as.back();

        auto emit_a = [&](Mask s) {
            if (!a_core_ok(s)) return;
            const auto core = static_cast<unsigned>(std::popcount(s));
            const std::size_t kf_max = std::min<std::size_t>(a - core, max_v - used);
            for (std::size_t kf = 0; kf <= kf_max; ++kf) {
                if (found || !exhausted) return;
                if (core + kf == 0) continue;
                const Mask am = s | fresh_run(used, kf);
                if (!as.empty() && set_less(am, last_a)) continue;
                try_b_sides(am, used + kf);
            }
        };

        emit_a(0);
        std::vector<std::pair<std::size_t, Mask>> stack{{0, 0}};
        while (!stack.empty() && !found && exhausted) {
            auto [start, s] = stack.back();
            stack.pop_back();
            for (std::size_t v = start; v < used; ++v) {
                const Mask s2 = s | (Mask{1} << v);
                emit_a(s2);
                if (found || !exhausted) return;
                if (static_cast<unsigned>(std::popcount(s2)) < a)
                    stack.push_back({v + 1, s2});
            }
        }
    }

    SetPairSystem witness() const {
        SetPairSystem sys(found_used);
        for (std::size_t i = 0; i < sol_a.size(); ++i) {
            VertexSet av(found_used), bv(found_used);
            for (std::size_t v = 0; v < found_used; ++v) {
                if (sol_a[i] & (Mask{1} << v)) av.insert(static_cast<unsigned>(v));
                if (sol_b[i] & (Mask{1} << v)) bv.insert(static_cast<unsigned>(v));
            }
            sys.add_pair(std::move(av), std::move(bv));
        }
        return sys;
    }
};

} // namespace

std::size_t sound_vertex_cap(const ConstraintProfile& profile, std::size_t m) {
    if (!profile.a || !profile.b)
        throw std::invalid_argument("sound_vertex_cap: a and b must be finite");
    // Vertices outside every set can always be dropped; with I_B
    // unconstrained, vertices in B-sides only can be dropped as well.
    if (profile.i_b.is_wildcard()) return static_cast<std::size_t>(*profile.a) * m;
    return static_cast<std::size_t>(*profile.a + *profile.b) * m;
}

SearchOutcome decide_size(const ConstraintProfile& profile, std::size_t m,
                          const SearchLimits& limits, const SearchOptions& options) {
    if (!profile.a || !profile.b)
        throw std::invalid_argument("decide_size: a and b must be finite");
    if (m < 2)
        throw std::invalid_argument("decide_size: m must be at least 2");

    const auto start = std::chrono::steady_clock::now();
    SearchOutcome out;

    if (options.bollobas_cap && cpp_int(m) > bollobas_bound(*profile.a, *profile.b)) {
        out.status = SearchStatus::unsat;
        out.elapsed = std::chrono::steady_clock::now() - start;
        return out;
    }

    const std::size_t cap = sound_vertex_cap(profile, m);
    const std::size_t v = std::min({limits.max_vertices, cap, std::size_t{64}});

    // A 1-cross system of size m spans at least m vertices, so a ground
    // set this small cannot host a witness and is too small to prove
    // absence either.
    if (options.ground_cap && profile.one_cross() && v < m && v < cap) {
        out.status = SearchStatus::unknown;
        out.elapsed = std::chrono::steady_clock::now() - start;
        return out;
    }

    Searcher s;
    s.a = *profile.a;
    s.b = *profile.b;
    s.ia = &profile.i_a;
    s.ib = &profile.i_b;
    s.ic = &profile.i_cross;
    s.m = m;
    s.max_v = v;
    s.node_budget = limits.node_budget;
    s.deadline = start + limits.time_budget;
    s.deg_a.assign(v, 0);
    s.deg_b.assign(v, 0);
    s.prune_da = options.degree_prune && rule_at_most_one(profile.i_a);
    s.prune_db = options.degree_prune && rule_at_most_one(profile.i_b);

    s.extend();

    out.nodes_explored = s.nodes;
    out.elapsed = std::chrono::steady_clock::now() - start;
    if (s.found) {
        out.status = SearchStatus::sat;
        out.witness = s.witness();
    } else if (s.exhausted && v >= cap) {
        out.status = SearchStatus::unsat;
    } else {
        out.status = SearchStatus::unknown;
    }
    return out;
}

MaximizeResult maximize(const ConstraintProfile& profile, const SearchLimits& limits,
                        const SearchOptions& options) {
    if (!profile.a || !profile.b)
        throw std::invalid_argument("maximize: a and b must be finite");

    const unsigned n = std::max(*profile.a, *profile.b);
    const BoundResult bound = upper_bound(profile, n);

    MaximizeResult res;
    res.best_m = 1;   // the single-pair system is always available
    for (std::size_t m = 2;; ++m) {
        if (bound.value && cpp_int(m) > *bound.value) {
            res.proven_optimal = true;
            break;
        }
        SearchOutcome o = decide_size(profile, m, limits, options);
        res.nodes_explored += o.nodes_explored;
        if (o.status == SearchStatus::sat) {
            res.best_m = m;
            res.witness = std::move(o.witness);
            continue;
        }
        res.proven_optimal = o.status == SearchStatus::unsat;
        break;
    }
    return res;
}

} // namespace sps
