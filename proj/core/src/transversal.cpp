#include <sps/transversal.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace sps {

namespace {

struct Searcher {
    const std::vector<std::vector<unsigned>>* edges;
    std::vector<const std::vector<unsigned>*> order;
    std::vector<unsigned> degree;       // over all edges, used to order branches
    std::vector<char> chosen;
    std::size_t best;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;

    bool covered(const std::vector<unsigned>& edge) const {
        for (unsigned v : edge)
            if (chosen[v]) return true;
        return false;
    }

    void dfs(std::size_t picked) {
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        if (picked >= best) return;

        // branch on the smallest uncovered edge
        const std::vector<unsigned>* branch = nullptr;
        for (const auto* e : order) {
            if (covered(*e)) continue;
            if (!branch || e->size() < branch->size()) branch = e;
        }
        if (!branch) {
            best = picked;
            return;
        }
        if (picked + 1 >= best) return;

        // try higher-degree vertices first
        std::vector<unsigned> verts = *branch;
        std::sort(verts.begin(), verts.end(), [&](unsigned x, unsigned y) {
            return degree[x] > degree[y];
        });
        for (unsigned v : verts) {
            chosen[v] = 1;
            dfs(picked + 1);
            chosen[v] = 0;
            if (exhausted) return;
        }
    }
};

} // namespace

TransversalResult transversal_number(const Hypergraph& family, std::uint64_t node_budget) {
    std::vector<std::vector<unsigned>> edges;
    edges.reserve(family.edges.size());
    for (const auto& e : family.edges) {
        edges.push_back(e.to_sorted_vector());
        if (edges.back().empty())
            throw std::invalid_argument("transversal_number: empty edge has no transversal");
    }

    TransversalResult result;
    if (edges.empty()) {
        result.value = 0;
        return result;
    }

    Searcher s;
    s.edges = &edges;
    for (const auto& e : edges) s.order.push_back(&e);
    s.degree.assign(family.ground_set_size, 0);
    for (const auto& e : edges)
        for (unsigned v : e) ++s.degree[v];
    s.chosen.assign(family.ground_set_size, 0);
    s.best = edges.size() + 1;      // one vertex per edge always works
    s.budget = node_budget;
    s.dfs(0);

    result.nodes = s.nodes;
    if (!s.exhausted) result.value = s.best;
    return result;
}

} // namespace sps
