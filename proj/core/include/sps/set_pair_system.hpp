#ifndef SPS_SET_PAIR_SYSTEM_HPP
#define SPS_SET_PAIR_SYSTEM_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include <sps/vertex_set.hpp>

namespace sps {

struct SetPair {
    VertexSet a;
    VertexSet b;
};

/// Hypergraph over the ground set 0..ground_set_size-1; used for the
/// one-sided families and their union.
struct Hypergraph {
    std::size_t ground_set_size = 0;
    std::vector<VertexSet> edges;
};

/// Ordered set pair system over the ground set 0..ground_set_size-1.
/// Pairs are 0-indexed in code (1-indexed in the literature).
class SetPairSystem {
public:
    SetPairSystem() = default;
    explicit SetPairSystem(std::size_t ground_set_size)
        : ground_set_size_(ground_set_size) {}

    std::size_t ground_set_size() const { return ground_set_size_; }
    std::size_t size() const { return pairs_.size(); }
    const std::vector<SetPair>& pairs() const { return pairs_; }
    const SetPair& pair(std::size_t i) const { return pairs_.at(i); }

    void add_pair(VertexSet a, VertexSet b) {
        pairs_.push_back(SetPair{std::move(a), std::move(b)});
    }

    Hypergraph a_side() const {
        Hypergraph h{ground_set_size_, {}};
        h.edges.reserve(pairs_.size());
        for (const auto& p : pairs_) h.edges.push_back(p.a);
        return h;
    }

    Hypergraph b_side() const {
        Hypergraph h{ground_set_size_, {}};
        h.edges.reserve(pairs_.size());
        for (const auto& p : pairs_) h.edges.push_back(p.b);
        return h;
    }

    /// A and B edges interleaved: A_0, B_0, A_1, B_1, ...
    Hypergraph union_hypergraph() const {
        Hypergraph h{ground_set_size_, {}};
        h.edges.reserve(2 * pairs_.size());
        for (const auto& p : pairs_) {
            h.edges.push_back(p.a);
            h.edges.push_back(p.b);
        }
        return h;
    }

    std::size_t max_a_size() const {
        std::size_t n = 0;
        for (const auto& p : pairs_) n = std::max(n, p.a.size());
        return n;
    }

    std::size_t max_b_size() const {
        std::size_t n = 0;
        for (const auto& p : pairs_) n = std::max(n, p.b.size());
        return n;
    }

    std::size_t max_set_size() const { return std::max(max_a_size(), max_b_size()); }

private:
    std::size_t ground_set_size_ = 0;
    std::vector<SetPair> pairs_;
};

} // namespace sps

#endif
