#ifndef SPS_DUALITY_HPP
#define SPS_DUALITY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <sps/set_pair_system.hpp>

namespace sps {

enum class PartitionKind {
    biclique_of_b2m,    // K_{m,m} minus a perfect matching
    clique_of_t2m,      // K_{2m} minus a perfect matching
};

/// Edge partition of the host graph on dual vertices x_0..x_{m-1},
/// y_0..y_{m-1}. Dual vertex x_i is encoded as i, y_j as m+j. One part
/// per original vertex of the source system.
struct EdgePartition {
    std::size_t m = 0;
    PartitionKind kind = PartitionKind::biclique_of_b2m;
    std::vector<VertexSet> parts;   // each over 2m dual vertices
    std::size_t width = 0;          // max parts through a single dual vertex
};

struct PartitionViolation {
    enum class Kind {
        matching_pair_in_part,  // some part contains both x_i and y_i
        cover_count,            // a host edge covered != 1 times
        width_mismatch,         // stored width differs from recomputed
    };
    Kind kind;
    std::size_t u = 0;          // dual vertex indices (encoded)
    std::size_t v = 0;
    std::size_t count = 0;
};

struct PartitionCheck {
    bool valid = false;
    std::vector<PartitionViolation> violations;
};

/// Maps each used ground vertex v to the part {x_i : v in A_i} cup
/// {y_j : v in B_j}, ascending vertex order. The biclique kind requires
/// the system to verify (n,n,*,*,1) with n the max set size; the clique
/// kind requires (n,n,int,int,1). Throws std::invalid_argument on a
/// precondition failure.
EdgePartition dualize(const SetPairSystem& sps, PartitionKind kind);

/// Biclique kind: every pair (x_i, y_j), i != j, lies in exactly one
/// part and no part holds a matching pair. Clique kind: additionally
/// every same-side pair is covered exactly once. Width is recomputed.
PartitionCheck verify_partition(const EdgePartition& p);

/// Inverse direction: one ground vertex per part. Throws on an invalid
/// partition.
SetPairSystem undualize(const EdgePartition& p);

std::string dual_vertex_name(std::size_t m, std::size_t encoded);

} // namespace sps

#endif
