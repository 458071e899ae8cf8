#ifndef SPS_AFFINE_PLANE_HPP
#define SPS_AFFINE_PLANE_HPP

#include <vector>

#include <sps/finite_field.hpp>
#include <sps/vertex_set.hpp>

namespace sps {

/// AG(2,q): q^2 points, q+1 parallel classes of q lines each. Point
/// (x,y) has identifier x*q+y. Classes are ordered by slope 0..q-1 with
/// the vertical class last; lines within a class by intercept. The
/// ordering is part of the contract (the plane extensions depend on it).
struct AffinePlane {
    unsigned q = 0;
    std::vector<std::vector<VertexSet>> parallel_classes;

    std::size_t point_count() const { return static_cast<std::size_t>(q) * q; }
};

AffinePlane affine_plane(unsigned q);

} // namespace sps

#endif
