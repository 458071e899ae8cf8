#include <sps/affine_plane.hpp>

namespace sps {

AffinePlane affine_plane(unsigned q) {
    const FiniteField f(q);
    AffinePlane plane;
    plane.q = q;
    const std::size_t n = plane.point_count();

    // slope classes: lines {(x, s*x+c) : x in F_q}
    for (unsigned s = 0; s < q; ++s) {
        std::vector<VertexSet> lines;
        for (unsigned c = 0; c < q; ++c) {
            VertexSet line(n);
            for (unsigned x = 0; x < q; ++x)
                line.insert(x * q + f.add(f.mul(s, x), c));
            lines.push_back(std::move(line));
        }
        plane.parallel_classes.push_back(std::move(lines));
    }

    // vertical class: lines {(c, y) : y in F_q}
    std::vector<VertexSet> vertical;
    for (unsigned c = 0; c < q; ++c) {
        VertexSet line(n);
        for (unsigned y = 0; y < q; ++y) line.insert(c * q + y);
        vertical.push_back(std::move(line));
    }
    plane.parallel_classes.push_back(std::move(vertical));

    return plane;
}

} // namespace sps
