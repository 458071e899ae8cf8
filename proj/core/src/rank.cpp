#include <sps/rank.hpp>

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sps {

using boost::multiprecision::cpp_int;

// Fraction-free Bareiss elimination; equivalent to rational Gaussian
// elimination on the incidence matrix.
std::size_t incidence_rank(const Hypergraph& family) {
    const std::size_t rows = family.edges.size();
    const std::size_t cols = family.ground_set_size;
    if (rows == 0 || cols == 0) return 0;

    std::vector<std::vector<cpp_int>> m(rows, std::vector<cpp_int>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (unsigned v : family.edges[i].to_sorted_vector()) m[i][v] = 1;

    std::size_t rank = 0;
    cpp_int prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);

        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

} // namespace sps
