#include "coherence/treespace.hpp"

#include <algorithm>

namespace coherence::lietree {

linalg::ChainComplexOverZ relative_tree_complex(unsigned n) {
    auto by_edges = enumerate_tree_shapes(n);
    std::size_t top = by_edges.empty() ? 0 : by_edges.rbegin()->first;

    std::vector<std::size_t> ranks(top + 1, 0);
    std::vector<std::map<TreeShape, std::size_t>> index(top + 1);
    for (const auto& [k, shapes] : by_edges) {
        ranks[k] = shapes.size();
        for (std::size_t i = 0; i < shapes.size(); ++i) index[k][shapes[i]] = i;
    }

    std::vector<linalg::IntMatrix> boundaries(top + 1);
    boundaries[0] = linalg::IntMatrix(0, ranks[0]);
    for (std::size_t k = 1; k <= top; ++k) {
        linalg::IntMatrix d(ranks[k - 1], ranks[k]);
        const auto& cells = by_edges[k];
        for (std::size_t col = 0; col < cells.size(); ++col) {
            // Internal edges in canonical split order; the face with edge i
            // shrunk to zero carries sign (-1)^i, the grown face is collapsed.
            for (std::size_t i = 0; i < cells[col].internal_edges(); ++i) {
                TreeShape face = cells[col].contract(i);
                std::size_t row = index[k - 1].at(face);
                d.at(row, col) += (i % 2 == 0) ? 1 : -1;
            }
        }
        boundaries[k] = std::move(d);
    }
    return linalg::ChainComplexOverZ(std::move(ranks), std::move(boundaries));
}

std::map<std::size_t, linalg::HomologySummary> relative_homology_tree_pair(
    unsigned n, linalg::Execution exec) {
    if (n < 2 || n > 6) throw SizeLimit("tree pair homology is bounded to 2 <= n <= 6");
    return relative_tree_complex(n).homology(exec);
}

}  // namespace coherence::lietree
