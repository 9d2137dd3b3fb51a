#pragma once

#include <map>

#include "coherence/chain.hpp"
#include "coherence/trees.hpp"

namespace coherence::lietree {

// Relative cubical chain complex of the tree space modulo its fully grown
// boundary. A shape with k internal edges spans a k-cube (edge lengths in
// (0,1]); the length-one faces lie in the boundary and are collapsed, so the
// surviving cells are the shapes themselves and the boundary of a cell sums
// its one-edge contractions with alternating signs.
linalg::ChainComplexOverZ relative_tree_complex(unsigned n);

// Homology of (T_n, boundary T_n) by exact Smith normal form: rank and
// torsion per degree. Bounded to 2 <= n <= 6.
std::map<std::size_t, linalg::HomologySummary> relative_homology_tree_pair(
    unsigned n, linalg::Execution exec = linalg::Execution::Parallel);

}  // namespace coherence::lietree
