#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coherence/errors.hpp"

namespace coherence::lietree {

// A leaf-labeled tree on leaves 0..n with every internal vertex of valence
// at least 3, encoded by the splits of its internal edges: each internal edge
// partitions the leaves in two, and we store the side not containing leaf 0
// as a bitmask. A set of pairwise compatible splits determines exactly one
// such tree, so the encoding doubles as a canonical form: shapes are equal
// iff their split sets are.
class TreeShape {
public:
    using Split = std::uint32_t;  // bit i set <-> leaf i on the 0-free side

    static constexpr unsigned kMaxLeafLabel = 30;

    TreeShape(unsigned n, std::vector<Split> splits);
    static TreeShape corolla(unsigned n);

    unsigned n() const { return n_; }
    unsigned leaf_count() const { return n_ + 1; }
    std::size_t internal_edges() const { return splits_.size(); }
    bool is_trivalent() const { return n_ >= 2 && splits_.size() == n_ - 2; }
    const std::vector<Split>& splits() const { return splits_; }

    // Shape with internal edge `index` (in split order) shrunk away.
    TreeShape contract(std::size_t index) const;

    std::string text() const;

    auto operator<=>(const TreeShape& other) const = default;

private:
    unsigned n_ = 1;
    std::vector<Split> splits_;  // sorted ascending
};

bool splits_compatible(TreeShape::Split a, TreeShape::Split b);

// Complete, duplicate-free enumeration keyed by internal edge count.
// Bounded to n <= 7 (39208 shapes); larger n raise SizeLimit.
std::map<std::size_t, std::vector<TreeShape>> enumerate_tree_shapes(unsigned n);

// Operadic composition: the leaf `at_leaf` of `outer` is replaced by `inner`.
// Inner input leaves 1..b take labels at_leaf..at_leaf+b-1 and the higher
// outer labels shift up; the edge created by the grafting is the split
// holding exactly the inner inputs, with length one (fully grown).
TreeShape graft(const TreeShape& outer, const TreeShape& inner, unsigned at_leaf);

}  // namespace coherence::lietree
