#include "coherence/trees.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace coherence::lietree {

namespace {

TreeShape::Split leaf_mask(unsigned n) {
    return static_cast<TreeShape::Split>((std::uint64_t(1) << (n + 1)) - 2);  // bits 1..n
}

}  // namespace

bool splits_compatible(TreeShape::Split a, TreeShape::Split b) {
    // Both sides exclude leaf 0, so the pair is realizable in one tree iff
    // the sides are nested or disjoint.
    return (a & b) == 0 || (a & b) == a || (a & b) == b;
}

TreeShape::TreeShape(unsigned n, std::vector<Split> splits) : n_(n), splits_(std::move(splits)) {
    if (n_ < 1 || n_ > kMaxLeafLabel)
        throw SizeLimit("leaf labels must span 0..n with 1 <= n <= " +
                        std::to_string(kMaxLeafLabel));
    const Split all = leaf_mask(n_);
    std::sort(splits_.begin(), splits_.end());
    for (std::size_t i = 0; i < splits_.size(); ++i) {
        Split s = splits_[i];
        if ((s & ~all) != 0 || (s & 1u) != 0)
            throw InvariantError("split uses labels outside 1..n");
        if (std::popcount(s) < 2 || std::popcount(static_cast<Split>(all & ~s)) < 1)
            throw InvariantError("split sides must have at least two leaves");
        if (i > 0 && splits_[i - 1] == s) throw InvariantError("duplicate internal edge");
        for (std::size_t j = 0; j < i; ++j)
            if (!splits_compatible(splits_[j], s))
                throw InvariantError("incompatible splits do not form a tree");
    }
}

TreeShape TreeShape::corolla(unsigned n) { return TreeShape(n, {}); }

TreeShape TreeShape::contract(std::size_t index) const {
    if (index >= splits_.size()) throw InvariantError("no internal edge at that index");
    std::vector<Split> rest = splits_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(index));
    return TreeShape(n_, std::move(rest));
}

std::string TreeShape::text() const {
    // Nested parentheses rooted next to leaf 0; blocks are maximal splits.
    struct Printer {
        const std::vector<Split>& splits;
        std::string print_block(Split block, const std::vector<Split>& inside) const {
            std::vector<Split> maximal;
            for (Split s : inside) {
                bool dominated = false;
                for (Split t : inside)
                    if (t != s && (s & t) == s) dominated = true;
                if (!dominated) maximal.push_back(s);
            }
            std::vector<std::pair<unsigned, std::string>> parts;
            Split covered = 0;
            for (Split s : maximal) {
                std::vector<Split> deeper;
                for (Split t : inside)
                    if (t != s && (t & s) == t) deeper.push_back(t);
                parts.emplace_back(static_cast<unsigned>(std::countr_zero(s)),
                                   print_block(s, deeper));
                covered |= s;
            }
            Split loose = block & ~covered;
            for (unsigned i = 0; i < 32; ++i)
                if (loose & (1u << i)) parts.emplace_back(i, std::to_string(i));
            std::sort(parts.begin(), parts.end());
            std::ostringstream os;
            os << "(";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) os << ",";
                os << parts[i].second;
            }
            os << ")";
            return os.str();
        }
    };
    Printer printer{splits_};
    Split all = leaf_mask(n_);
    std::string body = printer.print_block(all, splits_);
    return "(0," + body.substr(1);
}

std::map<std::size_t, std::vector<TreeShape>> enumerate_tree_shapes(unsigned n) {
    if (n < 1) throw SizeLimit("need at least leaves 0 and 1");
    if (n > 7) throw SizeLimit("tree shape enumeration is bounded to n <= 7");

    std::vector<TreeShape::Split> candidates;
    const TreeShape::Split all = leaf_mask(n);
    for (TreeShape::Split s = 0; s <= all; ++s) {
        if ((s & 1u) || (s & ~all)) continue;
        if (std::popcount(s) < 2) continue;
        if (std::popcount(static_cast<TreeShape::Split>(all & ~s)) < 1) continue;
        candidates.push_back(s);
    }

    std::map<std::size_t, std::vector<TreeShape>> out;
    std::vector<TreeShape::Split> chosen;
    auto extend = [&](auto&& self, std::size_t from) -> void {
        out[chosen.size()].push_back(TreeShape(n, chosen));
        for (std::size_t i = from; i < candidates.size(); ++i) {
            bool ok = true;
            for (TreeShape::Split s : chosen)
                if (!splits_compatible(s, candidates[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(candidates[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

TreeShape graft(const TreeShape& outer, const TreeShape& inner, unsigned at_leaf) {
    if (at_leaf > outer.n()) throw BadLeaf("outer tree has no leaf " + std::to_string(at_leaf));
    const unsigned a = outer.n();
    const unsigned b = inner.n();
    const unsigned n_new = a + b - 1;
    if (n_new > TreeShape::kMaxLeafLabel) throw SizeLimit("grafted tree has too many leaves");

    const TreeShape::Split all_new = leaf_mask(n_new);
    auto normalize = [&](std::uint64_t side) -> TreeShape::Split {
        if (side & 1u) side = (~side) & (std::uint64_t(all_new) | 1u);
        return static_cast<TreeShape::Split>(side & all_new);
    };
    auto outer_label = [&](unsigned x) -> unsigned { return x < at_leaf ? x : x + b - 1; };

    const std::uint64_t inner_block_raw = ((std::uint64_t(1) << b) - 1) << at_leaf;

    std::vector<TreeShape::Split> splits;
    for (TreeShape::Split s : outer.splits()) {
        std::uint64_t side = 0;
        for (unsigned x = 1; x <= a; ++x)
            if (s & (1u << x)) {
                if (x == at_leaf)
                    side |= inner_block_raw;
                else
                    side |= std::uint64_t(1) << outer_label(x);
            }
        // Leaf 0 of outer can only be the graft point when at_leaf == 0, in
        // which case the 0-free side never mentions it.
        splits.push_back(normalize(side));
    }
    for (TreeShape::Split s : inner.splits()) {
        std::uint64_t side = 0;
        for (unsigned y = 1; y <= b; ++y)
            if (s & (1u << y)) side |= std::uint64_t(1) << (at_leaf + y - 1);
        splits.push_back(normalize(side));
    }
    splits.push_back(normalize(inner_block_raw));  // the new fully grown edge
    return TreeShape(n_new, std::move(splits));
}

}  // namespace coherence::lietree
