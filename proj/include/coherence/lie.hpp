#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "coherence/bigint.hpp"
#include "coherence/errors.hpp"

namespace coherence::lietree {

// A Lie monomial: full binary bracketing over x_1..x_n with every variable
// appearing exactly once.
class LieMonomial {
public:
    static LieMonomial variable(unsigned index);
    static LieMonomial bracket(LieMonomial left, LieMonomial right);

    // Left-normed monomial [[...[y_1,y_2],...],y_k].
    static LieMonomial from_word(const std::vector<unsigned>& word);

    bool is_variable() const { return node_->left == nullptr; }
    unsigned variable_index() const { return node_->var; }
    LieMonomial left() const;
    LieMonomial right() const;

    // Variable indices in in-order traversal; for a multilinear monomial on
    // x_1..x_n this is a permutation of 1..n.
    std::vector<unsigned> variables() const;

    std::string text() const;

    bool operator==(const LieMonomial& other) const { return text() == other.text(); }
    bool operator<(const LieMonomial& other) const { return text() < other.text(); }

private:
    struct Node {
        unsigned var = 0;
        std::shared_ptr<const Node> left, right;
    };
    explicit LieMonomial(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

// Basis words are x_1-leading left-normed sequences; a combination maps each
// word to its integer coefficient (zero coefficients are dropped).
using Word = std::vector<unsigned>;
using Combination = std::map<Word, Int>;

// The (n-1)! left-normed basis monomials [[..[x_1, x_{s(2)}],..], x_{s(n)}].
// Bounded to n <= 8.
std::vector<LieMonomial> lie_basis(unsigned n);

// Expansion of a multilinear monomial in the left-normed x_1-leading basis,
// by antisymmetry and the Jacobi identity. Idempotent on basis monomials.
Combination straighten(const LieMonomial& m);

// Signed symmetric group action: relabel x_i -> x_{perm[i]}, multiply by the
// sign of the permutation, straighten. perm is 1-indexed (perm[0] unused).
Combination sigma_action_signed(const std::vector<unsigned>& perm, const Combination& v);
Combination sigma_action_signed(const std::vector<unsigned>& perm, const LieMonomial& m);

int permutation_sign(const std::vector<unsigned>& perm);

std::string combination_text(const Combination& c);

}  // namespace coherence::lietree
