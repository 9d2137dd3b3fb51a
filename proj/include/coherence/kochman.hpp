#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coherence/bigint.hpp"
#include "coherence/errors.hpp"

namespace coherence::kochman {

// A basis element P(n_1,...,n_t) * z1^{e_1} * ... * zs^{e_s} of the p-torsion
// of the integral dual Steenrod pairing algebra. The basis constraints are
// t != 1, 0 < n_1 < ... < n_t, and e_i = 0 for i < n_1 when t > 0.
struct KochmanGenerator {
    std::vector<unsigned> n_list;                          // P-slots, strictly increasing
    std::vector<std::pair<unsigned, std::int64_t>> exponents;  // sparse i -> e_i, sorted, e_i > 0

    unsigned t() const { return static_cast<unsigned>(n_list.size()); }
    std::int64_t exponent_sum() const;
    bool is_unit() const { return n_list.empty() && exponents.empty(); }

    std::string text() const;

    bool operator==(const KochmanGenerator& other) const = default;
};

// Lexicographic on (t, n_list, dense exponent sequence); the enumeration
// order within a fixed degree.
bool lex_less(const KochmanGenerator& a, const KochmanGenerator& b);

bool is_admissible(const KochmanGenerator& g);

// 2*(p^{n_1}+...+p^{n_t}) - t - 1 + sum e_i * (2p^i - 2); the P-part
// contributes 0 when t = 0. The unit is accepted and has degree 0.
Int degree(const KochmanGenerator& g, const Int& p);

// Every admissible generator of degree <= d_max, keyed by degree, each list
// sorted by lex_less. Complete and duplicate-free.
std::map<Int, std::vector<KochmanGenerator>> enumerate_by_degree(const Int& p, const Int& d_max);

// Least odd degree carried by an admissible generator: 2p^2 + 2p - 3.
Int min_odd_degree(const Int& p);

}  // namespace coherence::kochman
