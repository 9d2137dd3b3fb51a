#include "coherence/lie.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"

using namespace coherence;
using lietree::Combination;
using lietree::LieMonomial;
using lietree::Word;

namespace {

// Oracle: expand a monomial in the free associative algebra, [u,v] = uv - vu.
// The multilinear words are permutations, so equality of these expansions is
// exact membership in the free Lie ring.
using Tensor = std::map<std::vector<unsigned>, Int>;

Tensor associative(const LieMonomial& m) {
    if (m.is_variable()) return {{{m.variable_index()}, 1}};
    Tensor l = associative(m.left());
    Tensor r = associative(m.right());
    Tensor out;
    auto accumulate = [&](const Tensor& a, const Tensor& b, const Int& sign) {
        for (const auto& [u, cu] : a)
            for (const auto& [v, cv] : b) {
                std::vector<unsigned> w = u;
                w.insert(w.end(), v.begin(), v.end());
                out[w] += sign * cu * cv;
                if (out[w] == 0) out.erase(w);
            }
    };
    accumulate(l, r, 1);
    accumulate(r, l, -1);
    return out;
}

Tensor associative(const Combination& c) {
    Tensor out;
    for (const auto& [word, coeff] : c) {
        for (const auto& [w, k] : associative(LieMonomial::from_word(word))) {
            out[w] += coeff * k;
            if (out[w] == 0) out.erase(w);
        }
    }
    return out;
}

LieMonomial random_monomial(std::mt19937& rng, unsigned n) {
    // Random full binary bracketing over a random permutation of 1..n.
    std::vector<unsigned> vars(n);
    std::iota(vars.begin(), vars.end(), 1);
    std::shuffle(vars.begin(), vars.end(), rng);
    std::vector<LieMonomial> nodes;
    for (unsigned v : vars) nodes.push_back(LieMonomial::variable(v));
    while (nodes.size() > 1) {
        std::uniform_int_distribution<std::size_t> pick(0, nodes.size() - 2);
        std::size_t i = pick(rng);
        LieMonomial joined = LieMonomial::bracket(nodes[i], nodes[i + 1]);
        nodes.erase(nodes.begin() + static_cast<std::ptrdiff_t>(i), nodes.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        nodes.insert(nodes.begin() + static_cast<std::ptrdiff_t>(i), joined);
    }
    return nodes.front();
}

constexpr unsigned kSeed = 20260810;

}  // namespace

TEST_CASE("basis sizes are (n-1)!") {
    CHECK(lietree::lie_basis(1).size() == 1);
    CHECK(lietree::lie_basis(2).size() == 1);
    CHECK(lietree::lie_basis(3).size() == 2);
    CHECK(lietree::lie_basis(4).size() == 6);
    CHECK(lietree::lie_basis(6).size() == 120);
    CHECK(lietree::lie_basis(2).front().text() == "[x1,x2]");
    CHECK_THROWS_AS(lietree::lie_basis(9), SizeLimit);
    CHECK_THROWS_AS(lietree::lie_basis(0), SizeLimit);
}

TEST_CASE("antisymmetry and Jacobi") {
    auto x1 = LieMonomial::variable(1);
    auto x2 = LieMonomial::variable(2);
    auto x3 = LieMonomial::variable(3);

    auto flipped = lietree::straighten(LieMonomial::bracket(x2, x1));
    REQUIRE(flipped.size() == 1);
    CHECK(flipped.at(Word{1, 2}) == -1);

    auto nested = lietree::straighten(LieMonomial::bracket(x1, LieMonomial::bracket(x2, x3)));
    REQUIRE(nested.size() == 2);
    CHECK(nested.at(Word{1, 2, 3}) == 1);
    CHECK(nested.at(Word{1, 3, 2}) == -1);
}

TEST_CASE("straighten is idempotent on basis monomials") {
    for (const auto& b : lietree::lie_basis(4)) {
        auto c = lietree::straighten(b);
        REQUIRE(c.size() == 1);
        CHECK(c.begin()->second == 1);
        CHECK(LieMonomial::from_word(c.begin()->first).text() == b.text());
    }
}

TEST_CASE("straighten agrees with the associative expansion") {
    std::mt19937 rng(kSeed);
    for (unsigned n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < (n <= 4 ? 60 : 25); ++trial) {
            LieMonomial m = random_monomial(rng, n);
            Combination s = lietree::straighten(m);
            CHECK(associative(m) == associative(s));
            // Straightening its own output changes nothing.
            Combination again;
            for (const auto& [w, c] : s) {
                for (const auto& [w2, c2] : lietree::straighten(LieMonomial::from_word(w))) {
                    again[w2] += c * c2;
                    if (again[w2] == 0) again.erase(w2);
                }
            }
            CHECK(again == s);
        }
    }
}

TEST_CASE("basis is independent over the rationals") {
    // The associative expansions of the basis monomials, as vectors over the
    // n! permutation words, have full rank (n-1)!.
    for (unsigned n : {3u, 4u}) {
        auto basis = lietree::lie_basis(n);
        std::map<std::vector<unsigned>, std::size_t> word_index;
        std::vector<std::vector<long long>> rows;
        for (const auto& b : basis) {
            std::vector<long long> row;
            for (const auto& [w, c] : associative(b)) {
                auto [it, fresh] = word_index.emplace(w, word_index.size());
                if (it->second >= row.size()) row.resize(it->second + 1, 0);
                row[it->second] = to_int64(c);
            }
            rows.push_back(row);
        }
        std::size_t cols = word_index.size();
        for (auto& row : rows) row.resize(cols, 0);
        // Gaussian elimination over rationals via long double is unsafe;
        // use exact fraction-free elimination.
        std::size_t rank = 0;
        std::vector<std::vector<Int>> m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            m[i] = std::vector<Int>(rows[i].begin(), rows[i].end());
        for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
            std::size_t pivot = rank;
            while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
            if (pivot == m.size()) continue;
            std::swap(m[rank], m[pivot]);
            for (std::size_t r = rank + 1; r < m.size(); ++r) {
                if (m[r][col] == 0) continue;
                Int a = m[rank][col], b = m[r][col];
                for (std::size_t c = 0; c < cols; ++c) m[r][c] = m[r][c] * a - m[rank][c] * b;
            }
            ++rank;
        }
        CHECK(rank == basis.size());
    }
}

TEST_CASE("signed symmetric group action") {
    auto x1 = LieMonomial::variable(1);
    auto x2 = LieMonomial::variable(2);
    auto bracket12 = LieMonomial::bracket(x1, x2);

    std::vector<unsigned> identity{0, 1, 2};
    auto same = lietree::sigma_action_signed(identity, bracket12);
    REQUIRE(same.size() == 1);
    CHECK(same.at(Word{1, 2}) == 1);

    // Transposition: relabeling gives [x2,x1] = -[x1,x2]; the sign flips it back.
    std::vector<unsigned> swap12{0, 2, 1};
    auto acted = lietree::sigma_action_signed(swap12, bracket12);
    REQUIRE(acted.size() == 1);
    CHECK(acted.at(Word{1, 2}) == 1);
}

TEST_CASE("action satisfies the group law") {
    std::mt19937 rng(kSeed + 2);
    const unsigned n = 4;
    std::vector<unsigned> sigma{0, 2, 3, 1, 4};
    std::vector<unsigned> tau{0, 4, 1, 3, 2};
    // Composite tau o sigma as relabeling x_i -> tau[sigma[i]].
    std::vector<unsigned> composite(n + 1, 0);
    for (unsigned i = 1; i <= n; ++i) composite[i] = tau[sigma[i]];
    for (int trial = 0; trial < 30; ++trial) {
        LieMonomial m = random_monomial(rng, n);
        auto one_shot = lietree::sigma_action_signed(composite, m);
        auto two_step = lietree::sigma_action_signed(tau, lietree::sigma_action_signed(sigma, m));
        CHECK(one_shot == two_step);
    }
}

TEST_CASE("malformed monomials are rejected") {
    auto bad = LieMonomial::bracket(LieMonomial::variable(1), LieMonomial::variable(1));
    CHECK_THROWS_AS(lietree::straighten(bad), InvariantError);
    auto gap = LieMonomial::bracket(LieMonomial::variable(1), LieMonomial::variable(3));
    CHECK_THROWS_AS(lietree::straighten(gap), InvariantError);
}
