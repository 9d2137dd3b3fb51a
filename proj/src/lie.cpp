#include "coherence/lie.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace coherence::lietree {

LieMonomial LieMonomial::variable(unsigned index) {
    if (index == 0) throw InvariantError("variables are numbered from 1");
    auto node = std::make_shared<Node>();
    node->var = index;
    return LieMonomial(std::move(node));
}

LieMonomial LieMonomial::bracket(LieMonomial left, LieMonomial right) {
    auto node = std::make_shared<Node>();
    node->left = left.node_;
    node->right = right.node_;
    return LieMonomial(std::move(node));
}

LieMonomial LieMonomial::from_word(const std::vector<unsigned>& word) {
    if (word.empty()) throw InvariantError("empty word has no monomial");
    LieMonomial m = variable(word[0]);
    for (std::size_t i = 1; i < word.size(); ++i) m = bracket(m, variable(word[i]));
    return m;
}

LieMonomial LieMonomial::left() const {
    if (is_variable()) throw InvariantError("variable has no factors");
    return LieMonomial(node_->left);
}

LieMonomial LieMonomial::right() const {
    if (is_variable()) throw InvariantError("variable has no factors");
    return LieMonomial(node_->right);
}

std::vector<unsigned> LieMonomial::variables() const {
    std::vector<unsigned> out;
    auto walk = [&](auto&& self, const Node* node) -> void {
        if (!node->left) {
            out.push_back(node->var);
            return;
        }
        self(self, node->left.get());
        self(self, node->right.get());
    };
    walk(walk, node_.get());
    return out;
}

std::string LieMonomial::text() const {
    std::ostringstream os;
    auto walk = [&](auto&& self, const Node* node) -> void {
        if (!node->left) {
            os << "x" << node->var;
            return;
        }
        os << "[";
        self(self, node->left.get());
        os << ",";
        self(self, node->right.get());
        os << "]";
    };
    walk(walk, node_.get());
    return os.str();
}

namespace {

void require_multilinear(const LieMonomial& m) {
    auto vars = m.variables();
    std::vector<unsigned> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i + 1)
            throw InvariantError("monomial must use x_1..x_n exactly once each: " + m.text());
}

void add_term(Combination& c, const Word& w, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = c.emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) c.erase(it);
    }
}

using WordCombination = std::map<Word, Int>;

// [U, V] for left-normed words, as a combination of left-normed words. Every
// result keeps U's head as its head. Recursion on the length of V:
//   [U, y]        = U y
//   [U, [V', y]]  = [[U, V'], y] - [[U, y], V'].
void bracket_words(const Word& u, const Word& v, const Int& coeff, WordCombination& out) {
    if (v.size() == 1) {
        Word w = u;
        w.push_back(v[0]);
        add_term(out, w, coeff);
        return;
    }
    Word v_prefix(v.begin(), v.end() - 1);
    unsigned y = v.back();

    WordCombination inner;
    bracket_words(u, v_prefix, 1, inner);
    for (const auto& [w, c] : inner) {
        Word grown = w;
        grown.push_back(y);
        add_term(out, grown, coeff * c);
    }

    Word u_grown = u;
    u_grown.push_back(y);
    bracket_words(u_grown, v_prefix, -coeff, out);
}

// Multilinear expansion into left-normed words (arbitrary leading variable).
WordCombination expand(const LieMonomial& m) {
    if (m.is_variable()) {
        WordCombination c;
        c[{m.variable_index()}] = 1;
        return c;
    }
    WordCombination lhs = expand(m.left());
    WordCombination rhs = expand(m.right());
    WordCombination out;
    for (const auto& [u, cu] : lhs)
        for (const auto& [v, cv] : rhs) bracket_words(u, v, cu * cv, out);
    return out;
}

// Rewrites a left-normed word as a combination of x_1-leading ones.
void to_leading(const Word& w, const Int& coeff, Combination& out) {
    if (w[0] == 1) {
        add_term(out, w, coeff);
        return;
    }
    if (w.back() == 1) {
        // [W', x_1] = -[x_1, W']; bracketing x_1 against the rest keeps the
        // head at x_1 in every resulting word.
        Word rest(w.begin(), w.end() - 1);
        WordCombination c;
        bracket_words({1}, rest, -coeff, c);
        for (const auto& [word, k] : c) add_term(out, word, k);
        return;
    }
    Word prefix(w.begin(), w.end() - 1);
    Combination lead;
    to_leading(prefix, coeff, lead);
    for (const auto& [word, k] : lead) {
        Word grown = word;
        grown.push_back(w.back());
        add_term(out, grown, k);
    }
}

}  // namespace

std::vector<LieMonomial> lie_basis(unsigned n) {
    if (n < 1 || n > 8) throw SizeLimit("Lie basis is bounded to 1 <= n <= 8");
    std::vector<unsigned> tail(n >= 1 ? n - 1 : 0);
    std::iota(tail.begin(), tail.end(), 2);
    std::vector<LieMonomial> basis;
    do {
        Word w{1};
        w.insert(w.end(), tail.begin(), tail.end());
        basis.push_back(LieMonomial::from_word(w));
    } while (std::next_permutation(tail.begin(), tail.end()));
    return basis;
}

Combination straighten(const LieMonomial& m) {
    require_multilinear(m);
    Combination out;
    for (const auto& [w, c] : expand(m)) to_leading(w, c, out);
    return out;
}

int permutation_sign(const std::vector<unsigned>& perm) {
    int sign = 1;
    for (std::size_t i = 1; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

Combination sigma_action_signed(const std::vector<unsigned>& perm, const Combination& v) {
    Combination out;
    const Int sign = permutation_sign(perm);
    for (const auto& [w, c] : v) {
        Word relabeled;
        relabeled.reserve(w.size());
        for (unsigned x : w) {
            if (x >= perm.size()) throw InvariantError("permutation too short for the monomial");
            relabeled.push_back(perm[x]);
        }
        Combination straightened;
        to_leading(relabeled, sign * c, straightened);
        for (const auto& [word, k] : straightened) add_term(out, word, k);
    }
    return out;
}

Combination sigma_action_signed(const std::vector<unsigned>& perm, const LieMonomial& m) {
    return sigma_action_signed(perm, straighten(m));
}

std::string combination_text(const Combination& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, k] : c) {
        if (k > 0 && !first) os << " + ";
        if (k < 0) os << (first ? "-" : " - ");
        Int mag = k < 0 ? Int(-k) : k;
        if (mag != 1) os << mag.str() << "*";
        os << LieMonomial::from_word(w).text();
        first = false;
    }
    return os.str();
}

}  // namespace coherence::lietree
