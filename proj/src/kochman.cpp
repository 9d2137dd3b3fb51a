#include "coherence/kochman.hpp"

#include <algorithm>
#include <sstream>

namespace coherence::kochman {

std::int64_t KochmanGenerator::exponent_sum() const {
    std::int64_t s = 0;
    for (const auto& [i, e] : exponents) s += e;
    return s;
}

std::string KochmanGenerator::text() const {
    if (is_unit()) return "1";
    std::ostringstream os;
    if (!n_list.empty()) {
        os << "P(";
        for (std::size_t j = 0; j < n_list.size(); ++j) {
            if (j) os << ",";
            os << n_list[j];
        }
        os << ")";
    }
    for (std::size_t j = 0; j < exponents.size(); ++j) {
        if (!n_list.empty() || j) os << "*";
        os << "z" << exponents[j].first << "^" << exponents[j].second;
    }
    return os.str();
}

bool lex_less(const KochmanGenerator& a, const KochmanGenerator& b) {
    if (a.t() != b.t()) return a.t() < b.t();
    if (a.n_list != b.n_list) return a.n_list < b.n_list;
    unsigned top = 0;
    if (!a.exponents.empty()) top = std::max(top, a.exponents.back().first);
    if (!b.exponents.empty()) top = std::max(top, b.exponents.back().first);
    auto exp_at = [](const KochmanGenerator& g, unsigned i) -> std::int64_t {
        for (const auto& [j, e] : g.exponents)
            if (j == i) return e;
        return 0;
    };
    for (unsigned i = 1; i <= top; ++i) {
        std::int64_t ea = exp_at(a, i), eb = exp_at(b, i);
        if (ea != eb) return ea < eb;
    }
    return false;
}

bool is_admissible(const KochmanGenerator& g) {
    if (g.t() == 1) return false;
    unsigned prev = 0;
    for (unsigned n : g.n_list) {
        if (n <= prev) return false;
        prev = n;
    }
    unsigned prev_i = 0;
    for (const auto& [i, e] : g.exponents) {
        if (i == 0 || i <= prev_i || e <= 0) return false;
        prev_i = i;
    }
    if (g.t() > 0 && !g.exponents.empty() && g.exponents.front().first < g.n_list.front())
        return false;
    if (g.t() + g.exponent_sum() == 0) return false;
    return true;
}

Int degree(const KochmanGenerator& g, const Int& p) {
    if (!is_admissible(g) && !g.is_unit())
        throw InvalidGenerator("not an admissible generator: " + g.text());
    Int d = 0;
    if (!g.n_list.empty()) {
        Int s = 0;
        for (unsigned n : g.n_list) s += int_pow(p, n);
        d = 2 * s - Int(g.t()) - 1;
    }
    for (const auto& [i, e] : g.exponents) d += Int(e) * (2 * int_pow(p, i) - 2);
    return d;
}

namespace {

using Table = std::map<Int, std::vector<KochmanGenerator>>;

// Extends `current` with exponents on indices >= start within the remaining
// degree budget; each complete vector is emitted exactly once, at the first
// index that no longer fits.
void enumerate_exponents(const Int& p, unsigned start, const Int& room, const Int& degree_so_far,
                         const std::vector<unsigned>& n_list,
                         std::vector<std::pair<unsigned, std::int64_t>>& current, Table& out) {
    Int zi = 2 * int_pow(p, start) - 2;
    if (zi > room) {
        if (!n_list.empty() || !current.empty())
            out[degree_so_far].push_back({n_list, current});
        return;
    }
    enumerate_exponents(p, start + 1, room, degree_so_far, n_list, current, out);
    Int used = zi;
    for (std::int64_t e = 1; used <= room; ++e, used += zi) {
        current.emplace_back(start, e);
        enumerate_exponents(p, start + 1, room - used, degree_so_far + used, n_list, current, out);
        current.pop_back();
    }
}

void emit_with_exponents(const Int& p, const Int& d_max, const std::vector<unsigned>& n_list,
                         const Int& p_degree, Table& out) {
    std::vector<std::pair<unsigned, std::int64_t>> current;
    unsigned start = n_list.empty() ? 1 : n_list.front();
    enumerate_exponents(p, start, d_max - p_degree, p_degree, n_list, current, out);
}

// Strictly increasing P-slot lists; the P-part degree 2*sum p^{n_j} - t - 1
// grows with every added slot, which justifies the break conditions.
void enumerate_p_slots(const Int& p, const Int& d_max, std::vector<unsigned>& n_list,
                       const Int& power_sum, Table& out) {
    unsigned t = static_cast<unsigned>(n_list.size());
    if (t >= 2) {
        Int p_degree = 2 * power_sum - Int(t) - 1;
        emit_with_exponents(p, d_max, n_list, p_degree, out);
    }
    unsigned next = n_list.empty() ? 1 : n_list.back() + 1;
    for (unsigned n = next;; ++n) {
        Int grown = power_sum + int_pow(p, n);
        if (t + 1 >= 2) {
            if (2 * grown - Int(t + 1) - 1 > d_max) break;
        } else {
            // A lone slot is inadmissible; require room for the cheapest second slot.
            if (2 * (grown + int_pow(p, n + 1)) - 2 - 1 > d_max) break;
        }
        n_list.push_back(n);
        enumerate_p_slots(p, d_max, n_list, grown, out);
        n_list.pop_back();
    }
}

}  // namespace

Table enumerate_by_degree(const Int& p, const Int& d_max) {
    if (d_max < 0) throw InvalidGenerator("d_max must be non-negative");
    Table out;

    std::vector<unsigned> no_slots;
    emit_with_exponents(p, d_max, no_slots, 0, out);  // t = 0

    std::vector<unsigned> n_list;
    enumerate_p_slots(p, d_max, n_list, 0, out);  // t >= 2

    for (auto& [d, gens] : out) std::sort(gens.begin(), gens.end(), lex_less);
    return out;
}

Int min_odd_degree(const Int& p) {
    Int bound = 2 * p * p + 2 * p - 3;  // degree of P(1,2), always attained
    auto table = enumerate_by_degree(p, bound);
    for (const auto& [d, gens] : table)
        if (d % 2 != 0 && !gens.empty()) return d;
    throw InvalidGenerator("no odd-degree generator at or below the P(1,2) degree");
}

}  // namespace coherence::kochman
