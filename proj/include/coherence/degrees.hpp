#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coherence/bigint.hpp"
#include "coherence/errors.hpp"

namespace coherence::degrees {

// One generator of a degree set. Non-invertible generators carry non-negative
// coefficients, invertible ones (degrees of units such as v_i^{-1}) carry any
// integer coefficient.
struct DegreeGenerator {
    Int value;
    bool invertible = false;
};

// The infinite families 2p^i - 2 (polynomial generators v_i, t_i) and
// 2p^i - 1 (exterior generators tau_i, a_i, lambda_i). A family is never
// truncated by construction; members are materialized on demand up to the
// range a query actually touches, so truncation cannot change an answer.
struct GeneratorFamily {
    Int prime;
    int offset = -2;  // -2 for polynomial families, -1 for exterior ones
    unsigned first_index = 1;
    std::optional<unsigned> last_index;  // inclusive; empty = infinite
    bool invertible = false;

    Int value_at(unsigned i) const { return 2 * int_pow(prime, i) + offset; }
    std::string text() const;
};

// A finitely generated sub-monoid/group of the integers:
//   { sum c_g * g : c_g >= 0 for non-invertible g, c_g in Z for invertible g }.
// Membership, minimization and enumeration are exact; a memoized reachability
// table (plus the conductor of the non-invertible part) keeps repeated
// queries cheap. The table is guarded by a mutex, so a shared DegreeSet
// behaves like the cache-free pure function under concurrent reads.
class DegreeSet {
public:
    struct Term {
        Int generator;
        Int coefficient;
        bool invertible;
    };

    DegreeSet() = default;
    DegreeSet(const DegreeSet& other);
    DegreeSet& operator=(const DegreeSet& other);

    void add_generator(const Int& value, bool invertible = false);
    void add_family(GeneratorFamily family);

    bool has_generators() const { return !fixed_.empty() || !families_.empty(); }
    bool has_invertible() const;
    bool all_values_even() const;

    bool contains(const Int& d) const;
    Int min_positive() const;
    std::vector<Int> enumerate_up_to(const Int& bound) const;

    // gcd of every generator value; all members are multiples of it.
    Int gcd_all() const;

    // A witness d = sum c_g * g, if d is a member. Coefficients on
    // non-invertible generators are non-negative.
    std::optional<std::vector<Term>> representation(const Int& d) const;

    // Every generator with |value| <= limit, families included.
    std::vector<DegreeGenerator> materialize(const Int& limit) const;

    std::string text() const;

    const std::vector<DegreeGenerator>& fixed_generators() const { return fixed_; }
    const std::vector<GeneratorFamily>& families() const { return families_; }

    // Scaled size limit for the reachability table.
    static constexpr std::int64_t kTableCap = std::int64_t(1) << 26;

private:
    struct MonoidCache {
        std::vector<bool> reachable;           // index s <-> value s * scale
        std::optional<std::int64_t> conductor; // table true for all s >= conductor
        std::int64_t min_scaled_gen = 0;
        std::set<Int> residues;                // table-part residues mod residues_mod
        std::optional<Int> residues_mod;
    };

    Int monoid_gcd() const;    // non-invertible part only
    Int invertible_gcd() const;
    const MonoidCache& ensure_table(std::int64_t scaled_need) const;
    bool contains_monoid(const Int& v) const;

    std::vector<DegreeGenerator> fixed_;
    std::vector<GeneratorFamily> families_;

    mutable std::mutex mutex_;
    mutable MonoidCache cache_;
};

// Degree supports of the cooperation algebras treated in the analysis.
DegreeSet bp(const Int& p);
DegreeSet e(unsigned i, const Int& p);
DegreeSet e_localized(unsigned i, const Int& p);
DegreeSet k(unsigned n, const Int& p);
DegreeSet p_n(unsigned n, const Int& p);

bool is_prime(const Int& p);

}  // namespace coherence::degrees
