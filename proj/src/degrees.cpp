#include "coherence/degrees.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace coherence::degrees {

namespace {

Int positive_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// gcd of every member of the family {2p^i + offset : i in range}. The values
// mod g are eventually periodic in i, so the incremental gcd stabilizes after
// finitely many steps and the closed cycle certifies it covers the family.
Int family_gcd(const GeneratorFamily& f) {
    Int g = f.value_at(f.first_index);
    if (f.last_index) {
        for (unsigned i = f.first_index + 1; i <= *f.last_index; ++i)
            g = int_gcd(g, f.value_at(i));
        return g;
    }
    std::set<Int> seen;
    Int p_mod = positive_mod(int_pow(f.prime, f.first_index), g);
    while (true) {
        p_mod = positive_mod(p_mod * f.prime, g);
        Int v_mod = positive_mod(2 * p_mod + f.offset, g);
        if (v_mod != 0) {
            g = int_gcd(g, v_mod);
            seen.clear();
            p_mod = positive_mod(p_mod, g);
        } else {
            if (!seen.insert(p_mod).second) return g;
        }
    }
}

}  // namespace

std::string GeneratorFamily::text() const {
    std::ostringstream os;
    os << "2*" << prime << "^i" << (offset < 0 ? "-" : "+") << std::abs(offset)
       << " for i=" << first_index << "..";
    if (last_index) os << *last_index;
    if (invertible) os << " (invertible)";
    return os.str();
}

DegreeSet::DegreeSet(const DegreeSet& other) : fixed_(other.fixed_), families_(other.families_) {}

DegreeSet& DegreeSet::operator=(const DegreeSet& other) {
    if (this != &other) {
        fixed_ = other.fixed_;
        families_ = other.families_;
        std::lock_guard<std::mutex> lock(mutex_);
        cache_ = MonoidCache{};
    }
    return *this;
}

void DegreeSet::add_generator(const Int& value, bool invertible) {
    if (value == 0) throw InvalidGenerator("generator degree must be non-zero");
    if (!invertible && value < 0)
        throw InvalidGenerator("non-invertible generator degree must be positive; "
                               "mark it invertible to allow both signs");
    Int v = value < 0 ? Int(-value) : value;
    fixed_.push_back({v, invertible});
    std::lock_guard<std::mutex> lock(mutex_);
    cache_ = MonoidCache{};
}

void DegreeSet::add_family(GeneratorFamily family) {
    if (family.prime < 2) throw InvalidGenerator("family prime must be at least 2");
    if (family.value_at(family.first_index) <= 0)
        throw InvalidGenerator("family starts at a non-positive degree");
    if (family.last_index && *family.last_index < family.first_index)
        throw InvalidGenerator("family index range is empty");
    families_.push_back(std::move(family));
    std::lock_guard<std::mutex> lock(mutex_);
    cache_ = MonoidCache{};
}

bool DegreeSet::has_invertible() const {
    for (const auto& g : fixed_)
        if (g.invertible) return true;
    for (const auto& f : families_)
        if (f.invertible) return true;
    return false;
}

bool DegreeSet::all_values_even() const {
    for (const auto& g : fixed_)
        if (g.value % 2 != 0) return false;
    for (const auto& f : families_)
        if (f.offset % 2 != 0) return false;  // 2p^i + odd offset is odd
    return true;
}

std::vector<DegreeGenerator> DegreeSet::materialize(const Int& limit) const {
    std::vector<DegreeGenerator> out;
    for (const auto& g : fixed_)
        if (g.value <= limit) out.push_back(g);
    for (const auto& f : families_) {
        for (unsigned i = f.first_index;; ++i) {
            if (f.last_index && i > *f.last_index) break;
            Int v = f.value_at(i);
            if (v > limit) break;
            out.push_back({v, f.invertible});
        }
    }
    std::sort(out.begin(), out.end(), [](const DegreeGenerator& a, const DegreeGenerator& b) {
        return a.value < b.value || (a.value == b.value && a.invertible < b.invertible);
    });
    return out;
}

Int DegreeSet::monoid_gcd() const {
    Int g = 0;
    for (const auto& gen : fixed_)
        if (!gen.invertible) g = int_gcd(g, gen.value);
    for (const auto& f : families_)
        if (!f.invertible) g = int_gcd(g, family_gcd(f));
    return g;  // 0 when there are no non-invertible generators
}

Int DegreeSet::invertible_gcd() const {
    Int g = 0;
    for (const auto& gen : fixed_)
        if (gen.invertible) g = int_gcd(g, gen.value);
    for (const auto& f : families_)
        if (f.invertible) g = int_gcd(g, family_gcd(f));
    return g;
}

Int DegreeSet::gcd_all() const { return int_gcd(monoid_gcd(), invertible_gcd()); }

// Builds the reachability table of the non-invertible monoid, scaled by its
// gcd, out to at least scaled_need entries (capped). Also locates the
// conductor: a run of min_scaled_gen consecutive reachable entries proves
// everything beyond is reachable, after which the table never needs to grow.
// Generators beyond the table range cannot contribute below it, and any sum
// involving one lies past the conductor, so table plus conductor decide
// membership at every size.
const DegreeSet::MonoidCache& DegreeSet::ensure_table(std::int64_t scaled_need) const {
    if (scaled_need > kTableCap) scaled_need = kTableCap;
    if (static_cast<std::int64_t>(cache_.reachable.size()) > scaled_need || cache_.conductor)
        return cache_;

    Int scale = monoid_gcd();
    std::int64_t target = 4096;
    while (target <= scaled_need) target *= 2;
    target = std::min(target, kTableCap);

    Int abs_limit = scale * target;
    auto gens = materialize(abs_limit);
    std::vector<std::int64_t> scaled;
    for (const auto& g : gens)
        if (!g.invertible) scaled.push_back(to_int64(g.value / scale));
    scaled.erase(std::unique(scaled.begin(), scaled.end()), scaled.end());

    std::vector<bool> table(static_cast<std::size_t>(target) + 1, false);
    table[0] = true;
    for (std::int64_t g : scaled)
        for (std::int64_t s = g; s <= target; ++s)
            if (table[static_cast<std::size_t>(s - g)]) table[static_cast<std::size_t>(s)] = true;

    cache_.reachable = std::move(table);
    cache_.min_scaled_gen = scaled.empty() ? 0 : scaled.front();
    cache_.conductor.reset();
    cache_.residues_mod.reset();
    if (cache_.min_scaled_gen > 0) {
        std::int64_t run = 0;
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(cache_.reachable.size()); ++s) {
            run = cache_.reachable[static_cast<std::size_t>(s)] ? run + 1 : 0;
            if (run == cache_.min_scaled_gen) {
                cache_.conductor = s - run + 1;
                break;
            }
        }
    }
    return cache_;
}

bool DegreeSet::contains_monoid(const Int& v) const {
    if (v < 0) return false;
    if (v == 0) return true;
    Int scale = monoid_gcd();
    if (scale == 0) return false;  // no non-invertible generators at all
    if (v % scale != 0) return false;
    Int s_big = v / scale;
    if (s_big > kTableCap) {
        const auto& cache = ensure_table(kTableCap);
        if (cache.conductor && s_big >= *cache.conductor) return true;
        if (!cache.conductor)
            throw QueryTooLarge("membership table capacity exceeded before the monoid "
                                "became eventually full; query " + v.str() + " undecided");
        return false;
    }
    std::int64_t s = to_int64(s_big);
    const auto& cache = ensure_table(s);
    if (cache.conductor && s >= *cache.conductor) return true;
    if (s < static_cast<std::int64_t>(cache.reachable.size()))
        return cache.reachable[static_cast<std::size_t>(s)];
    throw QueryTooLarge("membership table capacity exceeded; query " + v.str() + " undecided");
}

bool DegreeSet::contains(const Int& d) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (d == 0) return true;
    if (!has_generators()) return false;
    Int h = invertible_gcd();
    if (h == 0) return contains_monoid(d);

    // With invertible part hZ: d is a member iff some monoid element v has
    // v == d (mod h). Table entries cover the sporadic residues; past the
    // conductor the monoid holds every multiple of its gcd, whose residues
    // mod h form the subgroup generated by gcd(scale, h).
    Int scale = monoid_gcd();
    if (scale == 0) return d % h == 0;
    ensure_table(1);
    while (true) {
        const auto& cache = cache_;
        if (cache.conductor && positive_mod(d, int_gcd(scale, h)) == 0) return true;
        if (!cache.residues_mod || *cache.residues_mod != h) {
            std::set<Int> residues;
            for (std::int64_t s = 0; s < static_cast<std::int64_t>(cache.reachable.size()); ++s)
                if (cache.reachable[static_cast<std::size_t>(s)])
                    residues.insert(positive_mod(scale * s, h));
            cache_.residues = std::move(residues);
            cache_.residues_mod = h;
        }
        if (cache_.residues.count(positive_mod(d, h))) return true;
        if (cache.conductor) return false;
        if (static_cast<std::int64_t>(cache.reachable.size()) > kTableCap)
            throw QueryTooLarge("membership undecided: invertible reduction needs the monoid "
                                "conductor, not found within table capacity");
        ensure_table(static_cast<std::int64_t>(cache.reachable.size()) * 2);
    }
}

Int DegreeSet::min_positive() const {
    if (!has_generators()) throw NoPositiveElement("degree set has no generators");
    Int g = gcd_all();
    // Some generator value is itself a member, so the scan terminates.
    Int bound = 0;
    for (const auto& gen : fixed_)
        if (bound == 0 || gen.value < bound) bound = gen.value;
    for (const auto& f : families_) {
        Int v = f.value_at(f.first_index);
        if (bound == 0 || v < bound) bound = v;
    }
    for (Int d = g; d <= bound; d += g)
        if (contains(d)) return d;
    throw NoPositiveElement("no positive member at or below the smallest generator");
}

std::vector<Int> DegreeSet::enumerate_up_to(const Int& bound) const {
    if (bound < 0) throw InvalidGenerator("enumeration bound must be non-negative");
    std::vector<Int> out{0};
    if (!has_generators() || bound == 0) return out;
    Int g = gcd_all();
    for (Int d = g; d <= bound; d += g)
        if (contains(d)) out.push_back(d);
    return out;
}

std::optional<std::vector<DegreeSet::Term>> DegreeSet::representation(const Int& d) const {
    if (!contains(d)) return std::nullopt;
    std::lock_guard<std::mutex> lock(mutex_);
    Int h = invertible_gcd();
    Int scale = monoid_gcd();

    // Peels generators off a monoid element by walking the table downward.
    auto backtrack = [&](const Int& v) -> std::optional<std::vector<Term>> {
        std::vector<Term> terms;
        if (v == 0) return terms;
        if (scale == 0 || v < 0 || v % scale != 0) return std::nullopt;
        Int s_need = v / scale;
        if (s_need > kTableCap) return std::nullopt;
        const auto& cache = ensure_table(to_int64(s_need));
        std::int64_t s = to_int64(s_need);
        if (s >= static_cast<std::int64_t>(cache.reachable.size()) ||
            !cache.reachable[static_cast<std::size_t>(s)])
            return std::nullopt;
        std::vector<std::pair<std::int64_t, Int>> scaled;  // scaled value, original value
        for (const auto& gen : materialize(v))
            if (!gen.invertible) scaled.emplace_back(to_int64(gen.value / scale), gen.value);
        std::map<Int, Int> counts;
        while (s > 0) {
            bool stepped = false;
            for (auto it = scaled.rbegin(); it != scaled.rend(); ++it) {
                if (it->first <= s && cache.reachable[static_cast<std::size_t>(s - it->first)]) {
                    counts[it->second] += 1;
                    s -= it->first;
                    stepped = true;
                    break;
                }
            }
            if (!stepped) return std::nullopt;
        }
        for (const auto& [value, count] : counts) terms.push_back({value, count, false});
        return terms;
    };

    if (h == 0) return backtrack(d);

    // Scan the invertible multiplier over a window covering the sporadic part
    // and one residue cycle past the conductor.
    ensure_table(1);
    Int table_abs = scale == 0 ? Int(0) : scale * Int(cache_.reachable.size());
    Int cycle = scale == 0 ? Int(1) : h / int_gcd(scale, h);
    Int k_hi = d >= 0 ? d / h + 1 : Int(1);
    Int k_lo = (d - table_abs) / h - cycle - 2;
    Int inv_gen = 0;  // smallest invertible generator value
    for (const auto& gen : materialize((d < 0 ? -d : d) + table_abs + (cycle + 2) * h))
        if (gen.invertible && (inv_gen == 0 || gen.value < inv_gen)) inv_gen = gen.value;
    for (Int k = k_hi; k >= k_lo; --k) {
        Int v = d - k * h;
        if (v < 0) continue;
        if (scale == 0 && v != 0) continue;
        auto t = backtrack(v);
        if (t) {
            if (k != 0) {
                if (inv_gen != 0 && k % (inv_gen / h) == 0)
                    t->push_back({inv_gen, k / (inv_gen / h), true});
                else
                    t->push_back({h, k, true});
            }
            return t;
        }
    }
    return std::nullopt;
}

std::string DegreeSet::text() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& g : fixed_) {
        if (!first) os << ", ";
        os << g.value << (g.invertible ? " (invertible)" : "");
        first = false;
    }
    for (const auto& f : families_) {
        if (!first) os << ", ";
        os << f.text();
        first = false;
    }
    return os.str();
}

DegreeSet bp(const Int& p) {
    DegreeSet s;
    s.add_family({p, -2, 1, std::nullopt, false});
    return s;
}

DegreeSet e(unsigned i, const Int& p) {
    if (i < 1) throw InvalidGenerator("Johnson-Wilson index must be at least 1");
    DegreeSet s;
    s.add_family({p, -2, 1, std::nullopt, false});
    s.add_generator(2 * int_pow(p, i) - 2, true);
    return s;
}

DegreeSet e_localized(unsigned i, const Int& p) { return e(i, p); }

DegreeSet k(unsigned n, const Int& p) {
    if (n < 1) throw InvalidGenerator("Morava index must be at least 1");
    DegreeSet s;
    s.add_generator(2 * int_pow(p, n) - 2, true);
    s.add_family({p, -1, 0, n - 1, false});
    return s;
}

DegreeSet p_n(unsigned n, const Int& p) {
    if (n < 1) throw InvalidGenerator("index must be at least 1");
    DegreeSet s;
    s.add_family({p, -2, 1, std::nullopt, false});
    s.add_family({p, -1, 0, n - 1, false});
    return s;
}

bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

}  // namespace coherence::degrees
