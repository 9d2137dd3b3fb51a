#include "coherence/stagescan.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace coherence::stagescan {

using degrees::DegreeSet;
using degrees::GeneratorFamily;

std::string coop_class_name(CoopClass c) {
    switch (c) {
        case CoopClass::Free: return "Free";
        case CoopClass::FlatColimitOfFree: return "FlatColimitOfFree";
        case CoopClass::PolynomialWithKochmanTorsion: return "PolynomialWithKochmanTorsion";
    }
    return "Free";
}

CoopClass coop_class_from_name(const std::string& name) {
    if (name == "Free") return CoopClass::Free;
    if (name == "FlatColimitOfFree") return CoopClass::FlatColimitOfFree;
    if (name == "PolynomialWithKochmanTorsion") return CoopClass::PolynomialWithKochmanTorsion;
    throw SchemaError("unknown coop_class '" + name + "'");
}

void SpectrumPresentation::validate() const {
    if (!degrees::is_prime(prime)) throw SchemaError("prime field must be prime, got " + prime.str());
    if (!coop_degrees.has_generators())
        throw InvariantError("cooperation support needs at least one generator");

    // Cooperations contain the image of the coefficients: check each
    // coefficient generator (families sampled from below) for membership.
    for (const auto& g : coeff_degrees.fixed_generators()) {
        if (!coop_degrees.contains(g.value) ||
            (g.invertible && !coop_degrees.contains(-g.value)))
            throw InvariantError("coefficient degree " + g.value.str() +
                                 " is not in the cooperation support");
    }
    for (const auto& f : coeff_degrees.families()) {
        unsigned last = f.last_index ? *f.last_index : f.first_index + 3;
        for (unsigned i = f.first_index; i <= last && i <= f.first_index + 3; ++i)
            if (!coop_degrees.contains(f.value_at(i)))
                throw InvariantError("coefficient degree " + f.value_at(i).str() +
                                     " is not in the cooperation support");
    }

    if (coop_class == CoopClass::PolynomialWithKochmanTorsion) {
        // The torsion model computes the homology of a polynomial generator
        // in degree 2p^i - 2; other generator shapes do not qualify.
        auto is_poly_degree = [&](const Int& v) {
            Int q = int_pow(prime, 1);
            for (unsigned i = 1; i <= 64; ++i) {
                Int d = 2 * q - 2;
                if (d == v) return true;
                if (d > v) return false;
                q *= prime;
            }
            return false;
        };
        for (const auto& g : coop_degrees.fixed_generators())
            if (g.invertible || !is_poly_degree(g.value))
                throw InvariantError("Kochman torsion model needs polynomial generators of "
                                     "degree 2p^i-2; found " + g.value.str() +
                                     (g.invertible ? " (invertible)" : ""));
        for (const auto& f : coop_degrees.families())
            if (f.invertible || f.offset != -2 || f.prime != prime)
                throw InvariantError("Kochman torsion model needs the polynomial family "
                                     "2p^i-2 at the spectrum's prime");
    }
}

StageDescriptor describe_stage(unsigned n) {
    if (n < 2) throw InvariantError("stage structures are described for n >= 2");
    StageDescriptor d;
    d.n = n;
    for (unsigned m = 2; m <= n; ++m)
        d.entries.push_back({m, n - m, n - 1, n - m + 1, m});
    return d;
}

namespace {

void require_three_stage(const SpectrumPresentation& spec) {
    if (!spec.odd_commutativity_ok)
        throw NoThreeStage(spec.name + " at p = " + spec.prime.str() +
                           " is not homotopy commutative, so no 3-stage structure exists");
}

Int scan(const SpectrumPresentation& spec, const std::function<bool(long long)>& hit) {
    for (long long n = 3; n <= kScanCeiling; ++n)
        if (hit(n)) return n;
    throw CeilingReached("no window found for " + spec.name + " below n = " +
                         std::to_string(kScanCeiling));
}

// Kochman degree table, grown geometrically to cover a requested degree.
class KochmanDegrees {
public:
    explicit KochmanDegrees(const Int& p) : p_(p), bound_(4 * p * p + 8) {
        table_ = kochman::enumerate_by_degree(p_, bound_);
    }

    const std::vector<kochman::KochmanGenerator>* at_degree(const Int& d) {
        while (d > bound_) {
            bound_ *= 2;
            table_ = kochman::enumerate_by_degree(p_, bound_);
        }
        auto it = table_.find(d);
        return it == table_.end() ? nullptr : &it->second;
    }

private:
    Int p_;
    Int bound_;
    std::map<Int, std::vector<kochman::KochmanGenerator>> table_;
};

std::string terms_text(const std::vector<DegreeSet::Term>& terms) {
    if (terms.empty()) return "0 (empty sum)";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) os << " + ";
        os << terms[i].coefficient.str() << "*" << terms[i].generator.str();
    }
    return os.str();
}

Witness monoid_witness(const SpectrumPresentation& spec, const Int& n, const Int& raising) {
    Witness w;
    w.window_degree = n;
    w.raising_degree = raising;
    if (auto rep = spec.coop_degrees.representation(raising)) w.monoid_representation = *rep;
    std::ostringstream eq;
    eq << "first window at n = " << n.str() << ": a map raising degree by " << raising.str()
       << " = " << terms_text(w.monoid_representation) << " can be nonzero";
    w.equation = eq.str();
    return w;
}

}  // namespace

Int degree_count_bound(const SpectrumPresentation& spec) {
    require_three_stage(spec);
    return scan(spec, [&](long long n) { return spec.coop_degrees.contains(Int(n) - 2); });
}

Int ext1_bound_flat(const SpectrumPresentation& spec) {
    if (spec.coop_class != CoopClass::FlatColimitOfFree)
        throw WrongClass("ext1_bound_flat applies to FlatColimitOfFree cooperations; " +
                         spec.name + " is " + coop_class_name(spec.coop_class));
    require_three_stage(spec);
    return scan(spec, [&](long long n) {
        return spec.coop_degrees.contains(Int(n) - 2) || spec.coop_degrees.contains(Int(n) - 1);
    });
}

std::pair<Int, kochman::KochmanGenerator> refined_bound_kochman(const SpectrumPresentation& spec) {
    if (spec.coop_class != CoopClass::PolynomialWithKochmanTorsion)
        throw WrongClass("refined_bound_kochman applies to PolynomialWithKochmanTorsion "
                         "cooperations; " + spec.name + " is " + coop_class_name(spec.coop_class));
    require_three_stage(spec);
    KochmanDegrees table(spec.prime);
    kochman::KochmanGenerator witness;
    Int n = scan(spec, [&](long long n) {
        if (!spec.coop_degrees.contains(Int(n) - 2)) return false;
        const auto* gens = table.at_degree(Int(n) - 1);
        if (!gens) return false;
        witness = gens->front();
        return true;
    });
    return {n, witness};
}

Int uniqueness_bound(const SpectrumPresentation& spec) {
    require_three_stage(spec);
    switch (spec.coop_class) {
        case CoopClass::PolynomialWithKochmanTorsion: {
            // Only exponent-only generators (total degree a positive sum of
            // 2p^i - 2) can react in the uniqueness window.
            DegreeSet t0 = degrees::bp(spec.prime);
            return scan(spec, [&](long long n) {
                Int d = Int(n) - 1;
                return d > 0 && spec.coop_degrees.contains(d) && t0.contains(d);
            });
        }
        case CoopClass::Free:
            return scan(spec, [&](long long n) { return spec.coop_degrees.contains(Int(n) - 1); });
        case CoopClass::FlatColimitOfFree:
            return scan(spec, [&](long long n) {
                return spec.coop_degrees.contains(Int(n) - 1) ||
                       spec.coop_degrees.contains(Int(n));
            });
    }
    throw InvariantError("unreachable cooperation class");
}

std::vector<ExploratoryCandidate> exploratory_candidates(const SpectrumPresentation& spec,
                                                         const Int& below) {
    std::vector<ExploratoryCandidate> out;
    if (spec.coop_class != CoopClass::PolynomialWithKochmanTorsion) return out;
    DegreeSet shifts = degrees::bp(spec.prime);
    Int d_cap = 2 * below + 8 * spec.prime * spec.prime + 16;
    auto table = kochman::enumerate_by_degree(spec.prime, d_cap);
    for (Int n = 3; n < below; ++n) {
        if (!spec.coop_degrees.contains(n - 2)) continue;
        for (const auto& [d, gens] : table) {
            if (d < n - 1) continue;
            Int shift = d - (n - 1);
            if (shift > 0 && shifts.contains(shift)) {
                out.push_back({n, gens.front().text(), shift});
                break;
            }
        }
    }
    return out;
}

CoherenceReport report(const SpectrumPresentation& spec, bool exploratory) {
    spec.validate();
    require_three_stage(spec);

    CoherenceReport r;
    r.name = spec.name;
    r.prime = spec.prime;
    r.notes = spec.notes;

    switch (spec.coop_class) {
        case CoopClass::PolynomialWithKochmanTorsion: {
            r.degree_count_bound = degree_count_bound(spec);
            auto [n, gen] = refined_bound_kochman(spec);
            r.refined_bound = n;
            r.witness = monoid_witness(spec, n, n - 2);
            r.witness.kochman_generator = gen.text();
            std::ostringstream eq;
            eq << "first window at n = " << n.str() << ": n-2 = " << Int(n - 2).str()
               << " = " << terms_text(r.witness.monoid_representation)
               << " and n-1 = " << Int(n - 1).str() << " = degree of " << gen.text();
            r.witness.equation = eq.str();
            r.notes.push_back("refined scan matches the class in homological degree n-1 "
                              "directly against torsion generator degrees (zero shift)");
            break;
        }
        case CoopClass::Free:
            r.degree_count_bound = degree_count_bound(spec);
            r.witness = monoid_witness(spec, r.degree_count_bound, r.degree_count_bound - 2);
            break;
        case CoopClass::FlatColimitOfFree: {
            Int n = ext1_bound_flat(spec);
            r.degree_count_bound = n;
            Int raising = spec.coop_degrees.contains(n - 2) ? n - 2 : n - 1;
            r.witness = monoid_witness(spec, n, raising);
            r.notes.push_back("flat non-free cooperations: the existence bound counts the "
                              "Ext^0 (raise n-2) and Ext^1 (raise n-1) lines together");
            break;
        }
    }
    r.uniqueness_bound = uniqueness_bound(spec);

    if (exploratory && spec.coop_class == CoopClass::PolynomialWithKochmanTorsion) {
        r.exploratory = exploratory_candidates(spec, *r.refined_bound);
        r.notes.push_back("exploratory candidates allow a positive degree shift in the "
                          "homological bookkeeping; they carry no theorem status and are "
                          "searched within a bounded degree window");
    }
    return r;
}

namespace presets {

SpectrumPresentation bp(const Int& p) {
    SpectrumPresentation s;
    s.name = "BP";
    s.prime = p;
    s.coeff_degrees = degrees::bp(p);
    s.coop_degrees = degrees::bp(p);
    s.coop_class = CoopClass::PolynomialWithKochmanTorsion;
    s.odd_commutativity_ok = true;
    return s;
}

SpectrumPresentation e(unsigned i, const Int& p) {
    SpectrumPresentation s;
    s.name = "E(" + std::to_string(i) + ")";
    s.prime = p;
    if (i >= 2) s.coeff_degrees.add_family({p, -2, 1, i - 1, false});
    s.coeff_degrees.add_generator(2 * int_pow(p, i) - 2, true);
    s.coop_degrees = degrees::e(i, p);
    s.coop_class = CoopClass::FlatColimitOfFree;
    s.odd_commutativity_ok = true;
    if (i == 1)
        s.notes.push_back("estimate known to be far from sharp for index 1: E(1) admits a "
                          "unique E-infinity structure at every prime");
    return s;
}

SpectrumPresentation e_localized(unsigned i, const Int& p) {
    SpectrumPresentation s;
    s.name = "localized E(" + std::to_string(i) + ")";
    s.prime = p;
    if (i >= 2) s.coeff_degrees.add_family({p, -2, 1, i - 1, false});
    s.coeff_degrees.add_generator(2 * int_pow(p, i) - 2, true);
    s.coop_degrees = degrees::e_localized(i, p);
    s.coop_class = CoopClass::Free;
    s.odd_commutativity_ok = true;
    if (i == 1)
        s.notes.push_back("estimate known to be far from sharp for index 1: E(1) admits a "
                          "unique E-infinity structure at every prime");
    return s;
}

SpectrumPresentation kn(unsigned n, const Int& p) {
    SpectrumPresentation s;
    s.name = "K(" + std::to_string(n) + ")";
    s.prime = p;
    s.coeff_degrees.add_generator(2 * int_pow(p, n) - 2, true);
    s.coop_degrees = degrees::k(n, p);
    s.coop_class = CoopClass::Free;
    s.odd_commutativity_ok = (p != 2);
    s.notes.push_back("tau_0 has degree 1, giving the first window at n = 3 "
                      "(obstruction to a 4-stage structure)");
    return s;
}

SpectrumPresentation pn(unsigned n, const Int& p) {
    SpectrumPresentation s;
    s.name = "P(" + std::to_string(n) + ")";
    s.prime = p;
    s.coeff_degrees.add_family({p, -2, n, std::nullopt, false});
    s.coop_degrees = degrees::p_n(n, p);
    s.coop_class = CoopClass::Free;
    s.odd_commutativity_ok = (p != 2);
    s.notes.push_back("a_0 has degree 1, giving the first window at n = 3 "
                      "(obstruction to a 4-stage structure)");
    return s;
}

Int thh_bp_stage(const Int& p) { return 2 * p; }

Int guaranteed_stage(const std::string& preset, unsigned index, const Int& p) {
    if (preset == "bp") return 2 * p * p + 2 * p - 2;
    if (preset == "thh-bp") return thh_bp_stage(p);
    if (preset == "e") return ext1_bound_flat(e(index, p));
    if (preset == "e-localized") return degree_count_bound(e_localized(index, p));
    if (preset == "kn") return degree_count_bound(kn(index, p));
    if (preset == "pn") return degree_count_bound(pn(index, p));
    throw SchemaError("unknown preset '" + preset + "'");
}

}  // namespace presets

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& what) { throw SchemaError(what); }

}  // namespace

SpectrumPresentation spectrum_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) schema_fail("top-level value must be an object");
    for (const auto& [key, _] : doc.items())
        if (key != "name" && key != "prime" && key != "generators" && key != "coop_class" &&
            key != "odd_commutativity_ok")
            schema_fail("unknown field '" + key + "'");

    SpectrumPresentation s;
    s.name = doc.value("name", std::string("custom"));
    if (!doc.contains("prime") || !doc["prime"].is_number_integer())
        schema_fail("field 'prime' (integer) is required");
    s.prime = Int(doc["prime"].get<long long>());
    if (!degrees::is_prime(s.prime)) schema_fail("prime field must be prime, got " + s.prime.str());

    if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty())
        schema_fail("field 'generators' (non-empty array) is required");
    for (const auto& g : doc["generators"]) {
        if (!g.is_object()) schema_fail("each generator must be an object");
        bool invertible = g.value("invertible", false);
        if (g.contains("degree")) {
            if (!g["degree"].is_number_integer()) schema_fail("generator degree must be an integer");
            s.coop_degrees.add_generator(Int(g["degree"].get<long long>()), invertible);
        } else if (g.contains("family")) {
            std::string family = g["family"].get<std::string>();
            int offset = 0;
            unsigned default_first = 1;
            if (family == "2p^i-2") {
                offset = -2;
            } else if (family == "2p^i-1") {
                offset = -1;
                default_first = 0;
            } else {
                schema_fail("unknown family '" + family + "' (use \"2p^i-2\" or \"2p^i-1\")");
            }
            GeneratorFamily f{s.prime, offset, default_first, std::nullopt, invertible};
            if (g.contains("min_index")) f.first_index = g["min_index"].get<unsigned>();
            if (g.contains("max_index")) f.last_index = g["max_index"].get<unsigned>();
            s.coop_degrees.add_family(f);
        } else {
            schema_fail("generator needs 'degree' or 'family'");
        }
    }

    if (!doc.contains("coop_class") || !doc["coop_class"].is_string())
        schema_fail("field 'coop_class' (string) is required");
    s.coop_class = coop_class_from_name(doc["coop_class"].get<std::string>());
    if (!doc.contains("odd_commutativity_ok") || !doc["odd_commutativity_ok"].is_boolean())
        schema_fail("field 'odd_commutativity_ok' (boolean) is required");
    s.odd_commutativity_ok = doc["odd_commutativity_ok"].get<bool>();

    // Only the cooperation support enters the window scans; the schema
    // describes it and the coefficient support is taken to coincide.
    s.coeff_degrees = s.coop_degrees;
    s.validate();
    return s;
}

SpectrumPresentation spectrum_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open spectrum file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return spectrum_from_json_text(buffer.str());
}

}  // namespace coherence::stagescan
