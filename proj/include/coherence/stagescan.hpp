#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coherence/degrees.hpp"
#include "coherence/kochman.hpp"

namespace coherence::stagescan {

enum class CoopClass { Free, FlatColimitOfFree, PolynomialWithKochmanTorsion };

std::string coop_class_name(CoopClass c);
CoopClass coop_class_from_name(const std::string& name);

// Degree-theoretic data of a ring spectrum: the prime, the degree supports of
// the coefficients and of the cooperations over them, the homological shape
// of the cooperations, and whether a homotopy commutative multiplication (a
// 3-stage structure) exists at this prime.
struct SpectrumPresentation {
    std::string name;
    Int prime = 2;
    degrees::DegreeSet coeff_degrees;
    degrees::DegreeSet coop_degrees;
    CoopClass coop_class = CoopClass::Free;
    bool odd_commutativity_ok = true;
    std::vector<std::string> notes;  // preset-specific caveats, merged into reports

    void validate() const;
};

// One arity entry of the n-stage filtration: action maps out of the
// (n-m)-skeleton, with obstruction module
//   suspension^{n-1} Lie(m)^* (x) group-ring^{(n-m+1)} (x) cooperations^{m}.
struct StageEntry {
    unsigned arity = 2;
    unsigned skeleton_dim = 0;
    unsigned suspension = 0;
    unsigned group_ring_copies = 0;
    unsigned cooperation_copies = 0;
};

struct StageDescriptor {
    unsigned n = 2;
    std::vector<StageEntry> entries;  // arities 2..n
};

StageDescriptor describe_stage(unsigned n);

// The degree equation behind a reported bound.
struct Witness {
    Int window_degree = 0;   // the cohomological degree n of the first window
    Int raising_degree = 0;  // the degree a nonzero map must raise by
    std::vector<degrees::DegreeSet::Term> monoid_representation;
    std::optional<std::string> kochman_generator;
    std::string equation;
};

// Candidate window surfaced by the exploratory scan (positive shifts in the
// homological-degree bookkeeping); reported without theorem status.
struct ExploratoryCandidate {
    Int n = 0;
    std::string kochman_generator;
    Int shift = 0;  // the positive monoid element added to n-1
};

struct CoherenceReport {
    std::string name;
    Int prime = 2;
    Int degree_count_bound = 3;
    std::optional<Int> refined_bound;
    Int uniqueness_bound = 3;
    Witness witness;
    std::vector<std::string> notes;
    std::vector<ExploratoryCandidate> exploratory;
};

// Hard ceiling for all window scans; reaching it raises CeilingReached.
inline constexpr long long kScanCeiling = 1'000'000;

// Least n >= 3 with n-2 in the cooperation support: below it every
// obstruction window vanishes for degree reasons. Valid as a stage bound for
// free (in particular polynomial) cooperations.
Int degree_count_bound(const SpectrumPresentation& spec);

// Flat non-free cooperations keep an Ext^1 line: least n >= 3 with n-2 or
// n-1 in the support.
Int ext1_bound_flat(const SpectrumPresentation& spec);

// Torsion-module refinement for polynomial cooperations with Kochman-model
// torsion: Ext^0 vanishes outright, and the Ext^1 line can only react to a
// class whose homological degree n-1 is the degree of an admissible odd
// generator, while n-2 stays in the support.
std::pair<Int, kochman::KochmanGenerator> refined_bound_kochman(const SpectrumPresentation& spec);

// First n >= 3 at which the uniqueness window can be nonzero. Kochman model:
// n-1 in the support and equal to an exponent-only generator degree; free
// model: n-1 in the support; flat model: n-1 or n in the support.
Int uniqueness_bound(const SpectrumPresentation& spec);

std::vector<ExploratoryCandidate> exploratory_candidates(const SpectrumPresentation& spec,
                                                         const Int& below);

CoherenceReport report(const SpectrumPresentation& spec, bool exploratory = false);

namespace presets {

SpectrumPresentation bp(const Int& p);
SpectrumPresentation e(unsigned i, const Int& p);
SpectrumPresentation e_localized(unsigned i, const Int& p);
SpectrumPresentation kn(unsigned n, const Int& p);
SpectrumPresentation pn(unsigned n, const Int& p);

// Known guaranteed stage for a preset, used to seed operation queries.
Int guaranteed_stage(const std::string& preset, unsigned index, const Int& p);

// The Hochschild-homology spectrum of BP is exposed only for stage
// description and operation bookkeeping; it has a 2p-stage structure.
Int thh_bp_stage(const Int& p);

}  // namespace presets

// JSON schema:
//   {"name": str, "prime": int, "generators": [gen...],
//    "coop_class": "Free"|"FlatColimitOfFree"|"PolynomialWithKochmanTorsion",
//    "odd_commutativity_ok": bool}
// where gen is {"degree": int, "invertible"?: bool} or
// {"family": "2p^i-2"|"2p^i-1", "min_index"?: int, "max_index"?: int,
//  "invertible"?: bool}. The generators describe the cooperation support;
// the coefficient support is taken to coincide with it.
SpectrumPresentation spectrum_from_json_text(const std::string& text);
SpectrumPresentation spectrum_from_json_file(const std::string& path);

}  // namespace coherence::stagescan
