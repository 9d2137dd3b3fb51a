#include "coherence/stagescan.hpp"

#include "doctest.h"

using namespace coherence;
using stagescan::CoopClass;
using stagescan::SpectrumPresentation;

namespace {

// Direct minimization oracle for the window scans.
long long first_window(const degrees::DegreeSet& s, bool ext1) {
    for (long long n = 3;; ++n) {
        if (s.contains(Int(n) - 2)) return n;
        if (ext1 && s.contains(Int(n) - 1)) return n;
    }
}

SpectrumPresentation evens_from_ten() {
    SpectrumPresentation s;
    s.name = "hypothetical";
    s.prime = 2;
    for (long long g = 10; g <= 28; g += 2) s.coop_degrees.add_generator(g);
    s.coeff_degrees = s.coop_degrees;
    s.coop_class = CoopClass::FlatColimitOfFree;
    s.odd_commutativity_ok = true;
    return s;
}

}  // namespace

TEST_CASE("describe_stage lists arities with their skeleta") {
    auto two = stagescan::describe_stage(2);
    REQUIRE(two.entries.size() == 1);
    CHECK(two.entries[0].arity == 2);
    CHECK(two.entries[0].skeleton_dim == 0);

    auto three = stagescan::describe_stage(3);
    REQUIRE(three.entries.size() == 2);
    CHECK(three.entries[0].arity == 2);
    CHECK(three.entries[0].skeleton_dim == 1);
    CHECK(three.entries[1].arity == 3);
    CHECK(three.entries[1].skeleton_dim == 0);

    auto five = stagescan::describe_stage(5);
    REQUIRE(five.entries.size() == 4);
    for (std::size_t i = 0; i < five.entries.size(); ++i) {
        CHECK(five.entries[i].arity == i + 2);
        CHECK(five.entries[i].skeleton_dim == 5 - five.entries[i].arity);
        CHECK(five.entries[i].suspension == 4);
        CHECK(five.entries[i].group_ring_copies == 5 - five.entries[i].arity + 1);
        CHECK(five.entries[i].cooperation_copies == five.entries[i].arity);
    }
}

TEST_CASE("degree count bound") {
    for (long long p : {2, 3, 5, 7, 11, 13})
        CHECK(stagescan::degree_count_bound(stagescan::presets::bp(p)) == 2 * p);
    CHECK(stagescan::degree_count_bound(stagescan::presets::kn(2, 3)) == 3);
    CHECK(stagescan::degree_count_bound(stagescan::presets::pn(1, 5)) == 3);
    for (long long p : {2, 3, 5})
        CHECK(stagescan::degree_count_bound(stagescan::presets::e_localized(2, p)) == 2 * p);
    CHECK_THROWS_AS(stagescan::degree_count_bound(stagescan::presets::kn(1, 2)), NoThreeStage);
}

TEST_CASE("flat Ext^1 bound") {
    for (long long p : {2, 3, 5})
        for (unsigned i : {1u, 2u, 3u, 4u})
            CHECK(stagescan::ext1_bound_flat(stagescan::presets::e(i, p)) == 2 * p - 1);

    auto hyp = evens_from_ten();
    CHECK(stagescan::ext1_bound_flat(hyp) == 11);
    CHECK(stagescan::ext1_bound_flat(hyp) == first_window(hyp.coop_degrees, true));

    CHECK_THROWS_AS(stagescan::ext1_bound_flat(stagescan::presets::bp(3)), WrongClass);
}

TEST_CASE("refined Kochman bound") {
    auto [n2, g2] = stagescan::refined_bound_kochman(stagescan::presets::bp(2));
    CHECK(n2 == 10);
    CHECK(g2.text() == "P(1,2)");
    auto [n3, g3] = stagescan::refined_bound_kochman(stagescan::presets::bp(3));
    CHECK(n3 == 22);
    CHECK(g3.text() == "P(1,2)");
    auto [n5, g5] = stagescan::refined_bound_kochman(stagescan::presets::bp(5));
    CHECK(n5 == 58);
    CHECK(g5.text() == "P(1,2)");
    CHECK_THROWS_AS(stagescan::refined_bound_kochman(stagescan::presets::e(2, 3)), WrongClass);
}

TEST_CASE("refined bound: closed form vs exhaustive scan") {
    // Scan every n below the closed-form value and check the window really is
    // first: no smaller n has both n-2 in the support and n-1 a torsion
    // generator degree.
    for (long long p : {2, 3, 5, 7, 11, 13}) {
        auto spec = stagescan::presets::bp(p);
        Int expected = 2 * p * p + 2 * p - 2;
        auto [n, gen] = stagescan::refined_bound_kochman(spec);
        CHECK(n == expected);
        auto table = kochman::enumerate_by_degree(p, expected);
        for (Int m = 3; m < n; ++m) {
            bool window = spec.coop_degrees.contains(m - 2) && table.count(m - 1) > 0;
            CHECK_FALSE(window);
        }
    }
}

TEST_CASE("parity exclusion below the refined bound") {
    // With even cooperation generators, n-2 in the support forces n-1 odd,
    // while every exponent-only torsion degree is even.
    for (long long p : {2, 3, 5}) {
        auto spec = stagescan::presets::bp(p);
        auto t0 = degrees::bp(p);
        for (long long n = 3; n < 2 * p * p + 2 * p - 2; ++n) {
            if (!spec.coop_degrees.contains(Int(n) - 2)) continue;
            Int nm1 = Int(n) - 1;
            CHECK(nm1 % 2 != 0);
            if (t0.contains(nm1)) CHECK(nm1 % 2 != 0);
        }
    }
}

TEST_CASE("uniqueness bounds") {
    for (long long p : {2, 3, 5, 7, 11, 13})
        CHECK(stagescan::uniqueness_bound(stagescan::presets::bp(p)) == 2 * p - 1);
    for (long long p : {2, 3, 5}) {
        for (unsigned i : {1u, 2u, 3u, 4u}) {
            CHECK(stagescan::uniqueness_bound(stagescan::presets::e(i, p)) == 2 * p - 2);
            CHECK(stagescan::uniqueness_bound(stagescan::presets::e_localized(i, p)) == 2 * p - 1);
        }
    }
    CHECK_THROWS_AS(stagescan::uniqueness_bound(stagescan::presets::kn(3, 2)), NoThreeStage);
}

TEST_CASE("bounds never drop when more constraints are scanned") {
    for (long long p : {2, 3, 5, 7}) {
        auto spec = stagescan::presets::bp(p);
        auto r = stagescan::report(spec);
        REQUIRE(r.refined_bound.has_value());
        CHECK(*r.refined_bound >= r.degree_count_bound);
        CHECK(r.degree_count_bound >= 3);
        CHECK(r.uniqueness_bound >= 3);
    }
}

TEST_CASE("degree count equals min positive plus two") {
    std::vector<SpectrumPresentation> presets;
    for (long long p : {2, 3, 5, 7, 11}) {
        presets.push_back(stagescan::presets::bp(p));
        presets.push_back(stagescan::presets::e_localized(2, p));
        if (p != 2) {
            presets.push_back(stagescan::presets::kn(2, p));
            presets.push_back(stagescan::presets::pn(2, p));
        }
    }
    for (const auto& spec : presets) {
        Int mp = spec.coop_degrees.min_positive();
        if (mp + 2 >= 3)
            CHECK(stagescan::degree_count_bound(spec) == mp + 2);
    }
}

TEST_CASE("reports by class") {
    auto bp3 = stagescan::report(stagescan::presets::bp(3));
    CHECK(bp3.degree_count_bound == 6);
    REQUIRE(bp3.refined_bound.has_value());
    CHECK(*bp3.refined_bound == 22);
    CHECK(bp3.uniqueness_bound == 5);
    REQUIRE(bp3.witness.kochman_generator.has_value());
    CHECK(*bp3.witness.kochman_generator == "P(1,2)");

    auto pn5 = stagescan::report(stagescan::presets::pn(2, 5));
    CHECK(pn5.degree_count_bound == 3);
    CHECK_FALSE(pn5.refined_bound.has_value());
    bool has_a0_note = false;
    for (const auto& note : pn5.notes)
        if (note.find("a_0") != std::string::npos) has_a0_note = true;
    CHECK(has_a0_note);

    CHECK_THROWS_AS(stagescan::report(stagescan::presets::kn(2, 2)), NoThreeStage);

    auto e1 = stagescan::report(stagescan::presets::e(1, 5));
    bool has_caveat = false;
    for (const auto& note : e1.notes)
        if (note.find("far from sharp") != std::string::npos) has_caveat = true;
    CHECK(has_caveat);
    CHECK(e1.degree_count_bound == 9);  // the Ext^1 line fires first for flat

    // Witness representation sums to the raising degree.
    Int total = 0;
    for (const auto& t : bp3.witness.monoid_representation)
        total += t.generator * t.coefficient;
    CHECK(total == bp3.witness.raising_degree);
}

TEST_CASE("exploratory candidates are surfaced without theorem status") {
    auto r = stagescan::report(stagescan::presets::bp(2), true);
    REQUIRE(!r.exploratory.empty());
    for (const auto& c : r.exploratory) {
        CHECK(c.n < *r.refined_bound);
        CHECK(c.n >= 3);
        CHECK(c.shift > 0);
    }
    // The shifted bookkeeping admits a candidate as low as n = 4 at p = 2:
    // degree(P(1,2)) = 9 = (n-1) + 6 with 6 in the shift monoid.
    CHECK(r.exploratory.front().n == 4);
}

TEST_CASE("spectrum JSON loading") {
    const std::string bp2_json = R"({
        "name": "BP",
        "prime": 2,
        "generators": [{"family": "2p^i-2"}],
        "coop_class": "PolynomialWithKochmanTorsion",
        "odd_commutativity_ok": true
    })";
    auto spec = stagescan::spectrum_from_json_text(bp2_json);
    auto loaded = stagescan::report(spec);
    auto builtin = stagescan::report(stagescan::presets::bp(2));
    CHECK(loaded.degree_count_bound == builtin.degree_count_bound);
    CHECK(loaded.refined_bound == builtin.refined_bound);
    CHECK(loaded.uniqueness_bound == builtin.uniqueness_bound);

    CHECK_THROWS_AS(stagescan::spectrum_from_json_text("not json"), ParseError);
    CHECK_THROWS_AS(stagescan::spectrum_from_json_text(R"({"prime": 4,
        "generators": [{"degree": 2}], "coop_class": "Free",
        "odd_commutativity_ok": true})"),
                    SchemaError);
    // Kochman class with an odd generator violates the class invariant.
    CHECK_THROWS_AS(stagescan::spectrum_from_json_text(R"({"prime": 3,
        "generators": [{"degree": 5}],
        "coop_class": "PolynomialWithKochmanTorsion",
        "odd_commutativity_ok": true})"),
                    InvariantError);
    CHECK_THROWS_AS(stagescan::spectrum_from_json_text(R"({"prime": 3, "extra": 1,
        "generators": [{"degree": 4}], "coop_class": "Free",
        "odd_commutativity_ok": true})"),
                    SchemaError);
}

TEST_CASE("guaranteed stages for presets") {
    CHECK(stagescan::presets::guaranteed_stage("bp", 1, 3) == 22);
    CHECK(stagescan::presets::guaranteed_stage("thh-bp", 1, 3) == 6);
    CHECK(stagescan::presets::guaranteed_stage("e", 2, 3) == 5);
    CHECK(stagescan::presets::guaranteed_stage("e-localized", 2, 3) == 6);
    CHECK(stagescan::presets::guaranteed_stage("kn", 2, 3) == 3);
}
