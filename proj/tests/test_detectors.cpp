#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hazardkit/detectors.hpp"
#include "hazardkit/errors.hpp"
#include "hazardkit/implicants.hpp"
#include "hazardkit/synthesis.hpp"
#include "helpers.hpp"

using namespace hazardkit;
using testutil::pa;

TEST_CASE("worked example: brute force finds the 1-hazard at 0u first") {
    HazardReport r = brute_force_hazard(testutil::example1_circuit());
    REQUIRE(r.found);
    CHECK(r.kind == HazardKind::OneHazard);
    CHECK(r.witness.to_string() == "0u");
    CHECK(r.method == DetectionMethod::Brute);
    CHECK(r.verified);
}

TEST_CASE("worked example: all hazards are exactly {0u, u1}") {
    auto all = list_all_hazards(testutil::example1_circuit());
    REQUIRE(all.size() == 2);
    CHECK(all[0].witness.to_string() == "0u");
    CHECK(all[1].witness.to_string() == "u1");
    for (const auto& r : all) {
        CHECK(r.kind == HazardKind::OneHazard);
        CHECK(r.verified);
    }
}

TEST_CASE("worked example: eichelberger reports the minterm !x1, witness 0u") {
    HazardReport r = eichelberger(testutil::example1_circuit());
    REQUIRE(r.found);
    CHECK(r.kind == HazardKind::OneHazard);
    CHECK(r.witness.to_string() == "0u");
    CHECK(r.method == DetectionMethod::Eichelberger);
}

TEST_CASE("worked example: pair detector returns u1 via (x1&x2, !x1&x2) on x1") {
    HazardReport r = dnf_detect_1hazard(testutil::example1_dnf());
    REQUIRE(r.found);
    CHECK(r.kind == HazardKind::OneHazard);
    CHECK(r.witness.to_string() == "u1");
    CHECK(r.method == DetectionMethod::DnfPair);
    CHECK(r.verified);
}

TEST_CASE("verify_hazard implements the definition") {
    Circuit c = testutil::example1_circuit();
    CHECK(verify_hazard(c, pa("0u"), HazardKind::OneHazard));
    CHECK_FALSE(verify_hazard(c, pa("0u"), HazardKind::ZeroHazard));
    CHECK_FALSE(verify_hazard(c, pa("00"), HazardKind::OneHazard));  // stable output
    CHECK_FALSE(verify_hazard(c, pa("uu"), HazardKind::OneHazard));  // resolutions disagree
    DnfFormula f = testutil::example1_dnf();
    CHECK(verify_hazard(f, pa("u1"), HazardKind::OneHazard));
}

TEST_CASE("multiplexer fixture: hazard at select=u, both data inputs 1") {
    Circuit mux = testutil::mux_circuit();
    auto all = list_all_hazards(mux);
    REQUIRE(all.size() == 1);
    CHECK(all[0].witness.to_string() == "u11");
    CHECK(all[0].kind == HazardKind::OneHazard);
}

TEST_CASE("pair detector finds nothing on hazard-free Huffman DNFs") {
    Rng rng(31);
    for (int it = 0; it < 50; ++it) {
        int n = 1 + static_cast<int>(rng() % 6);
        TruthOracle f = TruthOracle::from_truth_table(n, random_truth_table(rng, n));
        CHECK_FALSE(dnf_detect_1hazard(huffman_dnf(f)).found);
    }
}

TEST_CASE("pair detector equals brute force on random DNFs") {
    Rng rng(32);
    for (int it = 0; it < 150; ++it) {
        int n = 2 + static_cast<int>(rng() % 6);
        DnfFormula f = random_dnf(rng, n, 1 + static_cast<int>(rng() % 8), 3);
        HazardReport fast = dnf_detect_1hazard(f);
        HazardReport slow = brute_force_hazard(f);  // contradiction-free: any hazard is a 1-hazard
        CHECK(fast.found == slow.found);
        if (fast.found) CHECK(verify_hazard(f, fast.witness, HazardKind::OneHazard));
    }
}

TEST_CASE("pair-detector witnesses have the easy-hazard restriction shape") {
    // restricting F by the witness's stable part leaves x and !x as terms
    // for the paired variable and no constant-1 term
    Rng rng(33);
    int found = 0;
    for (int it = 0; it < 300 && found < 40; ++it) {
        int n = 2 + static_cast<int>(rng() % 5);
        DnfFormula f = random_dnf(rng, n, 2 + static_cast<int>(rng() % 8), 3);
        HazardReport r = dnf_detect_1hazard(f);
        if (!r.found) continue;
        ++found;
        DnfFormula g = restrict_simplify(f, r.witness);
        bool has_pair = false;
        for (std::size_t v = 0; v < r.witness.size(); ++v) {
            if (r.witness[v] != TernaryValue::U) continue;
            Term pos({{static_cast<int>(v), false}}, Term::Kind::Conjunction);
            Term neg({{static_cast<int>(v), true}}, Term::Kind::Conjunction);
            bool p = false, q = false;
            for (const auto& t : g.terms) {
                if (t == pos) p = true;
                if (t == neg) q = true;
            }
            has_pair = has_pair || (p && q);
        }
        CHECK(has_pair);
        for (const auto& t : g.terms) CHECK_FALSE(t.empty());
    }
    CHECK(found >= 40);
}

TEST_CASE("contradictory term gives a 0-hazard; elimination removes it") {
    DnfFormula f = parse_dnf("(x1&!x1)");
    HazardReport r = dnf_detect_0hazard_brute(f);
    REQUIRE(r.found);
    CHECK(r.kind == HazardKind::ZeroHazard);
    CHECK(r.witness.to_string() == "u");

    DnfFormula g = parse_dnf("(x1&!x1)|(x2)");
    DnfFormula h = dnf_eliminate_0hazards(g);
    CHECK(to_string(h) == "(x2)");
    CHECK_FALSE(dnf_detect_0hazard_brute(h).found);
    for (std::uint64_t b = 0; b < 4; ++b) CHECK(g.eval_stable(b) == h.eval_stable(b));
}

TEST_CASE("cnf 0-hazard detection equals brute force on random CNFs") {
    Rng rng(34);
    for (int it = 0; it < 100; ++it) {
        int n = 2 + static_cast<int>(rng() % 6);
        CnfFormula f = random_cnf(rng, n, 1 + static_cast<int>(rng() % 8), 3);
        HazardReport fast = cnf_detect_0hazard(f);
        HazardReport slow = brute_force_hazard(circuit_from_cnf(f));
        CHECK(fast.found == slow.found);
        if (fast.found) {
            CHECK(fast.kind == HazardKind::ZeroHazard);
            CHECK(fast.method == DetectionMethod::CnfDual);
            CHECK(verify_hazard(f, fast.witness, HazardKind::ZeroHazard));
        }
    }
    CnfFormula taut = parse_cnf("(x1|!x1)&(x2)");
    CnfFormula clean = cnf_eliminate_1hazards(taut);
    CHECK(to_string(clean) == "(x2)");
}

TEST_CASE("eichelberger equals brute force on random circuits") {
    Rng rng(35);
    for (int it = 0; it < 80; ++it) {
        int n = 1 + static_cast<int>(rng() % 6);
        Circuit c = random_circuit(rng, n, 1 + static_cast<int>(rng() % 10));
        HazardReport e = eichelberger(c);
        HazardReport b = brute_force_hazard(c);
        CHECK(e.found == b.found);
        if (e.found) CHECK(verify_hazard(c, e.witness, e.kind));
    }
}

TEST_CASE("parallel scans agree with the serial reference") {
    Rng rng(36);
    for (int it = 0; it < 40; ++it) {
        int n = 1 + static_cast<int>(rng() % 6);
        Circuit c = random_circuit(rng, n, 1 + static_cast<int>(rng() % 10));
        HazardReport p = brute_force_hazard(c);
        HazardReport s = serial::brute_force_hazard(c);
        CHECK(p.found == s.found);
        if (p.found) {
            CHECK(p.witness == s.witness);
            CHECK(p.kind == s.kind);
        }
        auto ap = list_all_hazards(c);
        auto as = serial::list_all_hazards(c);
        REQUIRE(ap.size() == as.size());
        for (std::size_t i = 0; i < ap.size(); ++i) CHECK(ap[i].witness == as[i].witness);
    }
}

TEST_CASE("brute-force bound raises BoundExceeded") {
    Circuit c = parse_formula("x1&x2&x3");
    CHECK_THROWS_AS((void)brute_force_hazard(c, 2), BoundExceeded);
}
