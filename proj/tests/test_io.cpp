#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "hazardkit/errors.hpp"
#include "hazardkit/json_io.hpp"
#include "helpers.hpp"

using namespace hazardkit;
using nlohmann::json;
using testutil::pa;

TEST_CASE("formula parsing goldens") {
    Circuit c = parse_formula("(x1&x2)|(!x1&x2)|(!x1&!x2)");
    CHECK(c.num_vars == 2);
    DnfFormula f = dnf_from_circuit(c);
    CHECK(f.terms.size() == 3);

    CHECK(parse_formula("x1").num_vars == 1);
    CHECK(parse_formula(" x1 \n & x2 ").num_vars == 2);
    CHECK(parse_formula("x1", 5).num_vars == 5);  // min_vars widens

    // ! on a bare variable folds into the literal; ! on a subexpression is a gate
    Circuit lit = parse_formula("!x1");
    CHECK(lit.gates.size() == 1);
    CHECK(lit.gates[0].lit.negated);
    Circuit gate = parse_formula("!(x1&x2)");
    CHECK(gate.gates[static_cast<std::size_t>(gate.output)].kind == Gate::Kind::Not);
}

TEST_CASE("formula parse errors carry line and column") {
    CHECK_THROWS_AS((void)parse_formula("x1 & & x2"), ParseError);
    CHECK_THROWS_AS((void)parse_formula("x0"), ParseError);
    CHECK_THROWS_AS((void)parse_formula("(x1"), ParseError);
    CHECK_THROWS_AS((void)parse_formula("x1 y"), ParseError);
    CHECK_THROWS_AS((void)parse_formula(""), ParseError);
    try {
        (void)parse_formula("x1 &\n& x2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 1);
    }
}

TEST_CASE("parse_partial_assignment goldens and errors") {
    CHECK(pa("0u").to_string() == "0u");
    CHECK(pa("u1u0").to_string() == "u1u0");
    CHECK_THROWS_AS((void)parse_partial_assignment("2u"), ParseError);
    CHECK_THROWS_AS((void)parse_partial_assignment("01x"), ParseError);
}

TEST_CASE("parse of serialize is the identity on gate trees (random corpus)") {
    Rng rng(61);
    for (int it = 0; it < 1000; ++it) {
        int n = 1 + static_cast<int>(rng() % 5);
        Circuit c = testutil::random_formula(rng, n, 3);
        std::string text = serialize_formula(c);
        Circuit back = parse_formula(text, n);
        CHECK(serialize_formula(back) == text);
        CHECK(testutil::same_ternary_function(c, back));
        // idempotence: the parser's tree reserializes to itself
        Circuit again = parse_formula(serialize_formula(back), n);
        CHECK(again == back);
    }
}

TEST_CASE("circuit document round trip (random corpus)") {
    Rng rng(62);
    for (int it = 0; it < 1000; ++it) {
        int n = 1 + static_cast<int>(rng() % 6);
        Circuit c = random_circuit(rng, n, 1 + static_cast<int>(rng() % 12));
        Circuit back = circuit_from_json(circuit_to_json(c));
        CHECK(back == c);
    }
}

TEST_CASE("circuit document fields and validation") {
    Circuit c = parse_formula("!x1|x2");
    json doc = circuit_to_json(c, json{{"generator", "unit-test"}});
    CHECK(doc["num_vars"] == 2);
    CHECK(doc["gates"].size() == c.gates.size());
    CHECK(doc["gates"][0]["kind"] == "lit");
    CHECK(doc["gates"][0]["neg"] == true);
    CHECK(doc["is_formula"] == true);
    CHECK(doc["meta"]["generator"] == "unit-test");

    json broken = doc;
    broken["gates"][1]["id"] = 7;  // ids must be positional
    CHECK_THROWS_AS((void)circuit_from_json(broken), std::invalid_argument);
}

TEST_CASE("analysis report JSON fields") {
    HazardReport r;
    r.found = true;
    r.kind = HazardKind::OneHazard;
    r.witness = pa("0u");
    r.method = DetectionMethod::Brute;
    r.verified = true;
    json doc = report_to_json(r, 1.5, json{{"note", "x"}});
    CHECK(doc["result"] == "hazard");
    CHECK(doc["kind"] == "1-hazard");
    CHECK(doc["witness"] == "0u");
    CHECK(doc["method"] == "brute");
    CHECK(doc["elapsed_ms"] == 1.5);
    CHECK(doc["verified"] == true);
    CHECK(doc["meta"]["note"] == "x");

    HazardReport none;
    none.method = DetectionMethod::DnfPair;
    json clean = report_to_json(none, 0.1);
    CHECK(clean["result"] == "hazard-free");
    CHECK(clean["kind"].is_null());
    CHECK(clean["witness"].is_null());
    CHECK(clean["method"] == "dnf-pair");
}

TEST_CASE("truth table rows are big-endian in x1..xn") {
    // rows 00,01,10,11 -> 1,1,0,1 is the worked-example function
    TruthOracle f = TruthOracle::from_truth_table(2, {true, true, false, true});
    CHECK(f(0b00));
    CHECK(f(0b10));  // x1=0, x2=1 -> row 01
    CHECK_FALSE(f(0b01));  // x1=1, x2=0 -> row 10
    CHECK(f(0b11));
}
