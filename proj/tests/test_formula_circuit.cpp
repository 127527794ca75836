#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hazardkit/detectors.hpp"
#include "helpers.hpp"

using namespace hazardkit;
using testutil::pa;

TEST_CASE("term literals are sorted and deduplicated") {
    Term t({{2, false}, {0, true}, {2, false}}, Term::Kind::Conjunction);
    REQUIRE(t.size() == 2);
    CHECK(t.literals[0] == Literal{0, true});
    CHECK(t.literals[1] == Literal{2, false});
    CHECK_FALSE(t.contradictory());
    Term bad({{1, false}, {1, true}}, Term::Kind::Conjunction);
    CHECK(bad.contradictory());
}

TEST_CASE("term evaluation and covering assignment") {
    Term t({{0, true}, {1, false}}, Term::Kind::Conjunction);  // !x1 & x2
    CHECK(t.eval(pa("01")) == TernaryValue::One);
    CHECK(t.eval(pa("11")) == TernaryValue::Zero);
    CHECK(t.eval(pa("u1")) == TernaryValue::U);
    CHECK(t.to_assignment(3).to_string() == "01u");
    CHECK(Term::from_assignment(pa("01u"), Term::Kind::Conjunction) == t);

    Term d({{0, true}, {1, false}}, Term::Kind::Disjunction);  // !x1 | x2
    CHECK(d.eval(pa("10")) == TernaryValue::Zero);
    CHECK(d.to_assignment(2).to_string() == "10");  // pins the clause false
    CHECK(Term::from_assignment(pa("10"), Term::Kind::Disjunction) == d);
}

TEST_CASE("empty term constants") {
    Term conj({}, Term::Kind::Conjunction);
    Term disj({}, Term::Kind::Disjunction);
    CHECK(conj.eval(pa("uu")) == TernaryValue::One);
    CHECK(disj.eval(pa("uu")) == TernaryValue::Zero);
}

TEST_CASE("merge_consistent") {
    Term a({{0, false}}, Term::Kind::Conjunction);
    Term b({{1, true}}, Term::Kind::Conjunction);
    auto m = merge_consistent(a, b);
    REQUIRE(m.has_value());
    CHECK(m->size() == 2);
    Term c({{0, true}}, Term::Kind::Conjunction);
    CHECK_FALSE(merge_consistent(a, c).has_value());
}

TEST_CASE("worked-example DNF evaluates to u at 0u") {
    DnfFormula f = testutil::example1_dnf();
    REQUIRE(f.num_vars == 2);
    REQUIRE(f.terms.size() == 3);
    CHECK(f.eval(pa("0u")) == TernaryValue::U);
    CHECK(f.eval(pa("00")) == TernaryValue::One);
    CHECK(f.eval(pa("01")) == TernaryValue::One);
    CHECK(f.eval(pa("10")) == TernaryValue::Zero);
    CHECK(f.eval(pa("11")) == TernaryValue::One);
}

TEST_CASE("restrict_simplify by x1=0 shortens the worked example to (x2)|(!x2)") {
    DnfFormula f = testutil::example1_dnf();
    DnfFormula g = restrict_simplify(f, pa("0u"));
    CHECK(to_string(g) == "(x2)|(!x2)");
    CHECK(g.num_vars == 2);
}

TEST_CASE("restrict_simplify: fully satisfied term becomes the constant-1 empty term") {
    DnfFormula f = parse_dnf("(x1&x2)|(x3)");
    DnfFormula g = restrict_simplify(f, pa("11u"));
    REQUIRE(g.terms.size() == 2);
    CHECK(g.terms[0].empty());
    CHECK(g.eval(pa("uuu")) == TernaryValue::One);
}

TEST_CASE("negate_cnf computes the complement on all ternary inputs") {
    Rng rng(11);
    for (int it = 0; it < 100; ++it) {
        int n = 2 + static_cast<int>(rng() % 4);
        CnfFormula f = random_cnf(rng, n, 1 + static_cast<int>(rng() % 5), 3);
        DnfFormula g = negate_cnf(f);
        PartialAssignment x;
        for (std::uint64_t i = 0; i < pow3(static_cast<std::size_t>(n)); ++i) {
            unpack_assignment(i, static_cast<std::size_t>(n), x);
            CHECK(g.eval(x) == ternary_not(f.eval(x)));
        }
    }
}

TEST_CASE("formula parsing: worked example structure") {
    Circuit c = testutil::example1_circuit();
    CHECK(c.num_vars == 2);
    CHECK(c.is_formula);
    CHECK(eval_ternary(c, pa("0u")) == TernaryValue::U);
    CHECK(depth(c) == 2);
}

TEST_CASE("single literal circuit has depth 0") {
    Circuit c = parse_formula("x1");
    CHECK(depth(c) == 0);
    CHECK(c.num_vars == 1);
    CHECK(eval_ternary(c, pa("1")) == TernaryValue::One);
}

TEST_CASE("eval_stable agrees with eval_ternary on stable inputs") {
    Rng rng(12);
    for (int it = 0; it < 50; ++it) {
        int n = 1 + static_cast<int>(rng() % 6);
        Circuit c = random_circuit(rng, n, 1 + static_cast<int>(rng() % 8));
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            bool v = eval_stable(c, b);
            TernaryValue t = eval_ternary(c, assignment_from_bits(b, static_cast<std::size_t>(n)));
            CHECK(t == (v ? TernaryValue::One : TernaryValue::Zero));
        }
    }
}

TEST_CASE("information monotonicity: resolving u positions never flips a stable output") {
    Rng rng(13);
    for (int it = 0; it < 200; ++it) {
        int n = 1 + static_cast<int>(rng() % 6);
        Circuit c = random_circuit(rng, n, 1 + static_cast<int>(rng() % 10));
        PartialAssignment a = unpack_assignment(rng() % pow3(static_cast<std::size_t>(n)),
                                                static_cast<std::size_t>(n));
        PartialAssignment b = a;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i] == TernaryValue::U && rng() % 2)
                b[i] = rng() % 2 ? TernaryValue::One : TernaryValue::Zero;
        TernaryValue va = eval_ternary(c, a);
        if (va != TernaryValue::U) CHECK(eval_ternary(c, b) == va);
    }
}

TEST_CASE("monotone circuits are hazard-free") {
    Rng rng(14);
    for (int it = 0; it < 60; ++it) {
        int n = 1 + static_cast<int>(rng() % 6);
        Circuit c = random_monotone_circuit(rng, n, 1 + static_cast<int>(rng() % 10));
        CHECK_FALSE(brute_force_hazard(c).found);
    }
}

TEST_CASE("collapse_adjacent_gates flattens nested same-kind gates, preserving the function") {
    Circuit c = parse_formula("((x1&x2)&(x3&x4))|((x1|x5)|x2)");
    Circuit k = collapse_adjacent_gates(c);
    CHECK(depth(k) < depth(c));
    CHECK(depth(k) == 2);
    CHECK(testutil::same_ternary_function(c, k));

    Rng rng(15);
    for (int it = 0; it < 50; ++it) {
        Circuit f = testutil::random_formula(rng, 4, 4);
        Circuit g = collapse_adjacent_gates(f);
        CHECK(depth(g) <= depth(f));
        CHECK(testutil::same_ternary_function(f, g));
    }
}

TEST_CASE("circuit_from_dnf / dnf_from_circuit round trip") {
    Rng rng(16);
    for (int it = 0; it < 100; ++it) {
        int n = 2 + static_cast<int>(rng() % 5);
        DnfFormula f = random_dnf(rng, n, 1 + static_cast<int>(rng() % 5), 3);
        Circuit c = circuit_from_dnf(f);
        CHECK(c.is_formula);
        CHECK(depth(c) <= 2);
        DnfFormula g = dnf_from_circuit(c);
        CHECK(f.terms == g.terms);
    }
    CHECK_THROWS_AS((void)dnf_from_circuit(parse_formula("(x1|x2)&x3")), std::invalid_argument);
    CHECK_THROWS_AS((void)cnf_from_circuit(parse_formula("(x1&x2)|x3")), std::invalid_argument);
}

TEST_CASE("validate rejects malformed circuits") {
    Circuit c;
    c.num_vars = 1;
    c.gates.push_back({Gate::Kind::And, {}, {0}});  // self-reference
    c.output = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);

    Circuit d;
    d.num_vars = 1;
    d.gates.push_back({Gate::Kind::Input, {0, false}, {}});
    d.gates.push_back({Gate::Kind::Not, {}, {0, 0}});  // NOT fan-in 2
    d.output = 1;
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);
}
