#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hazardkit/errors.hpp"
#include "hazardkit/implicants.hpp"
#include "hazardkit/synthesis.hpp"
#include "helpers.hpp"

using namespace hazardkit;
using testutil::pa;

TEST_CASE("worked example: minterms {!x1, x2}, maxterm {!x1|x2}") {
    TruthOracle f = TruthOracle::from_dnf(testutil::example1_dnf());
    ImplicantSet mins = enumerate_minterms(f);
    REQUIRE(mins.items.size() == 2);
    CHECK(mins.items[0].to_string() == "0u");
    CHECK(mins.items[1].to_string() == "u1");
    auto terms = mins.terms();
    CHECK(to_string(terms[0]) == "!x1");
    CHECK(to_string(terms[1]) == "x2");

    ImplicantSet maxs = enumerate_maxterms(f);
    REQUIRE(maxs.items.size() == 1);
    CHECK(maxs.items[0].to_string() == "10");
    CHECK(to_string(maxs.terms()[0]) == "!x1|x2");

    CHECK(check_cross_intersection(mins, maxs));
}

TEST_CASE("is_implicant basics") {
    TruthOracle f = TruthOracle::from_dnf(testutil::example1_dnf());
    CHECK(is_implicant(pa("0u"), f, ImplicantKind::OneImplicant));
    CHECK(is_implicant(pa("01"), f, ImplicantKind::OneImplicant));  // non-minimal but valid
    CHECK_FALSE(is_implicant(pa("uu"), f, ImplicantKind::OneImplicant));
    CHECK(is_implicant(pa("10"), f, ImplicantKind::ZeroImplicant));
    CHECK_FALSE(is_implicant(pa("1u"), f, ImplicantKind::ZeroImplicant));
    CHECK_THROWS_AS((void)is_implicant(Term({{0, false}, {0, true}}, Term::Kind::Conjunction), f,
                                       ImplicantKind::OneImplicant),
                    std::invalid_argument);
}

TEST_CASE("enumeration equals direct definition-level filter on random truth tables") {
    Rng rng(21);
    for (int it = 0; it < 40; ++it) {
        int n = 1 + static_cast<int>(rng() % 5);
        TruthOracle f = TruthOracle::from_truth_table(n, random_truth_table(rng, n));
        ImplicantSet mins = enumerate_minterms(f);

        // direct filter: implicant and no position can be freed
        std::vector<PartialAssignment> expect;
        PartialAssignment a;
        for (std::uint64_t i = 0; i < pow3(static_cast<std::size_t>(n)); ++i) {
            unpack_assignment(i, static_cast<std::size_t>(n), a);
            if (!is_implicant(a, f, ImplicantKind::OneImplicant)) continue;
            bool minimal = true;
            for (std::size_t p = 0; p < a.size() && minimal; ++p) {
                if (a[p] == TernaryValue::U) continue;
                PartialAssignment freed = a;
                freed[p] = TernaryValue::U;
                if (is_implicant(freed, f, ImplicantKind::OneImplicant)) minimal = false;
            }
            if (minimal) expect.push_back(a);
        }
        CHECK(mins.items == expect);
    }
}

TEST_CASE("minimality: freeing any stable position of a minterm breaks implicancy") {
    Rng rng(22);
    for (int it = 0; it < 30; ++it) {
        int n = 2 + static_cast<int>(rng() % 4);
        TruthOracle f = TruthOracle::from_truth_table(n, random_truth_table(rng, n));
        for (const auto& m : enumerate_minterms(f).items) {
            for (std::size_t p = 0; p < m.size(); ++p) {
                if (m[p] == TernaryValue::U) continue;
                PartialAssignment freed = m;
                freed[p] = TernaryValue::U;
                CHECK_FALSE(is_implicant(freed, f, ImplicantKind::OneImplicant));
            }
        }
    }
}

TEST_CASE("cross-intersection holds on random functions") {
    Rng rng(23);
    for (int it = 0; it < 50; ++it) {
        int n = 1 + static_cast<int>(rng() % 6);
        TruthOracle f = TruthOracle::from_truth_table(n, random_truth_table(rng, n));
        CHECK(check_cross_intersection(enumerate_minterms(f), enumerate_maxterms(f)));
    }
}

TEST_CASE("cm_minterm_count: 6, 90, 1680") {
    CHECK(cm_minterm_count(1) == 6);
    CHECK(cm_minterm_count(2) == 90);
    CHECK(cm_minterm_count(3) == 1680);
    // stays exact far beyond 64-bit
    CHECK(cm_minterm_count(30) > boost::multiprecision::cpp_int(1) << 80);
}

TEST_CASE("CM(3) minterms enumerate to 6 and match the combinatorial construction") {
    TruthOracle f = cm_oracle(CmSpec{3});
    ImplicantSet mins = enumerate_minterms(f);
    CHECK(mins.items.size() == 6);
    CHECK(mins.items == cm_minterms_direct(CmSpec{3}).items);
}

TEST_CASE("parallel and serial enumeration agree exactly") {
    Rng rng(24);
    for (int it = 0; it < 20; ++it) {
        int n = 1 + static_cast<int>(rng() % 7);
        TruthOracle f = TruthOracle::from_truth_table(n, random_truth_table(rng, n));
        CHECK(enumerate_minterms(f).items == serial::enumerate_minterms(f).items);
        CHECK(enumerate_maxterms(f).items == serial::enumerate_maxterms(f).items);
    }
}

TEST_CASE("enumeration bound raises BoundExceeded") {
    TruthOracle f = cm_oracle(CmSpec{6});
    CHECK_THROWS_AS((void)enumerate_minterms(f, 5), BoundExceeded);
}
