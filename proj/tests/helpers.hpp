#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hazardkit/circuit.hpp"
#include "hazardkit/detectors.hpp"
#include "hazardkit/formula.hpp"
#include "hazardkit/generate.hpp"
#include "hazardkit/ternary.hpp"
#include "hazardkit/text_io.hpp"

namespace testutil {

using namespace hazardkit;

inline PartialAssignment pa(const std::string& s) { return parse_partial_assignment(s); }

/// Example 1's F = (x1&x2) | (!x1&x2) | (!x1&!x2), the running fixture.
inline DnfFormula example1_dnf() { return parse_dnf("(x1&x2)|(!x1&x2)|(!x1&!x2)"); }
inline Circuit example1_circuit() { return parse_formula("(x1&x2)|(!x1&x2)|(!x1&!x2)"); }

/// Multiplexer (x1&x2)|(!x1&x3): hazard at select=u when both data inputs agree.
inline Circuit mux_circuit() { return parse_formula("(x1&x2)|(!x1&x3)"); }

/// Random formula tree for round-trip tests: literals at the leaves,
/// NOT over subexpressions allowed.
inline Circuit random_formula(Rng& rng, int num_vars, int budget) {
    Circuit c;
    c.num_vars = num_vars;
    c.is_formula = true;

    auto leaf = [&]() -> int {
        Gate g;
        g.kind = Gate::Kind::Input;
        g.lit.var = static_cast<int>(rng() % num_vars);
        g.lit.negated = rng() % 2 == 0;
        c.gates.push_back(g);
        return static_cast<int>(c.gates.size()) - 1;
    };

    std::function<int(int)> build = [&](int depth) -> int {
        if (depth <= 0 || rng() % 4 == 0) return leaf();
        switch (rng() % 3) {
            case 0: {
                Gate g;
                g.kind = Gate::Kind::Not;
                int ch = build(depth - 1);
                // the formula grammar folds ! over a bare variable into the literal
                if (c.gates[ch].kind == Gate::Kind::Input) {
                    c.gates[ch].lit.negated = !c.gates[ch].lit.negated;
                    return ch;
                }
                g.children = {ch};
                c.gates.push_back(std::move(g));
                return static_cast<int>(c.gates.size()) - 1;
            }
            default: {
                Gate g;
                g.kind = rng() % 2 ? Gate::Kind::And : Gate::Kind::Or;
                int fanin = 2 + static_cast<int>(rng() % 2);
                for (int i = 0; i < fanin; ++i) g.children.push_back(build(depth - 1));
                c.gates.push_back(std::move(g));
                return static_cast<int>(c.gates.size()) - 1;
            }
        }
    };

    c.output = build(budget);
    c.validate();
    return c;
}

/// Equality of the computed ternary function, by full 3^n scan.
inline bool same_ternary_function(const Circuit& a, const Circuit& b) {
    if (a.num_vars != b.num_vars) return false;
    const std::uint64_t total = pow3(static_cast<std::size_t>(a.num_vars));
    PartialAssignment x;
    for (std::uint64_t i = 0; i < total; ++i) {
        unpack_assignment(i, static_cast<std::size_t>(a.num_vars), x);
        if (eval_ternary(a, x) != eval_ternary(b, x)) return false;
    }
    return true;
}

/// "Hazards exactly at the minterms in S": every member of S is itself a
/// 1-hazard witness, no 0-hazard exists, and every further witness is a
/// refinement of some member of S (splitting I on x leaves the variables
/// outside I and x free, so partially resolved copies of I are hazards too).
inline bool hazards_exactly_at(const std::vector<HazardReport>& witnesses,
                               const std::vector<PartialAssignment>& S) {
    for (const auto& r : witnesses)
        if (r.kind != HazardKind::OneHazard) return false;
    for (const auto& want : S) {
        bool present = false;
        for (const auto& r : witnesses) present = present || r.witness == want;
        if (!present) return false;
    }
    for (const auto& r : witnesses) {
        bool covered = false;
        for (const auto& want : S) covered = covered || r.witness.refines(want);
        if (!covered) return false;
    }
    return true;
}

}  // namespace testutil
