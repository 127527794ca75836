#pragma once

#include <cstdint>
#include <vector>

#include "hazardkit/formula.hpp"
#include "hazardkit/ternary.hpp"

namespace hazardkit {

struct Gate {
    enum class Kind { Input, And, Or, Not };

    Kind kind = Kind::Input;
    Literal lit;                 // Input gates only
    std::vector<int> children;   // earlier gate indices; And/Or >= 1 child, Not exactly 1

    bool operator==(const Gate&) const = default;
};

/// A single-output DAG of AND/OR/NOT gates over literal inputs, stored in
/// topological order. `is_formula` marks tree-shaped circuits.
struct Circuit {
    int num_vars = 0;
    std::vector<Gate> gates;
    int output = 0;
    bool is_formula = false;

    std::size_t size() const { return gates.size(); }

    /// Throws std::invalid_argument when the structural invariants are broken.
    void validate() const;

    bool operator==(const Circuit&) const = default;
};

/// Inductive Kleene evaluation, extended to arbitrary fan-in by associativity.
TernaryValue eval_ternary(const Circuit& c, const PartialAssignment& a);
TernaryValue eval_ternary(const Circuit& c, const PartialAssignment& a,
                          std::vector<TernaryValue>& scratch);

/// Two-valued evaluation on a fully stable input given as a bit mask.
bool eval_stable(const Circuit& c, std::uint64_t bits);
bool eval_stable(const Circuit& c, std::uint64_t bits, std::vector<unsigned char>& scratch);

/// Maximum number of AND/OR gates on any input-to-output path; NOT excluded.
int depth(const Circuit& c);

/// Merges AND gates feeding AND parents (and OR into OR) to fixpoint.
/// Requires a formula; the computed ternary function is unchanged.
Circuit collapse_adjacent_gates(const Circuit& c);

Circuit circuit_from_dnf(const DnfFormula& f);
Circuit circuit_from_cnf(const CnfFormula& f);

/// Extracts the DNF shape of an OR-of-ANDs-of-literals circuit (a single
/// term or literal also qualifies); throws std::invalid_argument otherwise.
DnfFormula dnf_from_circuit(const Circuit& c);
CnfFormula cnf_from_circuit(const Circuit& c);

}  // namespace hazardkit
