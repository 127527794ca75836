#pragma once

#include <random>
#include <vector>

#include "hazardkit/circuit.hpp"
#include "hazardkit/formula.hpp"

namespace hazardkit {

using Rng = std::mt19937_64;

/// Random DNF with `num_terms` terms of width 1..max_width over distinct
/// variables (contradiction-free unless requested).
DnfFormula random_dnf(Rng& rng, int num_vars, int num_terms, int max_width,
                      bool allow_contradictory = false);

CnfFormula random_cnf(Rng& rng, int num_vars, int num_clauses, int max_width,
                      bool allow_tautological = false);

/// Random DAG circuit: literal inputs followed by `num_gates` AND/OR/NOT
/// gates with random earlier children; the last gate is the output.
Circuit random_circuit(Rng& rng, int num_vars, int num_gates, int max_fanin = 3);

/// No NOT gates and no negated literals.
Circuit random_monotone_circuit(Rng& rng, int num_vars, int num_gates, int max_fanin = 3);

std::vector<bool> random_truth_table(Rng& rng, int num_vars);

}  // namespace hazardkit
