#pragma once

#include <string>
#include <string_view>

#include "hazardkit/circuit.hpp"
#include "hazardkit/errors.hpp"
#include "hazardkit/formula.hpp"

namespace hazardkit {

/// Grammar: expr := term ('|' term)*; term := factor ('&' factor)*;
/// factor := '!' factor | '(' expr ')' | variable. Variables are x1, x2, ...
/// (1-indexed in the text, 0-indexed internally); whitespace is ignored.
/// '!' directly on a variable becomes a negated literal; '!' on a compound
/// subexpression stays a NOT gate. The result has at least `min_vars`
/// variables. Throws ParseError.
Circuit parse_formula(std::string_view text, int min_vars = 0);

/// Inverse of parse_formula on the gate tree: reparsing the output yields an
/// identical circuit.
std::string serialize_formula(const Circuit& c);

/// Requires the OR-of-ANDs (resp. AND-of-ORs) shape with negations at leaves.
DnfFormula parse_dnf(std::string_view text, int min_vars = 0);
CnfFormula parse_cnf(std::string_view text, int min_vars = 0);

/// A string over {0,1,u}; position i is variable x(i+1). Throws ParseError.
PartialAssignment parse_partial_assignment(std::string_view text);

}  // namespace hazardkit
