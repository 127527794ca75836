#pragma once

#include <vector>

#include "hazardkit/circuit.hpp"
#include "hazardkit/implicants.hpp"
#include "hazardkit/oracle.hpp"

namespace hazardkit {

/// The CM function on s variables (s a multiple of 3): 1 iff at least s/3
/// variables are 1 and at least s/3 are 0.
struct CmSpec {
    int s = 3;

    int threshold() const { return s / 3; }
    void validate() const;
};

/// AND of `groups` disjoint copies of CM, each on its own contiguous block
/// of cm.s variables.
struct AcmSpec {
    int groups = 1;
    CmSpec cm;

    int total_vars() const { return groups * cm.s; }
    void validate() const;
};

TruthOracle cm_oracle(const CmSpec& spec);
TruthOracle acm_oracle(const AcmSpec& spec);

/// All CM minterms built combinatorially (threshold variables at 1, a
/// disjoint threshold at 0), in candidate-scan order. Agrees element-wise
/// with generic enumeration.
ImplicantSet cm_minterms_direct(const CmSpec& spec);

/// The OR of all minterms: the canonical hazard-free DNF implementation.
DnfFormula huffman_dnf(const TruthOracle& f, int bound = kDefaultEnumerationBound);
DnfFormula huffman_dnf(const ImplicantSet& minterms);

/// Splits each selected minterm term I into I&x and I&!x (x the lowest-index
/// variable absent from I), creating a 1-hazard exactly at I. New terms that
/// duplicate an existing term are not added twice. `S` members must be
/// minterms of size at most n-1.
DnfFormula inject_hazards_into(DnfFormula huffman, const ImplicantSet& minterms,
                               std::vector<PartialAssignment> S);
DnfFormula inject_hazards(const TruthOracle& f, const std::vector<PartialAssignment>& S,
                          int bound = kDefaultEnumerationBound);

/// Depth-3 AND-of-DNFs formula computing ACM; every group uses its hazard-free
/// Huffman DNF.
Circuit acm_hazard_free_formula(const AcmSpec& spec);

/// Same shape, but group `group` uses the hazard-injected DNF for the minterm
/// set `s_local` (assignments over the group's s local variables). Hazards at
/// ACM minterms land exactly on s_local in the selected group.
Circuit acm_formula_with_hazards(const AcmSpec& spec, int group,
                                 const std::vector<PartialAssignment>& s_local);

/// Shifts all variables of a DNF by `offset` into a wider variable space.
DnfFormula relabel_dnf(const DnfFormula& f, int offset, int new_num_vars);

}  // namespace hazardkit
