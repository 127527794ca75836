#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hazardkit/circuit.hpp"
#include "hazardkit/detectors.hpp"
#include "hazardkit/synthesis.hpp"

namespace hazardkit {

/// Smallest multiple of 3 with 2^r <= binom(s, s/3) * binom(2s/3, s/3),
/// computed with exact big-integer arithmetic.
int s_of_r(int r);

/// Shape of one falsifiability-to-hazard reduction: a DNF on r*n variables
/// (padded with unused variables when r does not divide the count) maps to a
/// depth-4 formula on s*n variables.
struct ReductionParams {
    int r = 1;
    int n = 1;
    int s = 3;

    static ReductionParams make(int num_vars, int r);
    int source_vars() const { return r * n; }
    int target_vars() const { return s * n; }
};

/// Fixed pairing between group assignments and CM minterms: the i-th
/// assignment (bit k of i = local variable k) maps to the i-th entry of the
/// candidate-scan-ordered CM minterm list. Identical for every group up to
/// variable relabeling.
struct BetaBijection {
    int r = 1;
    int s = 3;
    std::vector<PartialAssignment> table;  // 2^r entries over s local variables

    static BetaBijection make(int r, int s);
    const PartialAssignment& map(std::uint32_t alpha) const { return table[alpha]; }
    std::uint64_t digest() const;
};

/// The per-literal gadget: an ACM formula with hazards exactly at the
/// minterm images of the assignments falsifying `lit`.
Circuit literal_gadget(const ReductionParams& params, const BetaBijection& beta, Literal lit);

/// Depth-5 form: every literal occurrence replaced by its gadget, before the
/// adjacent-AND collapse.
Circuit reduce_dnffalse_to_hazard_intermediate(const DnfFormula& f, int r);

/// The full reduction: gadget substitution followed by collapse; an
/// or-and-or-and formula of depth 4. F is falsifiable iff the result has a
/// hazard. A zero-term input (trivially falsifiable) maps to a single
/// all-hazard ACM gadget under an OR root.
Circuit reduce_dnffalse_to_hazard(const DnfFormula& f, int r);

/// The ACM minterm predicted to witness the hazard for falsifying input `y`
/// (bit k of y = variable k, padded variables included).
PartialAssignment map_assignment_to_minterm(const ReductionParams& params, const BetaBijection& beta,
                                            std::uint64_t y);

/// Appends x_{n+1} & !x_{n+1} on a fresh variable; the result has a 0-hazard
/// iff the input is falsifiable. Contradictory input terms are removed first.
DnfFormula zero_hazard_gadget(const DnfFormula& f);

struct ReductionVerification {
    bool pass = false;
    bool falsifiable = false;
    bool hazard_found = false;
    bool intermediate_hazard_found = false;
    int output_depth = 0;
    std::uint64_t falsifying_count = 0;
    std::vector<std::string> failures;
};

/// Desk-scale check of the reduction: exhaustive falsifiability against
/// brute-force hazard detection on both the depth-5 intermediate and the
/// collapsed output, plus per-falsifying-assignment witness confirmation.
ReductionVerification verify_reduction(const DnfFormula& f, int r,
                                       int bound = kDefaultBruteForceBound);

}  // namespace hazardkit
