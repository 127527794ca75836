#pragma once

#include <vector>

#include "hazardkit/circuit.hpp"
#include "hazardkit/formula.hpp"
#include "hazardkit/oracle.hpp"

namespace hazardkit {

enum class HazardKind { OneHazard, ZeroHazard };
enum class DetectionMethod { Brute, Eichelberger, DnfPair, CnfDual };

struct HazardReport {
    bool found = false;
    HazardKind kind = HazardKind::OneHazard;
    PartialAssignment witness;
    DetectionMethod method = DetectionMethod::Brute;
    /// Definition-2 recheck ran on the witness. Only skipped when the witness
    /// has more than kMaxVerifyUCount unstable positions.
    bool verified = false;
};

inline constexpr std::size_t kMaxVerifyUCount = 20;

/// Witness recheck: output u and every resolution equal to the stable value
/// selected by `kind`.
bool verify_hazard(const Circuit& c, const PartialAssignment& witness, HazardKind kind);
bool verify_hazard(const DnfFormula& f, const PartialAssignment& witness, HazardKind kind);
bool verify_hazard(const CnfFormula& f, const PartialAssignment& witness, HazardKind kind);

/// Ground-truth oracle: scans all 3^n inputs in candidate-scan order and
/// returns the first hazard witness.
HazardReport brute_force_hazard(const Circuit& c, int bound = kDefaultBruteForceBound);
HazardReport brute_force_hazard(const DnfFormula& f, int bound = kDefaultBruteForceBound);

/// Every hazard witness, in candidate-scan order.
std::vector<HazardReport> list_all_hazards(const Circuit& c, int bound = kDefaultBruteForceBound);
std::vector<HazardReport> list_all_hazards(const DnfFormula& f, int bound = kDefaultBruteForceBound);

/// Minterm/maxterm-evaluation detection: a 1-hazard at the first minterm the
/// circuit maps to u, else a 0-hazard at the first such maxterm.
HazardReport eichelberger(const Circuit& c, int bound = kDefaultEnumerationBound);

/// Polynomial-time 1-hazard detection: for each pair of terms S&x and T&!x
/// with S|T consistent, the candidate witness sets S|T true, x to u and the
/// rest to u; it is accepted when no term of f evaluates to 1 under it.
/// Pairs are tried in (variable, term index, term index) order.
HazardReport dnf_detect_1hazard(const DnfFormula& f);

/// Dual via De Morgan: 0-hazards of a CNF are 1-hazards of its negation.
HazardReport cnf_detect_0hazard(const CnfFormula& f);

/// Drops contradictory terms; the computed function is unchanged and the
/// result has no 0-hazards.
DnfFormula dnf_eliminate_0hazards(const DnfFormula& f);
/// Dual: drops tautological clauses; the result has no 1-hazards.
CnfFormula cnf_eliminate_1hazards(const CnfFormula& f);

/// Brute-force scan restricted to 0-hazard witnesses.
HazardReport dnf_detect_0hazard_brute(const DnfFormula& f, int bound = kDefaultBruteForceBound);

namespace serial {
HazardReport brute_force_hazard(const Circuit& c, int bound = kDefaultBruteForceBound);
HazardReport brute_force_hazard(const DnfFormula& f, int bound = kDefaultBruteForceBound);
std::vector<HazardReport> list_all_hazards(const Circuit& c, int bound = kDefaultBruteForceBound);
std::vector<HazardReport> list_all_hazards(const DnfFormula& f, int bound = kDefaultBruteForceBound);
}  // namespace serial

}  // namespace hazardkit
