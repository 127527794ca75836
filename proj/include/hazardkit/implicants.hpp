#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "hazardkit/formula.hpp"
#include "hazardkit/oracle.hpp"
#include "hazardkit/ternary.hpp"

namespace hazardkit {

enum class ImplicantKind { OneImplicant, ZeroImplicant };

/// Implicants in assignment form, sorted by candidate-scan index. For
/// 1-implicants a stable position holds the value making the literal true;
/// for 0-implicants the value making it false.
struct ImplicantSet {
    int num_vars = 0;
    ImplicantKind kind = ImplicantKind::OneImplicant;
    std::vector<PartialAssignment> items;

    std::vector<Term> terms() const;
    bool contains(const PartialAssignment& a) const;
};

/// True iff every stable assignment covered by `t` evaluates to 1 (OneImplicant)
/// or 0 (ZeroImplicant). Throws std::invalid_argument on contradictory terms.
bool is_implicant(const Term& t, const TruthOracle& f, ImplicantKind kind);
bool is_implicant(const PartialAssignment& t, const TruthOracle& f, ImplicantKind kind);

/// Containment-minimal 1-implicants, by full 3^n candidate scan.
ImplicantSet enumerate_minterms(const TruthOracle& f, int bound = kDefaultEnumerationBound);
ImplicantSet enumerate_maxterms(const TruthOracle& f, int bound = kDefaultEnumerationBound);

/// Every (minterm, maxterm) pair must conflict on some shared variable.
bool check_cross_intersection(const ImplicantSet& mins, const ImplicantSet& maxs);

/// binom(3n, n) * binom(2n, n): the minterm count of the 3n-variable CM function.
boost::multiprecision::cpp_int cm_minterm_count(int n);

namespace serial {
/// Single-threaded reference scans; the parallel versions must agree exactly.
ImplicantSet enumerate_minterms(const TruthOracle& f, int bound = kDefaultEnumerationBound);
ImplicantSet enumerate_maxterms(const TruthOracle& f, int bound = kDefaultEnumerationBound);
}  // namespace serial

}  // namespace hazardkit
