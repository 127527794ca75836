#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hazardkit/ternary.hpp"

namespace hazardkit {

struct Literal {
    int var = 0;       // 0-based variable index
    bool negated = false;

    auto operator<=>(const Literal&) const = default;
};

/// A duplicate-free set of literals read as a conjunction (DNF term) or a
/// disjunction (CNF clause). Contradictory terms (x and !x together) are
/// representable; only the DNF parser and the 0-hazard gadget produce them.
struct Term {
    enum class Kind { Conjunction, Disjunction };

    std::vector<Literal> literals;  // sorted by (var, negated)
    Kind kind = Kind::Conjunction;

    Term() = default;
    Term(std::vector<Literal> lits, Kind kind);

    std::size_t size() const { return literals.size(); }
    bool empty() const { return literals.empty(); }
    bool contradictory() const;
    bool contains(Literal l) const;
    bool mentions(int var) const;

    /// Value of the term on a ternary input. The empty conjunction is the
    /// constant 1; the empty disjunction is the constant 0.
    TernaryValue eval(const PartialAssignment& a) const;

    /// The covering assignment: literals pinned so the term evaluates to 1
    /// (conjunction) or 0 (disjunction), everything else u. Contradictory
    /// terms have no covering assignment.
    PartialAssignment to_assignment(std::size_t num_vars) const;
    static Term from_assignment(const PartialAssignment& a, Kind kind);

    bool operator==(const Term&) const = default;
};

/// Merge of two literal sets; nullopt when the union is contradictory.
std::optional<Term> merge_consistent(const Term& a, const Term& b);

struct DnfFormula {
    int num_vars = 0;
    std::vector<Term> terms;  // order is part of the value; reports cite indices

    TernaryValue eval(const PartialAssignment& a) const;
    bool eval_stable(std::uint64_t bits) const;
    bool has_contradictory_terms() const;
    std::size_t literal_count() const;
};

struct CnfFormula {
    int num_vars = 0;
    std::vector<Term> clauses;

    TernaryValue eval(const PartialAssignment& a) const;
    bool eval_stable(std::uint64_t bits) const;
    bool has_tautological_clauses() const;
};

/// F restricted by the stable values of `a`: terms with a 0-valued literal
/// are dropped, 1-valued literals are deleted, a fully deleted term becomes
/// the constant-1 empty term. Variable indexing is preserved.
DnfFormula restrict_simplify(const DnfFormula& f, const PartialAssignment& a);

/// De Morgan negation of a CNF into a DNF over the same variables.
DnfFormula negate_cnf(const CnfFormula& f);

std::string to_string(const Term& t);
std::string to_string(const DnfFormula& f);
std::string to_string(const CnfFormula& f);

}  // namespace hazardkit
