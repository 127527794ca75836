#include "hazardkit/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace hazardkit {

Term::Term(std::vector<Literal> lits, Kind kind) : literals(std::move(lits)), kind(kind) {
    std::sort(literals.begin(), literals.end());
    literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
}

bool Term::contradictory() const {
    for (std::size_t i = 1; i < literals.size(); ++i)
        if (literals[i].var == literals[i - 1].var) return true;
    return false;
}

bool Term::contains(Literal l) const {
    return std::binary_search(literals.begin(), literals.end(), l);
}

bool Term::mentions(int var) const {
    return contains({var, false}) || contains({var, true});
}

TernaryValue Term::eval(const PartialAssignment& a) const {
    if (kind == Kind::Conjunction) {
        TernaryValue acc = TernaryValue::One;
        for (auto l : literals) {
            TernaryValue v = a[static_cast<std::size_t>(l.var)];
            if (l.negated) v = ternary_not(v);
            acc = ternary_and(acc, v);
            if (acc == TernaryValue::Zero) break;
        }
        return acc;
    }
    TernaryValue acc = TernaryValue::Zero;
    for (auto l : literals) {
        TernaryValue v = a[static_cast<std::size_t>(l.var)];
        if (l.negated) v = ternary_not(v);
        acc = ternary_or(acc, v);
        if (acc == TernaryValue::One) break;
    }
    return acc;
}

PartialAssignment Term::to_assignment(std::size_t num_vars) const {
    if (contradictory()) throw std::invalid_argument("to_assignment: contradictory term");
    PartialAssignment a(num_vars);
    for (auto l : literals) {
        // Conjunctions pin literals true, disjunctions pin them false.
        bool one = (kind == Kind::Conjunction) ? !l.negated : l.negated;
        a[static_cast<std::size_t>(l.var)] = one ? TernaryValue::One : TernaryValue::Zero;
    }
    return a;
}

Term Term::from_assignment(const PartialAssignment& a, Kind kind) {
    std::vector<Literal> lits;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == TernaryValue::U) continue;
        bool is_one = a[i] == TernaryValue::One;
        bool negated = (kind == Kind::Conjunction) ? !is_one : is_one;
        lits.push_back({static_cast<int>(i), negated});
    }
    return Term(std::move(lits), kind);
}

std::optional<Term> merge_consistent(const Term& a, const Term& b) {
    std::vector<Literal> lits = a.literals;
    lits.insert(lits.end(), b.literals.begin(), b.literals.end());
    Term t(std::move(lits), a.kind);
    if (t.contradictory()) return std::nullopt;
    return t;
}

TernaryValue DnfFormula::eval(const PartialAssignment& a) const {
    if (a.size() != static_cast<std::size_t>(num_vars))
        throw std::invalid_argument("DnfFormula::eval: dimension mismatch");
    TernaryValue acc = TernaryValue::Zero;
    for (const auto& t : terms) {
        acc = ternary_or(acc, t.eval(a));
        if (acc == TernaryValue::One) break;
    }
    return acc;
}

bool DnfFormula::eval_stable(std::uint64_t bits) const {
    for (const auto& t : terms) {
        bool sat = true;
        for (auto l : t.literals) {
            bool v = (bits >> l.var) & 1u;
            if (l.negated) v = !v;
            if (!v) { sat = false; break; }
        }
        if (sat) return true;
    }
    return false;
}

bool DnfFormula::has_contradictory_terms() const {
    return std::any_of(terms.begin(), terms.end(), [](const Term& t) { return t.contradictory(); });
}

std::size_t DnfFormula::literal_count() const {
    std::size_t n = 0;
    for (const auto& t : terms) n += t.size();
    return n;
}

TernaryValue CnfFormula::eval(const PartialAssignment& a) const {
    if (a.size() != static_cast<std::size_t>(num_vars))
        throw std::invalid_argument("CnfFormula::eval: dimension mismatch");
    TernaryValue acc = TernaryValue::One;
    for (const auto& c : clauses) {
        acc = ternary_and(acc, c.eval(a));
        if (acc == TernaryValue::Zero) break;
    }
    return acc;
}

bool CnfFormula::eval_stable(std::uint64_t bits) const {
    for (const auto& c : clauses) {
        bool sat = false;
        for (auto l : c.literals) {
            bool v = (bits >> l.var) & 1u;
            if (l.negated) v = !v;
            if (v) { sat = true; break; }
        }
        if (!sat) return false;
    }
    return true;
}

bool CnfFormula::has_tautological_clauses() const {
    return std::any_of(clauses.begin(), clauses.end(), [](const Term& c) { return c.contradictory(); });
}

DnfFormula restrict_simplify(const DnfFormula& f, const PartialAssignment& a) {
    if (a.size() != static_cast<std::size_t>(f.num_vars))
        throw std::invalid_argument("restrict_simplify: dimension mismatch");
    DnfFormula out;
    out.num_vars = f.num_vars;
    for (const auto& t : f.terms) {
        std::vector<Literal> kept;
        bool dead = false;
        for (auto l : t.literals) {
            TernaryValue v = a[static_cast<std::size_t>(l.var)];
            if (v == TernaryValue::U) {
                kept.push_back(l);
                continue;
            }
            bool lit_true = (v == TernaryValue::One) != l.negated;
            if (!lit_true) { dead = true; break; }
            // 1-valued literal: deleted.
        }
        if (!dead) out.terms.push_back(Term(std::move(kept), Term::Kind::Conjunction));
    }
    return out;
}

DnfFormula negate_cnf(const CnfFormula& f) {
    DnfFormula out;
    out.num_vars = f.num_vars;
    out.terms.reserve(f.clauses.size());
    for (const auto& c : f.clauses) {
        std::vector<Literal> lits = c.literals;
        for (auto& l : lits) l.negated = !l.negated;
        out.terms.push_back(Term(std::move(lits), Term::Kind::Conjunction));
    }
    return out;
}

std::string to_string(const Term& t) {
    if (t.empty()) return t.kind == Term::Kind::Conjunction ? "1" : "0";
    std::string s;
    const char* sep = t.kind == Term::Kind::Conjunction ? "&" : "|";
    for (std::size_t i = 0; i < t.literals.size(); ++i) {
        if (i) s += sep;
        if (t.literals[i].negated) s += '!';
        s += 'x';
        s += std::to_string(t.literals[i].var + 1);
    }
    return s;
}

std::string to_string(const DnfFormula& f) {
    if (f.terms.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        if (i) s += '|';
        s += '(' + to_string(f.terms[i]) + ')';
    }
    return s;
}

std::string to_string(const CnfFormula& f) {
    if (f.clauses.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        if (i) s += '&';
        s += '(' + to_string(f.clauses[i]) + ')';
    }
    return s;
}

}  // namespace hazardkit
