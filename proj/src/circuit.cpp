#include "hazardkit/circuit.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hazardkit {

void Circuit::validate() const {
    if (gates.empty()) throw std::invalid_argument("circuit: no gates");
    if (output < 0 || output >= static_cast<int>(gates.size()))
        throw std::invalid_argument("circuit: output index out of range");
    std::vector<int> parents(gates.size(), 0);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        switch (g.kind) {
            case Gate::Kind::Input:
                if (!g.children.empty()) throw std::invalid_argument("circuit: input gate with children");
                if (g.lit.var < 0 || g.lit.var >= num_vars)
                    throw std::invalid_argument("circuit: literal variable out of range");
                break;
            case Gate::Kind::Not:
                if (g.children.size() != 1) throw std::invalid_argument("circuit: NOT fan-in must be 1");
                break;
            case Gate::Kind::And:
            case Gate::Kind::Or:
                if (g.children.empty()) throw std::invalid_argument("circuit: AND/OR fan-in must be >= 1");
                break;
        }
        for (int ch : g.children) {
            if (ch < 0 || ch >= static_cast<int>(i))
                throw std::invalid_argument("circuit: child must be an earlier gate");
            ++parents[static_cast<std::size_t>(ch)];
        }
    }
    if (is_formula) {
        for (std::size_t i = 0; i < gates.size(); ++i) {
            if (static_cast<int>(i) == output) continue;
            if (parents[i] != 1) throw std::invalid_argument("circuit: formula gate with fan-out != 1");
        }
    }
}

TernaryValue eval_ternary(const Circuit& c, const PartialAssignment& a,
                          std::vector<TernaryValue>& scratch) {
    if (a.size() != static_cast<std::size_t>(c.num_vars))
        throw std::invalid_argument("eval_ternary: dimension mismatch");
    scratch.resize(c.gates.size());
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        switch (g.kind) {
            case Gate::Kind::Input: {
                TernaryValue v = a[static_cast<std::size_t>(g.lit.var)];
                scratch[i] = g.lit.negated ? ternary_not(v) : v;
                break;
            }
            case Gate::Kind::Not:
                scratch[i] = ternary_not(scratch[static_cast<std::size_t>(g.children[0])]);
                break;
            case Gate::Kind::And: {
                TernaryValue acc = TernaryValue::One;
                for (int ch : g.children) {
                    acc = ternary_and(acc, scratch[static_cast<std::size_t>(ch)]);
                    if (acc == TernaryValue::Zero) break;
                }
                scratch[i] = acc;
                break;
            }
            case Gate::Kind::Or: {
                TernaryValue acc = TernaryValue::Zero;
                for (int ch : g.children) {
                    acc = ternary_or(acc, scratch[static_cast<std::size_t>(ch)]);
                    if (acc == TernaryValue::One) break;
                }
                scratch[i] = acc;
                break;
            }
        }
    }
    return scratch[static_cast<std::size_t>(c.output)];
}

TernaryValue eval_ternary(const Circuit& c, const PartialAssignment& a) {
    std::vector<TernaryValue> scratch;
    return eval_ternary(c, a, scratch);
}

bool eval_stable(const Circuit& c, std::uint64_t bits, std::vector<unsigned char>& scratch) {
    scratch.resize(c.gates.size());
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        switch (g.kind) {
            case Gate::Kind::Input: {
                bool v = (bits >> g.lit.var) & 1u;
                scratch[i] = g.lit.negated ? !v : v;
                break;
            }
            case Gate::Kind::Not:
                scratch[i] = !scratch[static_cast<std::size_t>(g.children[0])];
                break;
            case Gate::Kind::And: {
                bool acc = true;
                for (int ch : g.children)
                    if (!scratch[static_cast<std::size_t>(ch)]) { acc = false; break; }
                scratch[i] = acc;
                break;
            }
            case Gate::Kind::Or: {
                bool acc = false;
                for (int ch : g.children)
                    if (scratch[static_cast<std::size_t>(ch)]) { acc = true; break; }
                scratch[i] = acc;
                break;
            }
        }
    }
    return scratch[static_cast<std::size_t>(c.output)];
}

bool eval_stable(const Circuit& c, std::uint64_t bits) {
    std::vector<unsigned char> scratch;
    return eval_stable(c, bits, scratch);
}

int depth(const Circuit& c) {
    std::vector<int> d(c.gates.size(), 0);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        switch (g.kind) {
            case Gate::Kind::Input:
                d[i] = 0;
                break;
            case Gate::Kind::Not:
                d[i] = d[static_cast<std::size_t>(g.children[0])];
                break;
            case Gate::Kind::And:
            case Gate::Kind::Or: {
                int m = 0;
                for (int ch : g.children) m = std::max(m, d[static_cast<std::size_t>(ch)]);
                d[i] = m + 1;
                break;
            }
        }
    }
    return d[static_cast<std::size_t>(c.output)];
}

Circuit collapse_adjacent_gates(const Circuit& c) {
    if (!c.is_formula) throw std::invalid_argument("collapse_adjacent_gates: input is not a formula");
    Circuit out;
    out.num_vars = c.num_vars;
    out.is_formula = true;

    std::function<int(int)> build = [&](int oi) -> int {
        const Gate& g = c.gates[static_cast<std::size_t>(oi)];
        Gate ng;
        ng.kind = g.kind;
        switch (g.kind) {
            case Gate::Kind::Input:
                ng.lit = g.lit;
                break;
            case Gate::Kind::Not:
                ng.children.push_back(build(g.children[0]));
                break;
            case Gate::Kind::And:
            case Gate::Kind::Or: {
                // Expand same-kind descendants in place, keeping child order.
                std::vector<int> work(g.children.rbegin(), g.children.rend());
                std::vector<int> flat;
                while (!work.empty()) {
                    int ci = work.back();
                    work.pop_back();
                    const Gate& cg = c.gates[static_cast<std::size_t>(ci)];
                    if (cg.kind == g.kind) {
                        for (auto it = cg.children.rbegin(); it != cg.children.rend(); ++it)
                            work.push_back(*it);
                    } else {
                        flat.push_back(ci);
                    }
                }
                for (int ci : flat) ng.children.push_back(build(ci));
                break;
            }
        }
        out.gates.push_back(std::move(ng));
        return static_cast<int>(out.gates.size()) - 1;
    };

    out.output = build(c.output);
    return out;
}

Circuit circuit_from_dnf(const DnfFormula& f) {
    if (f.terms.empty()) throw std::invalid_argument("circuit_from_dnf: constant-0 formula has no circuit form");
    Circuit c;
    c.num_vars = f.num_vars;
    c.is_formula = true;
    std::vector<int> term_gates;
    for (const auto& t : f.terms) {
        if (t.empty()) throw std::invalid_argument("circuit_from_dnf: constant-1 term has no circuit form");
        Gate andg;
        andg.kind = Gate::Kind::And;
        for (auto l : t.literals) {
            c.gates.push_back({Gate::Kind::Input, l, {}});
            andg.children.push_back(static_cast<int>(c.gates.size()) - 1);
        }
        c.gates.push_back(std::move(andg));
        term_gates.push_back(static_cast<int>(c.gates.size()) - 1);
    }
    c.gates.push_back({Gate::Kind::Or, {}, term_gates});
    c.output = static_cast<int>(c.gates.size()) - 1;
    return c;
}

Circuit circuit_from_cnf(const CnfFormula& f) {
    if (f.clauses.empty()) throw std::invalid_argument("circuit_from_cnf: constant-1 formula has no circuit form");
    Circuit c;
    c.num_vars = f.num_vars;
    c.is_formula = true;
    std::vector<int> clause_gates;
    for (const auto& cl : f.clauses) {
        if (cl.empty()) throw std::invalid_argument("circuit_from_cnf: constant-0 clause has no circuit form");
        Gate org;
        org.kind = Gate::Kind::Or;
        for (auto l : cl.literals) {
            c.gates.push_back({Gate::Kind::Input, l, {}});
            org.children.push_back(static_cast<int>(c.gates.size()) - 1);
        }
        c.gates.push_back(std::move(org));
        clause_gates.push_back(static_cast<int>(c.gates.size()) - 1);
    }
    c.gates.push_back({Gate::Kind::And, {}, clause_gates});
    c.output = static_cast<int>(c.gates.size()) - 1;
    return c;
}

namespace {

Term term_from_gate(const Circuit& c, int gi, Term::Kind kind) {
    const Gate& g = c.gates[static_cast<std::size_t>(gi)];
    std::vector<Literal> lits;
    if (g.kind == Gate::Kind::Input) {
        lits.push_back(g.lit);
    } else if ((kind == Term::Kind::Conjunction && g.kind == Gate::Kind::And) ||
               (kind == Term::Kind::Disjunction && g.kind == Gate::Kind::Or)) {
        for (int ch : g.children) {
            const Gate& cg = c.gates[static_cast<std::size_t>(ch)];
            if (cg.kind != Gate::Kind::Input)
                throw std::invalid_argument("not a depth-two formula: nested gate inside term");
            lits.push_back(cg.lit);
        }
    } else {
        throw std::invalid_argument("not a depth-two formula: unexpected gate kind");
    }
    return Term(std::move(lits), kind);
}

}  // namespace

DnfFormula dnf_from_circuit(const Circuit& c) {
    DnfFormula f;
    f.num_vars = c.num_vars;
    const Gate& root = c.gates[static_cast<std::size_t>(c.output)];
    if (root.kind == Gate::Kind::Or) {
        for (int ch : root.children) f.terms.push_back(term_from_gate(c, ch, Term::Kind::Conjunction));
    } else {
        f.terms.push_back(term_from_gate(c, c.output, Term::Kind::Conjunction));
    }
    return f;
}

CnfFormula cnf_from_circuit(const Circuit& c) {
    CnfFormula f;
    f.num_vars = c.num_vars;
    const Gate& root = c.gates[static_cast<std::size_t>(c.output)];
    if (root.kind == Gate::Kind::And) {
        for (int ch : root.children) f.clauses.push_back(term_from_gate(c, ch, Term::Kind::Disjunction));
    } else {
        f.clauses.push_back(term_from_gate(c, c.output, Term::Kind::Disjunction));
    }
    return f;
}

}  // namespace hazardkit
