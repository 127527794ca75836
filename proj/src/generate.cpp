#include "hazardkit/generate.hpp"

#include <algorithm>
#include <numeric>

namespace hazardkit {

namespace {

Term random_term(Rng& rng, int num_vars, int max_width, Term::Kind kind, bool allow_contradictory) {
    std::uniform_int_distribution<int> width_dist(1, std::min(max_width, num_vars));
    const int width = width_dist(rng);
    std::vector<int> vars(static_cast<std::size_t>(num_vars));
    std::iota(vars.begin(), vars.end(), 0);
    std::shuffle(vars.begin(), vars.end(), rng);

    std::vector<Literal> lits;
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < width; ++i) lits.push_back({vars[static_cast<std::size_t>(i)], coin(rng)});
    if (allow_contradictory && width >= 2 && coin(rng) && coin(rng)) {
        // Occasionally force a contradiction on the first chosen variable.
        lits.push_back({lits.front().var, !lits.front().negated});
    }
    return Term(std::move(lits), kind);
}

}  // namespace

DnfFormula random_dnf(Rng& rng, int num_vars, int num_terms, int max_width,
                      bool allow_contradictory) {
    DnfFormula f;
    f.num_vars = num_vars;
    for (int i = 0; i < num_terms; ++i)
        f.terms.push_back(
            random_term(rng, num_vars, max_width, Term::Kind::Conjunction, allow_contradictory));
    return f;
}

CnfFormula random_cnf(Rng& rng, int num_vars, int num_clauses, int max_width,
                      bool allow_tautological) {
    CnfFormula f;
    f.num_vars = num_vars;
    for (int i = 0; i < num_clauses; ++i)
        f.clauses.push_back(
            random_term(rng, num_vars, max_width, Term::Kind::Disjunction, allow_tautological));
    return f;
}

namespace {

Circuit random_circuit_impl(Rng& rng, int num_vars, int num_gates, int max_fanin, bool monotone) {
    Circuit c;
    c.num_vars = num_vars;
    c.is_formula = false;
    std::bernoulli_distribution coin(0.5);

    for (int v = 0; v < num_vars; ++v) {
        c.gates.push_back({Gate::Kind::Input, {v, false}, {}});
        if (!monotone) c.gates.push_back({Gate::Kind::Input, {v, true}, {}});
    }

    std::uniform_real_distribution<double> kind_dist(0.0, 1.0);
    for (int i = 0; i < num_gates; ++i) {
        const int avail = static_cast<int>(c.gates.size());
        std::uniform_int_distribution<int> pick(0, avail - 1);
        double roll = kind_dist(rng);
        Gate g;
        if (!monotone && roll < 0.15) {
            g.kind = Gate::Kind::Not;
            g.children.push_back(pick(rng));
        } else {
            g.kind = roll < 0.575 ? Gate::Kind::And : Gate::Kind::Or;
            std::uniform_int_distribution<int> fanin_dist(1, max_fanin);
            const int fanin = fanin_dist(rng);
            for (int k = 0; k < fanin; ++k) g.children.push_back(pick(rng));
            std::sort(g.children.begin(), g.children.end());
            g.children.erase(std::unique(g.children.begin(), g.children.end()), g.children.end());
        }
        c.gates.push_back(std::move(g));
    }
    c.output = static_cast<int>(c.gates.size()) - 1;
    return c;
}

}  // namespace

Circuit random_circuit(Rng& rng, int num_vars, int num_gates, int max_fanin) {
    return random_circuit_impl(rng, num_vars, num_gates, max_fanin, false);
}

Circuit random_monotone_circuit(Rng& rng, int num_vars, int num_gates, int max_fanin) {
    return random_circuit_impl(rng, num_vars, num_gates, max_fanin, true);
}

std::vector<bool> random_truth_table(Rng& rng, int num_vars) {
    std::vector<bool> rows(std::size_t{1} << num_vars);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = coin(rng);
    return rows;
}

}  // namespace hazardkit
