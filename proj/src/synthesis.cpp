#include "hazardkit/synthesis.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace hazardkit {

void CmSpec::validate() const {
    if (s < 3 || s % 3 != 0) throw std::invalid_argument("CmSpec: s must be a positive multiple of 3");
}

void AcmSpec::validate() const {
    cm.validate();
    if (groups < 1) throw std::invalid_argument("AcmSpec: groups must be >= 1");
}

TruthOracle cm_oracle(const CmSpec& spec) {
    spec.validate();
    const int s = spec.s;
    const int t = spec.threshold();
    const std::uint64_t mask = (std::uint64_t{1} << s) - 1;
    return TruthOracle(s, [s, t, mask](std::uint64_t bits) {
        int ones = std::popcount(bits & mask);
        return ones >= t && (s - ones) >= t;
    });
}

TruthOracle acm_oracle(const AcmSpec& spec) {
    spec.validate();
    const int s = spec.cm.s;
    const int t = spec.cm.threshold();
    const int groups = spec.groups;
    const std::uint64_t mask = (std::uint64_t{1} << s) - 1;
    return TruthOracle(spec.total_vars(), [s, t, groups, mask](std::uint64_t bits) {
        for (int j = 0; j < groups; ++j) {
            int ones = std::popcount((bits >> (j * s)) & mask);
            if (ones < t || (s - ones) < t) return false;
        }
        return true;
    });
}

ImplicantSet cm_minterms_direct(const CmSpec& spec) {
    spec.validate();
    const int s = spec.s;
    const int t = spec.threshold();

    ImplicantSet set;
    set.num_vars = s;
    set.kind = ImplicantKind::OneImplicant;

    // Enumerate all disjoint (ones, zeros) subset pairs of size t each.
    std::vector<int> ones(t), zeros(t);
    std::vector<bool> used(s, false);

    auto emit = [&]() {
        PartialAssignment a(static_cast<std::size_t>(s));
        for (int v : ones) a[static_cast<std::size_t>(v)] = TernaryValue::One;
        for (int v : zeros) a[static_cast<std::size_t>(v)] = TernaryValue::Zero;
        set.items.push_back(std::move(a));
    };

    std::function<void(int, int)> pick_zeros = [&](int depth, int start) {
        if (depth == t) {
            emit();
            return;
        }
        for (int v = start; v < s; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            zeros[static_cast<std::size_t>(depth)] = v;
            pick_zeros(depth + 1, v + 1);
        }
    };
    std::function<void(int, int)> pick_ones = [&](int depth, int start) {
        if (depth == t) {
            pick_zeros(0, 0);
            return;
        }
        for (int v = start; v < s; ++v) {
            ones[static_cast<std::size_t>(depth)] = v;
            used[static_cast<std::size_t>(v)] = true;
            pick_ones(depth + 1, v + 1);
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    pick_ones(0, 0);

    std::sort(set.items.begin(), set.items.end(),
              [](const PartialAssignment& a, const PartialAssignment& b) { return lex_less(a, b); });
    return set;
}

DnfFormula huffman_dnf(const ImplicantSet& minterms) {
    if (minterms.kind != ImplicantKind::OneImplicant)
        throw std::invalid_argument("huffman_dnf: expected a minterm set");
    DnfFormula f;
    f.num_vars = minterms.num_vars;
    for (const auto& t : minterms.terms()) f.terms.push_back(t);
    return f;
}

DnfFormula huffman_dnf(const TruthOracle& f, int bound) {
    return huffman_dnf(enumerate_minterms(f, bound));
}

DnfFormula inject_hazards_into(DnfFormula huffman, const ImplicantSet& minterms,
                               std::vector<PartialAssignment> S) {
    std::sort(S.begin(), S.end(),
              [](const PartialAssignment& a, const PartialAssignment& b) { return lex_less(a, b); });
    S.erase(std::unique(S.begin(), S.end()), S.end());

    for (const auto& I : S) {
        if (!minterms.contains(I))
            throw std::invalid_argument("inject_hazards: selected assignment is not a minterm");
        int split_var = -1;
        for (std::size_t i = 0; i < I.size(); ++i) {
            if (I[i] == TernaryValue::U) {
                split_var = static_cast<int>(i);
                break;
            }
        }
        if (split_var < 0)
            throw std::invalid_argument("inject_hazards: full-size minterm cannot be split");

        Term original = Term::from_assignment(I, Term::Kind::Conjunction);
        auto it = std::find(huffman.terms.begin(), huffman.terms.end(), original);
        if (it == huffman.terms.end())
            throw std::invalid_argument("inject_hazards: minterm term missing from formula");
        std::size_t pos = static_cast<std::size_t>(it - huffman.terms.begin());

        auto with_split = [&](bool negated) {
            std::vector<Literal> lits = original.literals;
            lits.push_back({split_var, negated});
            return Term(std::move(lits), Term::Kind::Conjunction);
        };
        Term pos_term = with_split(false);
        Term neg_term = with_split(true);

        huffman.terms.erase(huffman.terms.begin() + static_cast<std::ptrdiff_t>(pos));
        std::vector<Term> replacement;
        for (const Term& nt : {pos_term, neg_term}) {
            if (std::find(huffman.terms.begin(), huffman.terms.end(), nt) == huffman.terms.end())
                replacement.push_back(nt);
        }
        huffman.terms.insert(huffman.terms.begin() + static_cast<std::ptrdiff_t>(pos),
                             replacement.begin(), replacement.end());
    }
    return huffman;
}

DnfFormula inject_hazards(const TruthOracle& f, const std::vector<PartialAssignment>& S, int bound) {
    ImplicantSet minterms = enumerate_minterms(f, bound);
    return inject_hazards_into(huffman_dnf(minterms), minterms, S);
}

DnfFormula relabel_dnf(const DnfFormula& f, int offset, int new_num_vars) {
    DnfFormula out;
    out.num_vars = new_num_vars;
    for (const auto& t : f.terms) {
        std::vector<Literal> lits = t.literals;
        for (auto& l : lits) l.var += offset;
        out.terms.push_back(Term(std::move(lits), Term::Kind::Conjunction));
    }
    return out;
}

namespace {

/// Appends a DNF as an OR-of-AND subtree; returns the OR gate index.
int append_dnf(Circuit& c, const DnfFormula& f) {
    std::vector<int> term_gates;
    for (const auto& t : f.terms) {
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
    return static_cast<int>(c.gates.size()) - 1;
}

Circuit build_acm(const AcmSpec& spec, int hazard_group,
                  const std::vector<PartialAssignment>* s_local) {
    spec.validate();
    ImplicantSet cm_minterms = cm_minterms_direct(spec.cm);
    DnfFormula hazard_free = huffman_dnf(cm_minterms);

    Circuit c;
    c.num_vars = spec.total_vars();
    c.is_formula = true;
    std::vector<int> group_roots;
    for (int j = 0; j < spec.groups; ++j) {
        DnfFormula local = hazard_free;
        if (j == hazard_group) local = inject_hazards_into(hazard_free, cm_minterms, *s_local);
        group_roots.push_back(append_dnf(c, relabel_dnf(local, j * spec.cm.s, c.num_vars)));
    }
    c.gates.push_back({Gate::Kind::And, {}, group_roots});
    c.output = static_cast<int>(c.gates.size()) - 1;
    return c;
}

}  // namespace

Circuit acm_hazard_free_formula(const AcmSpec& spec) { return build_acm(spec, -1, nullptr); }

Circuit acm_formula_with_hazards(const AcmSpec& spec, int group,
                                 const std::vector<PartialAssignment>& s_local) {
    if (group < 0 || group >= spec.groups)
        throw std::invalid_argument("acm_formula_with_hazards: group index out of range");
    if (s_local.empty())
        throw std::invalid_argument("acm_formula_with_hazards: minterm selection must be nonempty");
    return build_acm(spec, group, &s_local);
}

}  // namespace hazardkit
