#include "hazardkit/reduction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hazardkit/errors.hpp"

namespace hazardkit {

int s_of_r(int r) {
    if (r < 1) throw std::invalid_argument("s_of_r: r must be >= 1");
    boost::multiprecision::cpp_int need = boost::multiprecision::cpp_int(1) << r;
    for (int s = 3;; s += 3) {
        if (cm_minterm_count(s / 3) >= need) return s;
    }
}

ReductionParams ReductionParams::make(int num_vars, int r) {
    if (r < 1) throw std::invalid_argument("ReductionParams: r must be >= 1");
    if (num_vars < 0) throw std::invalid_argument("ReductionParams: negative variable count");
    ReductionParams p;
    p.r = r;
    p.n = std::max(1, (num_vars + r - 1) / r);  // pad with unused variables
    p.s = s_of_r(r);
    return p;
}

BetaBijection BetaBijection::make(int r, int s) {
    ImplicantSet minterms = cm_minterms_direct(CmSpec{s});
    const std::uint64_t count = std::uint64_t{1} << r;
    if (minterms.items.size() < count)
        throw std::invalid_argument("BetaBijection: 2^r exceeds the CM minterm count");
    BetaBijection b;
    b.r = r;
    b.s = s;
    b.table.assign(minterms.items.begin(),
                   minterms.items.begin() + static_cast<std::ptrdiff_t>(count));
    return b;
}

std::uint64_t BetaBijection::digest() const {
    std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 0x100000001b3ull;
        }
    };
    mix(static_cast<std::uint64_t>(r));
    mix(static_cast<std::uint64_t>(s));
    for (const auto& a : table) mix(pack_assignment(a));
    return h;
}

namespace {

/// Copies `sub` into `dst` with shifted gate indices; returns the new root.
int append_subcircuit(Circuit& dst, const Circuit& sub) {
    const int offset = static_cast<int>(dst.gates.size());
    for (const Gate& g : sub.gates) {
        Gate ng = g;
        for (int& ch : ng.children) ch += offset;
        dst.gates.push_back(std::move(ng));
    }
    return offset + sub.output;
}

Circuit build_gadget(const ReductionParams& params, const BetaBijection& beta, Literal lit) {
    const int group = lit.var / params.r;
    const int pos = lit.var % params.r;
    std::vector<PartialAssignment> s_local;
    const std::uint32_t count = std::uint32_t{1} << params.r;
    for (std::uint32_t alpha = 0; alpha < count; ++alpha) {
        bool bit = (alpha >> pos) & 1u;
        bool falsifies = lit.negated ? bit : !bit;
        if (falsifies) s_local.push_back(beta.map(alpha));
    }
    AcmSpec spec{params.n, CmSpec{params.s}};
    return acm_formula_with_hazards(spec, group, s_local);
}

Circuit all_hazard_gadget(const ReductionParams& params, const BetaBijection& beta) {
    std::vector<PartialAssignment> s_local(beta.table.begin(), beta.table.end());
    AcmSpec spec{params.n, CmSpec{params.s}};
    return acm_formula_with_hazards(spec, 0, s_local);
}

Circuit build_intermediate(const DnfFormula& f, const ReductionParams& params,
                           const BetaBijection& beta) {
    Circuit out;
    out.num_vars = params.target_vars();
    out.is_formula = true;

    std::map<std::pair<int, bool>, Circuit> gadget_cache;
    auto gadget_for = [&](Literal lit) -> const Circuit& {
        auto key = std::make_pair(lit.var, lit.negated);
        auto it = gadget_cache.find(key);
        if (it == gadget_cache.end())
            it = gadget_cache.emplace(key, build_gadget(params, beta, lit)).first;
        return it->second;
    };

    std::vector<int> term_roots;
    if (f.terms.empty()) {
        // Constant-0 input: every assignment falsifies, so a single gadget
        // with hazards at every mapped minterm stands in for the empty OR.
        term_roots.push_back(append_subcircuit(out, all_hazard_gadget(params, beta)));
    } else {
        for (const Term& t : f.terms) {
            if (t.empty())
                throw std::invalid_argument("reduce: constant-1 term has no gadget form");
            std::vector<int> lit_roots;
            for (Literal l : t.literals) lit_roots.push_back(append_subcircuit(out, gadget_for(l)));
            out.gates.push_back({Gate::Kind::And, {}, std::move(lit_roots)});
            term_roots.push_back(static_cast<int>(out.gates.size()) - 1);
        }
    }
    out.gates.push_back({Gate::Kind::Or, {}, std::move(term_roots)});
    out.output = static_cast<int>(out.gates.size()) - 1;
    return out;
}

}  // namespace

Circuit literal_gadget(const ReductionParams& params, const BetaBijection& beta, Literal lit) {
    if (lit.var < 0 || lit.var >= params.source_vars())
        throw std::invalid_argument("literal_gadget: variable outside the padded source range");
    return build_gadget(params, beta, lit);
}

Circuit reduce_dnffalse_to_hazard_intermediate(const DnfFormula& f, int r) {
    ReductionParams params = ReductionParams::make(f.num_vars, r);
    BetaBijection beta = BetaBijection::make(r, params.s);
    return build_intermediate(f, params, beta);
}

Circuit reduce_dnffalse_to_hazard(const DnfFormula& f, int r) {
    return collapse_adjacent_gates(reduce_dnffalse_to_hazard_intermediate(f, r));
}

PartialAssignment map_assignment_to_minterm(const ReductionParams& params, const BetaBijection& beta,
                                            std::uint64_t y) {
    PartialAssignment out(static_cast<std::size_t>(params.target_vars()));
    const std::uint64_t group_mask = (std::uint64_t{1} << params.r) - 1;
    for (int j = 0; j < params.n; ++j) {
        std::uint32_t alpha = static_cast<std::uint32_t>((y >> (j * params.r)) & group_mask);
        const PartialAssignment& local = beta.map(alpha);
        for (int k = 0; k < params.s; ++k)
            out[static_cast<std::size_t>(j * params.s + k)] = local[static_cast<std::size_t>(k)];
    }
    return out;
}

DnfFormula zero_hazard_gadget(const DnfFormula& f) {
    DnfFormula g = dnf_eliminate_0hazards(f);
    const int fresh = g.num_vars;
    g.num_vars += 1;
    g.terms.push_back(Term({{fresh, false}, {fresh, true}}, Term::Kind::Conjunction));
    return g;
}

ReductionVerification verify_reduction(const DnfFormula& f, int r, int bound) {
    ReductionParams params = ReductionParams::make(f.num_vars, r);
    if (params.target_vars() > bound)
        throw BoundExceeded("verify_reduction: output variable count " +
                            std::to_string(params.target_vars()) + " exceeds bound " +
                            std::to_string(bound));
    BetaBijection beta = BetaBijection::make(r, params.s);
    Circuit intermediate = build_intermediate(f, params, beta);
    Circuit reduced = collapse_adjacent_gates(intermediate);

    ReductionVerification v;
    v.output_depth = depth(reduced);
    if (v.output_depth != 4) v.failures.push_back("output depth is not 4");
    if (reduced.gates[static_cast<std::size_t>(reduced.output)].kind != Gate::Kind::Or)
        v.failures.push_back("output gate is not an OR");

    const std::uint64_t total = std::uint64_t{1} << params.source_vars();
    for (std::uint64_t y = 0; y < total; ++y) {
        if (f.eval_stable(y)) continue;
        ++v.falsifying_count;
        PartialAssignment minterm = map_assignment_to_minterm(params, beta, y);
        if (!verify_hazard(reduced, minterm, HazardKind::OneHazard))
            v.failures.push_back("no hazard at the predicted minterm for y=" + std::to_string(y));
        if (!verify_hazard(intermediate, minterm, HazardKind::OneHazard))
            v.failures.push_back("intermediate misses the hazard for y=" + std::to_string(y));
    }
    v.falsifiable = v.falsifying_count > 0;

    v.hazard_found = brute_force_hazard(reduced, bound).found;
    v.intermediate_hazard_found = brute_force_hazard(intermediate, bound).found;
    if (v.hazard_found != v.falsifiable)
        v.failures.push_back("falsifiability and hazard presence disagree");
    if (v.intermediate_hazard_found != v.falsifiable)
        v.failures.push_back("falsifiability and intermediate hazard presence disagree");

    v.pass = v.failures.empty();
    return v;
}

}  // namespace hazardkit
