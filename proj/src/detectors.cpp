#include "hazardkit/detectors.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "hazardkit/errors.hpp"
#include "hazardkit/implicants.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hazardkit {

namespace {

enum class HazardFilter { Any, OneOnly, ZeroOnly };

/// Per-thread circuit evaluator with reusable scratch.
struct CircuitEval {
    const Circuit& c;
    TernaryValue operator()(const PartialAssignment& a, std::vector<TernaryValue>& scratch) const {
        return eval_ternary(c, a, scratch);
    }
};

struct DnfEval {
    const DnfFormula& f;
    TernaryValue operator()(const PartialAssignment& a, std::vector<TernaryValue>&) const {
        return f.eval(a);
    }
};

struct CnfEval {
    const CnfFormula& f;
    TernaryValue operator()(const PartialAssignment& a, std::vector<TernaryValue>&) const {
        return f.eval(a);
    }
};

template <typename Eval>
bool hazard_at(const Eval& eval, const PartialAssignment& a, std::vector<TernaryValue>& scratch,
               HazardFilter filter, HazardKind& kind_out) {
    if (eval(a, scratch) != TernaryValue::U) return false;
    bool first = true;
    TernaryValue stable_value = TernaryValue::U;
    bool all_equal = for_each_resolution(a, [&](const PartialAssignment& r) {
        TernaryValue v = eval(r, scratch);
        if (first) {
            stable_value = v;
            first = false;
            return true;
        }
        return v == stable_value;
    });
    if (!all_equal) return false;
    HazardKind kind = stable_value == TernaryValue::One ? HazardKind::OneHazard : HazardKind::ZeroHazard;
    if (filter == HazardFilter::OneOnly && kind != HazardKind::OneHazard) return false;
    if (filter == HazardFilter::ZeroOnly && kind != HazardKind::ZeroHazard) return false;
    kind_out = kind;
    return true;
}

void check_bound(int n, int bound) {
    if (n > bound)
        throw BoundExceeded("brute-force bound exceeded: " + std::to_string(n) + " > " +
                            std::to_string(bound));
}

template <typename Eval>
HazardReport scan_first_serial(const Eval& eval, int n, HazardFilter filter, int bound) {
    check_bound(n, bound);
    const std::uint64_t total = pow3(static_cast<std::size_t>(n));
    PartialAssignment buf;
    std::vector<TernaryValue> scratch;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        unpack_assignment(idx, static_cast<std::size_t>(n), buf);
        HazardKind kind;
        if (hazard_at(eval, buf, scratch, filter, kind)) {
            return {true, kind, buf, DetectionMethod::Brute, true};
        }
    }
    return {};
}

template <typename Eval>
HazardReport scan_first_parallel(const Eval& eval, int n, HazardFilter filter, int bound) {
    check_bound(n, bound);
    const std::int64_t total = static_cast<std::int64_t>(pow3(static_cast<std::size_t>(n)));
#ifdef _OPENMP
    std::atomic<std::int64_t> best{total};
#pragma omp parallel
    {
        PartialAssignment buf;
        std::vector<TernaryValue> scratch;
#pragma omp for schedule(dynamic, 2048)
        for (std::int64_t idx = 0; idx < total; ++idx) {
            if (idx >= best.load(std::memory_order_relaxed)) continue;
            unpack_assignment(static_cast<std::uint64_t>(idx), static_cast<std::size_t>(n), buf);
            HazardKind kind;
            if (hazard_at(eval, buf, scratch, filter, kind)) {
                std::int64_t cur = best.load(std::memory_order_relaxed);
                while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                }
            }
        }
    }
    if (best.load() < total) {
        // Re-derive kind for the winning index.
        PartialAssignment buf = unpack_assignment(static_cast<std::uint64_t>(best.load()),
                                                  static_cast<std::size_t>(n));
        std::vector<TernaryValue> scratch;
        HazardKind kind;
        hazard_at(eval, buf, scratch, filter, kind);
        return {true, kind, buf, DetectionMethod::Brute, true};
    }
    return {};
#else
    return scan_first_serial(eval, n, filter, bound);
#endif
}

template <typename Eval>
std::vector<HazardReport> scan_all_serial(const Eval& eval, int n, HazardFilter filter, int bound) {
    check_bound(n, bound);
    const std::uint64_t total = pow3(static_cast<std::size_t>(n));
    std::vector<HazardReport> out;
    PartialAssignment buf;
    std::vector<TernaryValue> scratch;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        unpack_assignment(idx, static_cast<std::size_t>(n), buf);
        HazardKind kind;
        if (hazard_at(eval, buf, scratch, filter, kind))
            out.push_back({true, kind, buf, DetectionMethod::Brute, true});
    }
    return out;
}

template <typename Eval>
std::vector<HazardReport> scan_all_parallel(const Eval& eval, int n, HazardFilter filter, int bound) {
    check_bound(n, bound);
#ifdef _OPENMP
    const std::int64_t total = static_cast<std::int64_t>(pow3(static_cast<std::size_t>(n)));
    std::vector<std::pair<std::int64_t, HazardKind>> hits;
#pragma omp parallel
    {
        std::vector<std::pair<std::int64_t, HazardKind>> local;
        PartialAssignment buf;
        std::vector<TernaryValue> scratch;
#pragma omp for schedule(dynamic, 2048) nowait
        for (std::int64_t idx = 0; idx < total; ++idx) {
            unpack_assignment(static_cast<std::uint64_t>(idx), static_cast<std::size_t>(n), buf);
            HazardKind kind;
            if (hazard_at(eval, buf, scratch, filter, kind)) local.emplace_back(idx, kind);
        }
#pragma omp critical
        hits.insert(hits.end(), local.begin(), local.end());
    }
    std::sort(hits.begin(), hits.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<HazardReport> out;
    out.reserve(hits.size());
    for (const auto& [idx, kind] : hits)
        out.push_back({true, kind,
                       unpack_assignment(static_cast<std::uint64_t>(idx), static_cast<std::size_t>(n)),
                       DetectionMethod::Brute, true});
    return out;
#else
    return scan_all_serial(eval, n, filter, bound);
#endif
}

template <typename Eval>
bool verify_hazard_impl(const Eval& eval, int n, const PartialAssignment& witness, HazardKind kind) {
    if (witness.size() != static_cast<std::size_t>(n)) return false;
    std::vector<TernaryValue> scratch;
    HazardKind found_kind;
    return hazard_at(eval, witness, scratch, HazardFilter::Any, found_kind) && found_kind == kind;
}

}  // namespace

bool verify_hazard(const Circuit& c, const PartialAssignment& witness, HazardKind kind) {
    return verify_hazard_impl(CircuitEval{c}, c.num_vars, witness, kind);
}

bool verify_hazard(const DnfFormula& f, const PartialAssignment& witness, HazardKind kind) {
    return verify_hazard_impl(DnfEval{f}, f.num_vars, witness, kind);
}

bool verify_hazard(const CnfFormula& f, const PartialAssignment& witness, HazardKind kind) {
    return verify_hazard_impl(CnfEval{f}, f.num_vars, witness, kind);
}

HazardReport brute_force_hazard(const Circuit& c, int bound) {
    return scan_first_parallel(CircuitEval{c}, c.num_vars, HazardFilter::Any, bound);
}

HazardReport brute_force_hazard(const DnfFormula& f, int bound) {
    return scan_first_parallel(DnfEval{f}, f.num_vars, HazardFilter::Any, bound);
}

std::vector<HazardReport> list_all_hazards(const Circuit& c, int bound) {
    return scan_all_parallel(CircuitEval{c}, c.num_vars, HazardFilter::Any, bound);
}

std::vector<HazardReport> list_all_hazards(const DnfFormula& f, int bound) {
    return scan_all_parallel(DnfEval{f}, f.num_vars, HazardFilter::Any, bound);
}

HazardReport dnf_detect_0hazard_brute(const DnfFormula& f, int bound) {
    return scan_first_parallel(DnfEval{f}, f.num_vars, HazardFilter::ZeroOnly, bound);
}

namespace serial {

HazardReport brute_force_hazard(const Circuit& c, int bound) {
    return scan_first_serial(CircuitEval{c}, c.num_vars, HazardFilter::Any, bound);
}

HazardReport brute_force_hazard(const DnfFormula& f, int bound) {
    return scan_first_serial(DnfEval{f}, f.num_vars, HazardFilter::Any, bound);
}

std::vector<HazardReport> list_all_hazards(const Circuit& c, int bound) {
    return scan_all_serial(CircuitEval{c}, c.num_vars, HazardFilter::Any, bound);
}

std::vector<HazardReport> list_all_hazards(const DnfFormula& f, int bound) {
    return scan_all_serial(DnfEval{f}, f.num_vars, HazardFilter::Any, bound);
}

}  // namespace serial

HazardReport eichelberger(const Circuit& c, int bound) {
    TruthOracle oracle = TruthOracle::from_circuit(c);
    std::vector<TernaryValue> scratch;

    ImplicantSet mins = enumerate_minterms(oracle, bound);
    for (const auto& m : mins.items) {
        if (eval_ternary(c, m, scratch) == TernaryValue::U) {
            HazardReport r{true, HazardKind::OneHazard, m, DetectionMethod::Eichelberger, false};
            r.verified = verify_hazard(c, m, HazardKind::OneHazard);
            return r;
        }
    }
    ImplicantSet maxs = enumerate_maxterms(oracle, bound);
    for (const auto& m : maxs.items) {
        if (eval_ternary(c, m, scratch) == TernaryValue::U) {
            HazardReport r{true, HazardKind::ZeroHazard, m, DetectionMethod::Eichelberger, false};
            r.verified = verify_hazard(c, m, HazardKind::ZeroHazard);
            return r;
        }
    }
    return {false, HazardKind::OneHazard, {}, DetectionMethod::Eichelberger, false};
}

HazardReport dnf_detect_1hazard(const DnfFormula& f) {
    const std::size_t n = static_cast<std::size_t>(f.num_vars);
    const auto& terms = f.terms;

    std::vector<bool> contradictory(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) contradictory[i] = terms[i].contradictory();

    PartialAssignment alpha(n);
    for (int x = 0; x < f.num_vars; ++x) {
        const Literal pos{x, false};
        const Literal neg{x, true};
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (contradictory[i] || !terms[i].contains(pos)) continue;
            for (std::size_t j = 0; j < terms.size(); ++j) {
                if (contradictory[j] || !terms[j].contains(neg)) continue;

                // alpha: S and T set true, everything else (including x) u.
                std::fill(alpha.values.begin(), alpha.values.end(), TernaryValue::U);
                bool consistent = true;
                for (const Term* t : {&terms[i], &terms[j]}) {
                    for (auto l : t->literals) {
                        if (l.var == x) continue;
                        TernaryValue want = l.negated ? TernaryValue::Zero : TernaryValue::One;
                        auto& slot = alpha[static_cast<std::size_t>(l.var)];
                        if (slot != TernaryValue::U && slot != want) {
                            consistent = false;
                            break;
                        }
                        slot = want;
                    }
                    if (!consistent) break;
                }
                if (!consistent) continue;

                bool some_term_is_one = std::any_of(terms.begin(), terms.end(), [&](const Term& t) {
                    return t.eval(alpha) == TernaryValue::One;
                });
                if (some_term_is_one) continue;

                HazardReport r{true, HazardKind::OneHazard, alpha, DetectionMethod::DnfPair, false};
                if (alpha.u_count() <= kMaxVerifyUCount)
                    r.verified = verify_hazard(f, alpha, HazardKind::OneHazard);
                return r;
            }
        }
    }
    return {false, HazardKind::OneHazard, {}, DetectionMethod::DnfPair, false};
}

HazardReport cnf_detect_0hazard(const CnfFormula& f) {
    HazardReport r = dnf_detect_1hazard(negate_cnf(f));
    r.method = DetectionMethod::CnfDual;
    if (r.found) {
        r.kind = HazardKind::ZeroHazard;
        if (r.witness.u_count() <= kMaxVerifyUCount)
            r.verified = verify_hazard(f, r.witness, HazardKind::ZeroHazard);
    }
    return r;
}

DnfFormula dnf_eliminate_0hazards(const DnfFormula& f) {
    DnfFormula out;
    out.num_vars = f.num_vars;
    std::copy_if(f.terms.begin(), f.terms.end(), std::back_inserter(out.terms),
                 [](const Term& t) { return !t.contradictory(); });
    return out;
}

CnfFormula cnf_eliminate_1hazards(const CnfFormula& f) {
    CnfFormula out;
    out.num_vars = f.num_vars;
    std::copy_if(f.clauses.begin(), f.clauses.end(), std::back_inserter(out.clauses),
                 [](const Term& c) { return !c.contradictory(); });
    return out;
}

}  // namespace hazardkit
