#include "hazardkit/implicants.hpp"

#include <algorithm>
#include <stdexcept>

#include "hazardkit/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hazardkit {

namespace {

/// Checks all stable assignments covered by (base, umask) against `target`.
/// `base` carries the 1-valued stable positions, `umask` the free positions.
bool covered_all_equal(std::uint64_t base, std::uint64_t umask, const TruthOracle& f, bool target) {
    std::uint64_t s = 0;
    do {
        if (f(base | s) != target) return false;
        s = (s - umask) & umask;
    } while (s != 0);
    return true;
}

struct Candidate {
    std::uint64_t base = 0;
    std::uint64_t umask = 0;
};

Candidate candidate_from(const PartialAssignment& t) {
    Candidate c;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == TernaryValue::U)
            c.umask |= std::uint64_t{1} << i;
        else if (t[i] == TernaryValue::One)
            c.base |= std::uint64_t{1} << i;
    }
    return c;
}

/// A verified implicant is minimal iff no single stable position can be
/// freed. Freeing position p keeps an implicant iff the p-flipped candidate
/// is itself an implicant, so only the flipped half needs rechecking.
bool is_minimal(const Candidate& c, std::size_t n, const TruthOracle& f, bool target) {
    for (std::size_t p = 0; p < n; ++p) {
        std::uint64_t bit = std::uint64_t{1} << p;
        if (c.umask & bit) continue;
        if (covered_all_equal(c.base ^ bit, c.umask, f, target)) return false;
    }
    return true;
}

bool is_minterm_candidate(std::uint64_t idx, std::size_t n, const TruthOracle& f, bool target,
                          PartialAssignment& buf) {
    unpack_assignment(idx, n, buf);
    Candidate c = candidate_from(buf);
    return covered_all_equal(c.base, c.umask, f, target) && is_minimal(c, n, f, target);
}

ImplicantSet build_set(const TruthOracle& f, ImplicantKind kind, std::vector<std::uint64_t> hits) {
    std::sort(hits.begin(), hits.end());
    ImplicantSet set;
    set.num_vars = f.num_vars();
    set.kind = kind;
    set.items.reserve(hits.size());
    for (auto idx : hits)
        set.items.push_back(unpack_assignment(idx, static_cast<std::size_t>(f.num_vars())));
    return set;
}

ImplicantSet enumerate_serial(const TruthOracle& f, ImplicantKind kind, int bound) {
    const int n = f.num_vars();
    if (n > bound)
        throw BoundExceeded("enumeration bound exceeded: " + std::to_string(n) + " > " +
                            std::to_string(bound));
    const bool target = kind == ImplicantKind::OneImplicant;
    const std::uint64_t total = pow3(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> hits;
    PartialAssignment buf;
    for (std::uint64_t idx = 0; idx < total; ++idx)
        if (is_minterm_candidate(idx, static_cast<std::size_t>(n), f, target, buf)) hits.push_back(idx);
    return build_set(f, kind, std::move(hits));
}

ImplicantSet enumerate_parallel(const TruthOracle& f, ImplicantKind kind, int bound) {
    const int n = f.num_vars();
    if (n > bound)
        throw BoundExceeded("enumeration bound exceeded: " + std::to_string(n) + " > " +
                            std::to_string(bound));
    const bool target = kind == ImplicantKind::OneImplicant;
    const std::int64_t total = static_cast<std::int64_t>(pow3(static_cast<std::size_t>(n)));
    std::vector<std::uint64_t> hits;
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<std::uint64_t> local;
        PartialAssignment buf;
#pragma omp for schedule(dynamic, 4096) nowait
        for (std::int64_t idx = 0; idx < total; ++idx)
            if (is_minterm_candidate(static_cast<std::uint64_t>(idx), static_cast<std::size_t>(n), f,
                                     target, buf))
                local.push_back(static_cast<std::uint64_t>(idx));
#pragma omp critical
        hits.insert(hits.end(), local.begin(), local.end());
    }
#else
    PartialAssignment buf;
    for (std::int64_t idx = 0; idx < total; ++idx)
        if (is_minterm_candidate(static_cast<std::uint64_t>(idx), static_cast<std::size_t>(n), f,
                                 target, buf))
            hits.push_back(static_cast<std::uint64_t>(idx));
#endif
    return build_set(f, kind, std::move(hits));
}

}  // namespace

std::vector<Term> ImplicantSet::terms() const {
    std::vector<Term> out;
    out.reserve(items.size());
    const auto tk =
        kind == ImplicantKind::OneImplicant ? Term::Kind::Conjunction : Term::Kind::Disjunction;
    for (const auto& a : items) out.push_back(Term::from_assignment(a, tk));
    return out;
}

bool ImplicantSet::contains(const PartialAssignment& a) const {
    return std::any_of(items.begin(), items.end(),
                       [&](const PartialAssignment& i) { return i == a; });
}

bool is_implicant(const PartialAssignment& t, const TruthOracle& f, ImplicantKind kind) {
    if (t.size() != static_cast<std::size_t>(f.num_vars()))
        throw std::invalid_argument("is_implicant: dimension mismatch");
    Candidate c = candidate_from(t);
    return covered_all_equal(c.base, c.umask, f, kind == ImplicantKind::OneImplicant);
}

bool is_implicant(const Term& t, const TruthOracle& f, ImplicantKind kind) {
    if (t.contradictory()) throw std::invalid_argument("is_implicant: contradictory term");
    return is_implicant(t.to_assignment(static_cast<std::size_t>(f.num_vars())), f, kind);
}

ImplicantSet enumerate_minterms(const TruthOracle& f, int bound) {
    return enumerate_parallel(f, ImplicantKind::OneImplicant, bound);
}

ImplicantSet enumerate_maxterms(const TruthOracle& f, int bound) {
    return enumerate_parallel(f, ImplicantKind::ZeroImplicant, bound);
}

namespace serial {

ImplicantSet enumerate_minterms(const TruthOracle& f, int bound) {
    return enumerate_serial(f, ImplicantKind::OneImplicant, bound);
}

ImplicantSet enumerate_maxterms(const TruthOracle& f, int bound) {
    return enumerate_serial(f, ImplicantKind::ZeroImplicant, bound);
}

}  // namespace serial

bool check_cross_intersection(const ImplicantSet& mins, const ImplicantSet& maxs) {
    if (mins.num_vars != maxs.num_vars)
        throw std::invalid_argument("check_cross_intersection: variable count mismatch");
    for (const auto& m : mins.items) {
        for (const auto& t : maxs.items) {
            bool conflict = false;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] != TernaryValue::U && t[i] != TernaryValue::U && m[i] != t[i]) {
                    conflict = true;
                    break;
                }
            }
            if (!conflict) return false;
        }
    }
    return true;
}

boost::multiprecision::cpp_int cm_minterm_count(int n) {
    if (n < 1) throw std::invalid_argument("cm_minterm_count: n must be >= 1");
    auto binom = [](int a, int b) {
        boost::multiprecision::cpp_int r = 1;
        for (int i = 1; i <= b; ++i) {
            r *= a - b + i;
            r /= i;
        }
        return r;
    };
    return binom(3 * n, n) * binom(2 * n, n);
}

}  // namespace hazardkit
