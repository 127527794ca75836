#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hazardkit {

/// Kleene three-valued logic value. The numeric coding doubles as the
/// candidate-scan ordering: u < 0 < 1.
enum class TernaryValue : std::uint8_t { U = 0, Zero = 1, One = 2 };

inline TernaryValue ternary_not(TernaryValue v) {
    switch (v) {
        case TernaryValue::Zero: return TernaryValue::One;
        case TernaryValue::One: return TernaryValue::Zero;
        default: return TernaryValue::U;
    }
}

inline TernaryValue ternary_and(TernaryValue a, TernaryValue b) {
    if (a == TernaryValue::Zero || b == TernaryValue::Zero) return TernaryValue::Zero;
    if (a == TernaryValue::U || b == TernaryValue::U) return TernaryValue::U;
    return TernaryValue::One;
}

inline TernaryValue ternary_or(TernaryValue a, TernaryValue b) {
    if (a == TernaryValue::One || b == TernaryValue::One) return TernaryValue::One;
    if (a == TernaryValue::U || b == TernaryValue::U) return TernaryValue::U;
    return TernaryValue::Zero;
}

inline char ternary_char(TernaryValue v) {
    switch (v) {
        case TernaryValue::Zero: return '0';
        case TernaryValue::One: return '1';
        default: return 'u';
    }
}

/// A vector over {0,1,u}, indexed by variable. Doubles as a circuit input,
/// a hazard witness, and the assignment form of an implicant (stable
/// positions are the implicant's literals, u positions are absent).
struct PartialAssignment {
    std::vector<TernaryValue> values;

    PartialAssignment() = default;
    explicit PartialAssignment(std::size_t n, TernaryValue fill = TernaryValue::U)
        : values(n, fill) {}

    std::size_t size() const { return values.size(); }
    TernaryValue& operator[](std::size_t i) { return values[i]; }
    TernaryValue operator[](std::size_t i) const { return values[i]; }

    std::size_t u_count() const {
        std::size_t k = 0;
        for (auto v : values)
            if (v == TernaryValue::U) ++k;
        return k;
    }
    std::size_t stable_count() const { return size() - u_count(); }
    bool is_stable() const { return u_count() == 0; }

    /// True when this assignment agrees with `coarser` on all of its stable
    /// positions, i.e. this is obtainable from `coarser` by resolving u's.
    bool refines(const PartialAssignment& coarser) const {
        if (size() != coarser.size()) return false;
        for (std::size_t i = 0; i < size(); ++i)
            if (coarser[i] != TernaryValue::U && coarser[i] != values[i]) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(size());
        for (auto v : values) s.push_back(ternary_char(v));
        return s;
    }

    bool operator==(const PartialAssignment& o) const = default;
};

/// Packs an assignment into its scan index: base-3 with variable x1 as the
/// fastest-varying digit and the digit coding u=0, 0=1, 1=2. Candidate scans
/// and implicant-set orderings all follow this index order.
inline std::uint64_t pack_assignment(const PartialAssignment& a) {
    std::uint64_t idx = 0;
    std::uint64_t weight = 1;
    for (auto v : a.values) {
        idx += weight * static_cast<std::uint64_t>(v);
        weight *= 3;
    }
    return idx;
}

inline void unpack_assignment(std::uint64_t idx, std::size_t n, PartialAssignment& out) {
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.values[i] = static_cast<TernaryValue>(idx % 3);
        idx /= 3;
    }
}

inline PartialAssignment unpack_assignment(std::uint64_t idx, std::size_t n) {
    PartialAssignment a;
    unpack_assignment(idx, n, a);
    return a;
}

inline bool lex_less(const PartialAssignment& a, const PartialAssignment& b) {
    return pack_assignment(a) < pack_assignment(b);
}

inline std::uint64_t pow3(std::size_t n) {
    std::uint64_t r = 1;
    while (n--) r *= 3;
    return r;
}

/// Calls `fn` once per resolution of `a`, in lexicographic order of the u
/// positions (first u position most significant, 0 before 1). `fn` receives
/// a fully stable assignment and returns false to stop early. Returns false
/// when the iteration was stopped.
template <typename Fn>
bool for_each_resolution(const PartialAssignment& a, Fn&& fn) {
    std::vector<std::size_t> upos;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == TernaryValue::U) upos.push_back(i);

    PartialAssignment buf = a;
    const std::size_t k = upos.size();
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t c = 0; c < total; ++c) {
        for (std::size_t i = 0; i < k; ++i) {
            bool bit = (c >> (k - 1 - i)) & 1u;
            buf[upos[i]] = bit ? TernaryValue::One : TernaryValue::Zero;
        }
        if (!fn(static_cast<const PartialAssignment&>(buf))) return false;
    }
    return true;
}

/// Materialized resolution stream; 2^(u_count) entries.
std::vector<PartialAssignment> resolutions(const PartialAssignment& a);

/// Stable assignment <-> bit mask conversions (bit i holds variable i).
std::uint64_t assignment_bits(const PartialAssignment& stable);
PartialAssignment assignment_from_bits(std::uint64_t bits, std::size_t n);

}  // namespace hazardkit
