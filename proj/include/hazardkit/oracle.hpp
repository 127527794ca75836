#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "hazardkit/circuit.hpp"

namespace hazardkit {

/// Default cap on exhaustive 3^n candidate scans (minterm/maxterm enumeration).
inline constexpr int kDefaultEnumerationBound = 14;
/// Default cap on exhaustive 3^n hazard scans.
inline constexpr int kDefaultBruteForceBound = 13;

/// A Boolean function given by a stable-input evaluator. The callable must be
/// safe to invoke from multiple threads.
class TruthOracle {
public:
    TruthOracle(int num_vars, std::function<bool(std::uint64_t)> fn)
        : num_vars_(num_vars), fn_(std::move(fn)) {}

    int num_vars() const { return num_vars_; }
    bool operator()(std::uint64_t bits) const { return fn_(bits); }

    static TruthOracle from_circuit(const Circuit& c);
    static TruthOracle from_dnf(const DnfFormula& f);
    static TruthOracle from_cnf(const CnfFormula& f);
    /// Row i is the value at the assignment whose big-endian reading x1..xn is i.
    static TruthOracle from_truth_table(int num_vars, std::vector<bool> rows);

private:
    int num_vars_;
    std::function<bool(std::uint64_t)> fn_;
};

}  // namespace hazardkit
