#include "hazardkit/oracle.hpp"

#include <stdexcept>

namespace hazardkit {

TruthOracle TruthOracle::from_circuit(const Circuit& c) {
    auto cc = std::make_shared<Circuit>(c);
    return TruthOracle(c.num_vars, [cc](std::uint64_t bits) {
        thread_local std::vector<unsigned char> scratch;
        return eval_stable(*cc, bits, scratch);
    });
}

TruthOracle TruthOracle::from_dnf(const DnfFormula& f) {
    auto ff = std::make_shared<DnfFormula>(f);
    return TruthOracle(f.num_vars, [ff](std::uint64_t bits) { return ff->eval_stable(bits); });
}

TruthOracle TruthOracle::from_cnf(const CnfFormula& f) {
    auto ff = std::make_shared<CnfFormula>(f);
    return TruthOracle(f.num_vars, [ff](std::uint64_t bits) { return ff->eval_stable(bits); });
}

TruthOracle TruthOracle::from_truth_table(int num_vars, std::vector<bool> rows) {
    if (rows.size() != (std::size_t{1} << num_vars))
        throw std::invalid_argument("from_truth_table: expected 2^n rows");
    auto table = std::make_shared<std::vector<bool>>(std::move(rows));
    return TruthOracle(num_vars, [table, num_vars](std::uint64_t bits) {
        // Row order is big-endian in x1..xn: x1 is the most significant bit.
        std::uint64_t row = 0;
        for (int i = 0; i < num_vars; ++i)
            row = (row << 1) | ((bits >> i) & 1u);
        return (*table)[row];
    });
}

}  // namespace hazardkit
