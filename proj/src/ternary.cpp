#include "hazardkit/ternary.hpp"

#include <stdexcept>

namespace hazardkit {

std::vector<PartialAssignment> resolutions(const PartialAssignment& a) {
    std::vector<PartialAssignment> out;
    out.reserve(std::size_t{1} << a.u_count());
    for_each_resolution(a, [&](const PartialAssignment& r) {
        out.push_back(r);
        return true;
    });
    return out;
}

std::uint64_t assignment_bits(const PartialAssignment& stable) {
    if (!stable.is_stable()) throw std::invalid_argument("assignment_bits: input has unstable values");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < stable.size(); ++i)
        if (stable[i] == TernaryValue::One) bits |= std::uint64_t{1} << i;
    return bits;
}

PartialAssignment assignment_from_bits(std::uint64_t bits, std::size_t n) {
    PartialAssignment a(n);
    for (std::size_t i = 0; i < n; ++i)
        a[i] = (bits >> i) & 1u ? TernaryValue::One : TernaryValue::Zero;
    return a;
}

}  // namespace hazardkit
