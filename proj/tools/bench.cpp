// Serial vs parallel benchmark for the exhaustive kernels: brute-force
// hazard scans and minterm enumeration on CM/ACM instances. Not part of
// the test suite; run manually to gauge OpenMP speedup on the host.

#include <chrono>
#include <cstdio>

#include "hazardkit/detectors.hpp"
#include "hazardkit/implicants.hpp"
#include "hazardkit/synthesis.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace hazardkit;

template <typename Fn>
double time_ms(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, int vars, double serial_ms, double parallel_ms) {
    std::printf("%-34s %4d  %10.1f  %10.1f  %6.2fx\n", name, vars, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP: disabled (serial build)\n");
#endif
    std::printf("%-34s %4s  %10s  %10s  %7s\n", "kernel", "vars", "serial ms", "parallel ms",
                "speedup");

    {
        AcmSpec spec{3, CmSpec{3}};
        Circuit c = acm_hazard_free_formula(spec);
        double s = time_ms([&] { serial::brute_force_hazard(c, 16); });
        double p = time_ms([&] { brute_force_hazard(c, 16); });
        row("brute scan, hazard-free ACM(3x3)", c.num_vars, s, p);
    }
    {
        AcmSpec spec{4, CmSpec{3}};
        Circuit c = acm_hazard_free_formula(spec);
        double s = time_ms([&] { serial::brute_force_hazard(c, 16); });
        double p = time_ms([&] { brute_force_hazard(c, 16); });
        row("brute scan, hazard-free ACM(4x3)", c.num_vars, s, p);
    }
    {
        TruthOracle f = cm_oracle(CmSpec{12});
        double s = time_ms([&] { serial::enumerate_minterms(f, 16); });
        double p = time_ms([&] { enumerate_minterms(f, 16); });
        row("minterm enumeration, CM(12)", 12, s, p);
    }
    {
        TruthOracle f = acm_oracle(AcmSpec{2, CmSpec{6}});
        double s = time_ms([&] { serial::enumerate_maxterms(f, 16); });
        double p = time_ms([&] { enumerate_maxterms(f, 16); });
        row("maxterm enumeration, ACM(2x6)", 12, s, p);
    }
    return 0;
}
