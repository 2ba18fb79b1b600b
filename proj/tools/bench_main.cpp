// Compares the serial reference kernels against the OpenMP kernels on the
// heavy sweeps and verifies that both modes produce identical results.

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "trimod/sweeps.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <typename Kernel>
auto time_modes(Kernel&& kernel, double& serial_ms, double& parallel_ms) {
    auto t0 = Clock::now();
    auto serial_result = kernel(trimod::ExecPolicy::serial);
    serial_ms = ms_since(t0);
    t0 = Clock::now();
    auto parallel_result = kernel(trimod::ExecPolicy::parallel);
    parallel_ms = ms_since(t0);
    return std::make_pair(std::move(serial_result), std::move(parallel_result));
}

bool report(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::cout << name << ": serial " << serial_ms << " ms, parallel " << parallel_ms
              << " ms, speedup " << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
              << ", results " << (equal ? "identical" : "DIFFER") << "\n";
    return equal;
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;
    }

#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "openmp: not enabled\n";
#endif

    using namespace trimod;
    const SurfaceData g(2);
    int failures = 0;
    double s_ms = 0, p_ms = 0;

    {
        const long long half = quick ? 60 : 600;
        const DegreeWindow window(-half, half, -half, half);
        auto [a, b] = time_modes(
            [&](ExecPolicy p) { return census(3, 2, g, window, p); }, s_ms, p_ms);
        if (!report("census", s_ms, p_ms, a == b)) ++failures;
    }
    {
        const long long half = quick ? 8 : 30;
        const DegreeWindow window(-half, half, -half, half);
        auto [a, b] = time_modes(
            [&](ExecPolicy p) { return mw_alpha_consistency(3, 2, g, window, p); }, s_ms, p_ms);
        const bool equal = a.checked == b.checked && a.violations == b.violations;
        if (!report("mw_alpha_consistency", s_ms, p_ms, equal)) ++failures;
    }
    {
        const int rank_sum = quick ? 4 : 5;
        const long long d_abs = quick ? 3 : 6;
        auto [a, b] = time_modes(
            [&](ExecPolicy p) { return wall_equivalence_scan(rank_sum, d_abs, Rational(10), p); },
            s_ms, p_ms);
        const bool equal = a.checked == b.checked && a.mismatches.size() == b.mismatches.size();
        if (!report("wall_equivalence_scan", s_ms, p_ms, equal)) ++failures;
        if (!a.mismatches.empty()) {
            std::cerr << "wall_equivalence_scan found mismatches\n";
            ++failures;
        }
    }
    {
        const int length = quick ? 4 : 5;
        auto [a, b] = time_modes(
            [&](ExecPolicy p) { return vhs_scan(length, 3, 3, g, p); }, s_ms, p_ms);
        const bool equal = a.checked == b.checked && a.minima == b.minima &&
                           a.numerical == b.numerical && a.by_lemma == b.by_lemma &&
                           a.violation_indices == b.violation_indices;
        if (!report("vhs_scan", s_ms, p_ms, equal)) ++failures;
    }

    if (failures != 0) {
        std::cerr << "serial/parallel mismatch detected\n";
        return 2;
    }
    return 0;
}
