// Compares the serial reference branch scan against the OpenMP-parallel
// one on a large grid and reports the timings. The two must agree
// bit-for-bit.

#include "epbound/roots.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>

int main(int argc, char** argv) {
    int steps = 200000;
    if (argc > 1)
        steps = std::atoi(argv[1]);

    const double alpha = 1.0 / 137.0;
    const auto grid = epb::make_log_grid(1e-4, 1.2, steps);

    using clock = std::chrono::steady_clock;

    const auto t0 = clock::now();
    const auto serial = epb::branch_scan_serial(alpha, epb::CubicVariant::derived, grid);
    const auto t1 = clock::now();
    const auto parallel = epb::branch_scan(alpha, epb::CubicVariant::derived, grid);
    const auto t2 = clock::now();

    bool identical = serial.points.size() == parallel.points.size();
    for (std::size_t i = 0; identical && i < serial.points.size(); ++i)
        identical = std::memcmp(&serial.points[i].roots, &parallel.points[i].roots,
                                sizeof serial.points[i].roots) == 0;

    const double serial_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    const double parallel_ms =
        std::chrono::duration<double, std::milli>(t2 - t1).count();

    std::printf("grid points : %d\n", steps);
    std::printf("serial      : %8.2f ms\n", serial_ms);
    std::printf("parallel    : %8.2f ms\n", parallel_ms);
    std::printf("speedup     : %8.2fx\n", serial_ms / parallel_ms);
    std::printf("bit-identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
