#pragma once

#include "epbound/cubic_model.hpp"

#include <array>
#include <vector>

namespace epb {

/// Real roots of a monic cubic at one value of the trial exponent.
/// Roots are sorted descending (E1 >= E2 >= E3); unused slots are NaN.
struct BranchPoint {
    double beta = 0.0;
    std::array<double, 3> roots{};
    int real_count = 0;
};

struct BranchTable {
    std::vector<BranchPoint> points;
    CubicVariant variant = CubicVariant::derived;
    double alpha = 0.0;
};

/// Closed-form (trigonometric / Cardano) real roots with one Newton polish
/// step per root.
BranchPoint cubic_real_roots(const CubicCoefficients& coeffs);

/// Independent root oracle: sign-change bracketing over [-10, 10] followed
/// by bisection to 1e-12. Slower than the closed form and deliberately
/// sharing no code with it.
std::vector<double> cubic_roots_bisection(double c2, double c1, double c0);

/// Strictly ascending log-spaced grid on [lo, hi].
std::vector<double> make_log_grid(double lo, double hi, int steps);

/// Assemble-and-solve over an ascending beta grid. Branch identity is sort
/// order; adjacent sorted roots closer than 1e-6 anywhere on the grid raise
/// branch_crossing_error naming the offending interval.
///
/// branch_scan evaluates rows in parallel (the rows are independent and the
/// assembled table is ordered, so the result is bit-identical to the serial
/// reference). branch_scan_serial is the reference implementation kept for
/// testing and benchmarking.
BranchTable branch_scan(double alpha, CubicVariant variant,
                        const std::vector<double>& beta_grid);
BranchTable branch_scan_serial(double alpha, CubicVariant variant,
                               const std::vector<double>& beta_grid);

struct BranchMinimum {
    int branch_index = 0;  // 1-based: 1 = largest root
    double beta_star = 0.0;
    double E_star = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    bool converged = false;
};

/// Golden-section search to bracket width 1e-10 followed by one parabolic
/// refinement, on the branch_index-th root of the cubic as a function of
/// beta. A minimum pinned to the bracket boundary raises
/// no_interior_minimum_error.
BranchMinimum minimize_branch(double alpha, CubicVariant variant,
                              int branch_index, double lo, double hi);

} // namespace epb
