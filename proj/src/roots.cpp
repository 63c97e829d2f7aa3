#include "epbound/roots.hpp"

#include "epbound/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace epb {

namespace {

constexpr double kBranchGap = 1e-6;
constexpr double kGoldenTol = 1e-10;

double polish(const CubicCoefficients& c, double r) {
    const double p = c.eval(r);
    const double dp = (3.0 * c.c3 * r + 2.0 * c.c2) * r + c.c1;
    if (dp != 0.0) {
        const double step = p / dp;
        if (std::isfinite(step)) return r - step;
    }
    return r;
}

} // namespace

BranchPoint cubic_real_roots(const CubicCoefficients& coeffs) {
    if (coeffs.c3 != 1.0)
        throw std::domain_error("cubic_real_roots expects a monic cubic");

    const double a = coeffs.c2;
    const double b = coeffs.c1;
    const double c = coeffs.c0;

    const double q = (a * a - 3.0 * b) / 9.0;
    const double r = (a * (2.0 * a * a - 9.0 * b) + 27.0 * c) / 54.0;
    const double r2 = r * r;
    const double q3 = q * q * q;

    BranchPoint out;
    out.beta = coeffs.beta;
    out.roots.fill(std::numeric_limits<double>::quiet_NaN());

    if (r2 < q3) {
        const double t = std::acos(std::clamp(r / std::sqrt(q3), -1.0, 1.0));
        const double m = -2.0 * std::sqrt(q);
        out.roots[0] = m * std::cos((t + 2.0 * std::numbers::pi) / 3.0) - a / 3.0;
        out.roots[1] = m * std::cos((t - 2.0 * std::numbers::pi) / 3.0) - a / 3.0;
        out.roots[2] = m * std::cos(t / 3.0) - a / 3.0;
        out.real_count = 3;
    } else {
        const double u = std::cbrt(-r - std::copysign(std::sqrt(r2 - q3), r));
        const double v = (u == 0.0) ? 0.0 : q / u;
        out.roots[0] = u + v - a / 3.0;
        out.real_count = 1;
    }

    for (int i = 0; i < out.real_count; ++i)
        out.roots[i] = polish(coeffs, out.roots[i]);
    std::sort(out.roots.begin(), out.roots.begin() + out.real_count,
              std::greater<>());
    return out;
}

std::vector<double> cubic_roots_bisection(double c2, double c1, double c0) {
    auto f = [&](double x) { return ((x + c2) * x + c1) * x + c0; };

    std::vector<double> roots;
    const int n = 20000;
    const double lo = -10.0, hi = 10.0;
    double xa = lo, fa = f(lo);
    for (int i = 1; i <= n; ++i) {
        const double xb = lo + (hi - lo) * i / n;
        const double fb = f(xb);
        if (fa == 0.0) {
            roots.push_back(xa);
        } else if (fa * fb < 0.0) {
            double a = xa, b = xb;
            while (b - a > 1e-14) {
                const double m = 0.5 * (a + b);
                (f(a) * f(m) <= 0.0 ? b : a) = m;
            }
            roots.push_back(0.5 * (a + b));
        }
        xa = xb;
        fa = fb;
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

std::vector<double> make_log_grid(double lo, double hi, int steps) {
    if (!(lo > 0.0 && hi > lo && steps >= 2))
        throw std::domain_error("log grid requires 0 < lo < hi and steps >= 2");
    std::vector<double> grid(steps);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < steps; ++i)
        grid[i] = std::exp(llo + (lhi - llo) * i / (steps - 1));
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

namespace {

BranchPoint scan_row(double alpha, CubicVariant variant, double beta) {
    if (beta == 0.0) {
        // Free limit E^3 - 4E = 0, handled directly since assemble()
        // requires beta > 0.
        BranchPoint p;
        p.beta = 0.0;
        p.roots = {2.0, 0.0, -2.0};
        p.real_count = 3;
        return p;
    }
    return cubic_real_roots(assemble(alpha, beta, variant));
}

void check_grid(const std::vector<double>& grid) {
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1]))
            throw std::domain_error("beta grid must be strictly ascending");
    if (!grid.empty() && grid.front() < 0.0)
        throw std::domain_error("beta grid must be nonnegative");
}

void check_gaps(const BranchTable& table) {
    for (std::size_t i = 0; i < table.points.size(); ++i) {
        const auto& p = table.points[i];
        for (int j = 0; j + 1 < p.real_count; ++j) {
            if (p.roots[j] - p.roots[j + 1] <= kBranchGap) {
                const double lo = i > 0 ? table.points[i - 1].beta : p.beta;
                const double hi = i + 1 < table.points.size()
                                      ? table.points[i + 1].beta : p.beta;
                throw branch_crossing_error(lo, hi);
            }
        }
    }
}

} // namespace

BranchTable branch_scan_serial(double alpha, CubicVariant variant,
                               const std::vector<double>& beta_grid) {
    check_grid(beta_grid);
    BranchTable table;
    table.variant = variant;
    table.alpha = alpha;
    table.points.reserve(beta_grid.size());
    for (double beta : beta_grid)
        table.points.push_back(scan_row(alpha, variant, beta));
    check_gaps(table);
    return table;
}

BranchTable branch_scan(double alpha, CubicVariant variant,
                        const std::vector<double>& beta_grid) {
    check_grid(beta_grid);
    BranchTable table;
    table.variant = variant;
    table.alpha = alpha;
    table.points.resize(beta_grid.size());

    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(beta_grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        table.points[i] = scan_row(alpha, variant, beta_grid[i]);

    check_gaps(table);
    return table;
}

BranchMinimum minimize_branch(double alpha, CubicVariant variant,
                              int branch_index, double lo, double hi) {
    if (branch_index < 1 || branch_index > 3)
        throw std::domain_error("branch_index must be 1, 2 or 3");
    if (!(lo > 0.0 && hi > lo))
        throw std::domain_error("minimize_branch requires 0 < lo < hi");

    auto value = [&](double beta) {
        const BranchPoint p = cubic_real_roots(assemble(alpha, beta, variant));
        if (branch_index > p.real_count)
            throw no_interior_minimum_error(
                "branch " + std::to_string(branch_index) +
                " is not real at beta=" + std::to_string(beta));
        return p.roots[branch_index - 1];
    };

    // Golden section to width kGoldenTol.
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = value(x1), f2 = value(x2);
    while (b - a > kGoldenTol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = value(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = value(x2);
        }
    }
    double beta_star = 0.5 * (a + b);

    if (beta_star - lo < 10.0 * kGoldenTol || hi - beta_star < 10.0 * kGoldenTol)
        throw no_interior_minimum_error(
            "branch is monotone on the bracket; minimum pinned to a boundary");

    // Parabolic refinement through (b*-d, b*, b*+d).
    {
        const double d = 1e-7;
        const double fm = value(beta_star - d);
        const double fc = value(beta_star);
        const double fp = value(beta_star + d);
        const double denom = fp - 2.0 * fc + fm;
        if (denom > 0.0) {
            const double shift = 0.5 * d * (fm - fp) / denom;
            if (std::abs(shift) < d)
                beta_star += shift;
        }
    }

    BranchMinimum result;
    result.branch_index = branch_index;
    result.beta_star = beta_star;
    result.E_star = value(beta_star);
    result.bracket_lo = lo;
    result.bracket_hi = hi;

    const double h = 1e-6;
    result.converged = result.E_star <= value(beta_star - h) &&
                       result.E_star <= value(beta_star + h);
    return result;
}

} // namespace epb
