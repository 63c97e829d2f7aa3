#include "epbound/checks.hpp"

#include "epbound/kinematics.hpp"
#include "epbound/matrix_elements.hpp"
#include "epbound/roots.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace epb {

namespace {

constexpr double kPi = std::numbers::pi;

std::string worst(double v) {
    std::ostringstream os;
    os << "worst deviation " << v;
    return os.str();
}

CheckResult check_quadrature_vs_closed_forms() {
    double worst_rel = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double beta = 1e-3 * std::pow(2.0 / 1e-3, i / 19.0);
        const MatrixElements m = closed_forms(beta);
        const double rel_norm =
            std::abs(quadrature_oracle(beta, Integrand::norm) - m.norm) / m.norm;
        const double rel_invx =
            std::abs(quadrature_oracle(beta, Integrand::inv_x) - m.inv_x) / m.inv_x;
        const double rel_lap =
            std::abs(quadrature_oracle(beta, Integrand::lap) - m.lap) / std::abs(m.lap);
        worst_rel = std::max({worst_rel, rel_norm, rel_invx, rel_lap});
    }
    return {"matrix_elements_quadrature", worst_rel <= 1e-8, worst(worst_rel)};
}

CheckResult check_fourier_lap2(bool perturb) {
    double worst_rel = 0.0;
    for (double beta : {0.25, 0.5, 1.0, 1.37, 2.0}) {
        double expected = 5.0 * kPi * beta;
        if (perturb)
            expected *= 1.0 + 1e-6;
        const double rel = std::abs(fourier_lap2(beta) - expected) / expected;
        worst_rel = std::max(worst_rel, rel);
    }
    return {"fourier_lap2", worst_rel <= 1e-8, worst(worst_rel)};
}

CheckResult check_lap2_contact_term() {
    // The classical double application of the Laplacian misses the
    // delta-function at the origin: it must DISAGREE with the closed form
    // by exactly the contact term 8 pi beta.
    bool ok = true;
    double worst_rel = 0.0;
    for (double beta : {0.5, 1.0, 2.0}) {
        const double contactless = quadrature_oracle(beta, Integrand::lap2_realspace);
        const double closed = closed_forms(beta).lap2;
        if (std::abs(contactless - closed) < kPi * beta)
            ok = false;  // they must differ by O(pi*beta), not agree
        const double repaired = contactless + lap2_contact_term(beta);
        worst_rel = std::max(worst_rel, std::abs(repaired - closed) / closed);
    }
    return {"lap2_contact_term", ok && worst_rel <= 1e-8, worst(worst_rel)};
}

CheckResult check_cubic_vs_bisection(unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> root_dist(-8.0, 8.0);

    double worst_abs = 0.0;
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
        // Build a monic cubic from three known real roots so the bisection
        // window [-10, 10] always contains them.
        const double r1 = root_dist(rng), r2 = root_dist(rng), r3 = root_dist(rng);
        CubicCoefficients c;
        c.c2 = -(r1 + r2 + r3);
        c.c1 = r1 * r2 + r1 * r3 + r2 * r3;
        c.c0 = -r1 * r2 * r3;

        const BranchPoint closed = cubic_real_roots(c);
        const auto oracle = cubic_roots_bisection(c.c2, c.c1, c.c0);
        if (closed.real_count != static_cast<int>(oracle.size())) {
            ok = false;
            continue;
        }
        for (int j = 0; j < closed.real_count; ++j)
            worst_abs = std::max(worst_abs, std::abs(closed.roots[j] - oracle[j]));
    }
    return {"cubic_roots_bisection", ok && worst_abs <= 1e-10, worst(worst_abs)};
}

CheckResult check_l2_rational_vs_sum(unsigned seed) {
    std::mt19937 rng(seed + 1);
    std::uniform_real_distribution<double> comp(-2.0, 2.0);
    std::uniform_real_distribution<double> energy(-6.0, 6.0);

    double worst_rel = 0.0;
    int accepted = 0;
    while (accepted < 1000) {
        const Vec3 p{comp(rng), comp(rng), comp(rng)};
        const Vec3 q{comp(rng), comp(rng), comp(rng)};
        const double E = energy(rng);
        const double e1 = eps(p, 1.0), e2 = eps(q, 1.0);
        bool near_pole = false;
        for (double pole : {e1 + e2, e1 - e2, -e1 + e2, -e1 - e2})
            near_pole |= std::abs(E - pole) < 1e-3;
        if (near_pole)
            continue;
        ++accepted;
        const double rational = l2(p, q, E, 1.0, 1.0).value;
        const double sum = l2_pole_sum(p, q, E, 1.0, 1.0);
        worst_rel = std::max(worst_rel,
                             std::abs(rational - sum) / std::max(1.0, std::abs(sum)));
    }
    return {"l2_rational_vs_pole_sum", worst_rel <= 1e-12, worst(worst_rel)};
}

CheckResult check_l2_antisymmetry(unsigned seed) {
    std::mt19937 rng(seed + 2);
    std::uniform_real_distribution<double> comp(-2.0, 2.0);
    std::uniform_real_distribution<double> energy(0.1, 6.0);

    double worst_rel = 0.0;
    int accepted = 0;
    while (accepted < 100) {
        const Vec3 p{comp(rng), comp(rng), comp(rng)};
        const Vec3 q{comp(rng), comp(rng), comp(rng)};
        const double E = energy(rng);
        const double e1 = eps(p, 1.0), e2 = eps(q, 1.0);
        bool near_pole = false;
        for (double pole : {e1 + e2, e1 - e2, -e1 + e2, -e1 - e2})
            near_pole |= std::abs(std::abs(E) - std::abs(pole)) < 1e-3;
        if (near_pole)
            continue;
        ++accepted;
        const double plus = l2(p, q, E, 1.0, 1.0).value;
        const double minus = l2(p, q, -E, 1.0, 1.0).value;
        worst_rel = std::max(worst_rel, std::abs(plus + minus) /
                                            std::max(1.0, std::abs(plus)));
    }
    return {"l2_antisymmetry", worst_rel <= 1e-12, worst(worst_rel)};
}

CheckResult check_l2_residues(unsigned seed) {
    std::mt19937 rng(seed + 3);
    std::uniform_real_distribution<double> comp(-2.0, 2.0);

    double worst_rel = 0.0;
    bool all_positive = true;
    int accepted = 0;
    while (accepted < 100) {
        const Vec3 p{comp(rng), comp(rng), comp(rng)};
        const Vec3 q{comp(rng), comp(rng), comp(rng)};
        const double e1 = eps(p, 1.0), e2 = eps(q, 1.0);
        // Distinct, well-separated poles so the numeric limit is clean.
        if (std::abs(e1 - e2) < 5e-2)
            continue;
        ++accepted;
        const double analytic = 1.0 / (e1 * e2);
        for (const auto& entry : l2_residues(p, q, 1.0, 1.0).entries) {
            all_positive &= entry.residue > 0.0;
            worst_rel = std::max(worst_rel,
                                 std::abs(entry.residue - analytic) / analytic);
        }
    }
    return {"l2_residues_positive_equal", all_positive && worst_rel <= 1e-6,
            worst(worst_rel)};
}

CheckResult check_solve_f() {
    // Residual bound, exactness at g=0, uniqueness from distinct starts.
    const Vec3 s{0.7, -0.3, 0.4};

    const auto at_rest = solve_f(s, Vec3{}, 1.0, 1.0);
    const double rest_dev = (at_rest.f - s).norm();

    const Vec3 g{0.05, 0.02, -0.04};
    const auto a = solve_f(s, g, 1.0, 1.0, s);
    const auto b = solve_f(s, g, 1.0, 1.0, s - g);
    const double start_dev = (a.f - b.f).norm();

    const bool ok = rest_dev <= 1e-14 && a.residual <= 1e-12 &&
                    b.residual <= 1e-12 && start_dev <= 1e-10;
    return {"solve_f_residual_uniqueness", ok, worst(std::max(rest_dev, start_dev))};
}

CheckResult check_expansion_order() {
    // Identity residuals must vanish at least as fast as |g|^3. The leading
    // residual carries a factor s.g, so g must not be orthogonal to s.
    const Vec3 s{1.0, 0.0, 0.0};
    const Vec3 dir = (1.0 / Vec3{0.3, 0.1, -0.2}.norm()) * Vec3{0.3, 0.1, -0.2};
    std::vector<double> gs, residuals;
    for (int i = 0; i < 10; ++i) {
        const double gmag = 1e-3 * std::pow(100.0, i / 9.0);
        const Vec3 g = gmag * dir;
        auto sample = solve_f(s, g, 1.0, 1.0);
        const auto ids = expansion_identities(sample, 1.0);
        gs.push_back(gmag);
        residuals.push_back(std::max({ids[0], ids[1], ids[2], 1e-300}));
    }
    const double slope = log_log_slope(gs, residuals);
    std::ostringstream os;
    os << "slope " << slope;
    return {"expansion_identity_order", slope >= 2.7, os.str()};
}

} // namespace

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<CheckResult> run_all_checks(const CheckOptions& options) {
    std::vector<CheckResult> results;
    results.push_back(check_quadrature_vs_closed_forms());
    results.push_back(check_fourier_lap2(options.perturb));
    results.push_back(check_lap2_contact_term());
    results.push_back(check_cubic_vs_bisection(options.seed));
    results.push_back(check_l2_rational_vs_sum(options.seed));
    results.push_back(check_l2_antisymmetry(options.seed));
    results.push_back(check_l2_residues(options.seed));
    results.push_back(check_solve_f());
    results.push_back(check_expansion_order());
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed)
            return false;
    return true;
}

} // namespace epb
