#include "epbound/kinematics.hpp"

#include "epbound/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace epb {

namespace {

constexpr double kPoleGuard = 1e-9;
constexpr double kSolveTol = 1e-12;
// Iterate past the contract tolerance while progress is cheap, so the
// identity diagnostics are not limited by solver noise.
constexpr double kSolveTarget = 1e-15;
constexpr int kMaxIterations = 200;

std::array<double, 4> pole_locations(double e1, double e2) {
    return {e1 + e2, e1 - e2, -e1 + e2, -e1 - e2};
}

double rational_form(double E, double e1, double e2) {
    const double E2 = E * E;
    const double s = e1 * e1 + e2 * e2;
    const double d = e1 * e1 - e2 * e2;
    return 4.0 * E * (E2 - s) / (E2 * E2 - 2.0 * E2 * s + d * d);
}

} // namespace

double eps(const Vec3& p, double mass) {
    if (!(mass > 0.0))
        throw std::domain_error("eps requires mass > 0");
    return std::sqrt(mass * mass + p.norm2());
}

PropagatorValue l2(const Vec3& p, const Vec3& q, double E, double m1, double m2) {
    const double e1 = eps(p, m1);
    const double e2 = eps(q, m2);

    double nearest = 0.0;
    double dist = std::numeric_limits<double>::infinity();
    for (double pole : pole_locations(e1, e2)) {
        if (std::abs(E - pole) < dist) {
            dist = std::abs(E - pole);
            nearest = pole;
        }
    }
    if (dist < kPoleGuard)
        throw pole_proximity_error(E, nearest);

    const double pref = m1 * m2 / (e1 * e2);
    return {pref * rational_form(E, e1, e2), dist};
}

double l2_pole_sum(const Vec3& p, const Vec3& q, double E, double m1, double m2) {
    const double e1 = eps(p, m1);
    const double e2 = eps(q, m2);
    const double pref = m1 * m2 / (e1 * e2);
    double sum = 0.0;
    for (double pole : pole_locations(e1, e2))
        sum += 1.0 / (E - pole);
    return pref * sum;
}

ResidueTable l2_residues(const Vec3& p, const Vec3& q, double m1, double m2) {
    const double e1 = eps(p, m1);
    const double e2 = eps(q, m2);
    const double pref = m1 * m2 / (e1 * e2);

    ResidueTable table;
    table.degenerate = std::abs(e1 - e2) <= 1e-12 * (e1 + e2);

    auto poles = pole_locations(e1, e2);
    std::sort(poles.begin(), poles.end(), std::greater<>());

    // lim_{E->E0} (E - E0) L2, offsets halved twice, Richardson to O(h^3).
    auto extract = [&](double pole) {
        const double h0 = 1e-4;
        auto g = [&](double h) { return h * pref * rational_form(pole + h, e1, e2); };
        const double a = 2.0 * g(h0 / 2) - g(h0);
        const double b = 2.0 * g(h0 / 4) - g(h0 / 2);
        return (4.0 * b - a) / 3.0;
    };

    for (int i = 0; i < 4; ++i) {
        const double pole = poles[i];
        const bool at_double_pole = table.degenerate && std::abs(pole) <= 1e-12 * (e1 + e2);
        // A simple-pole limit does not exist at the degenerate E=0 double
        // pole; report the analytic amplitude there instead.
        table.entries[i] = {pole, at_double_pole ? pref : extract(pole)};
    }
    return table;
}

namespace {

Vec3 constraint_map(const Vec3& f, const Vec3& s, const Vec3& g, double m1, double m2) {
    const double e2f = eps(f, m2);
    const double e1fg = eps(f + g, m1);
    return s - g * (e2f / (e2f + e1fg));
}

} // namespace

KinematicsSample solve_f(const Vec3& s, const Vec3& g, double m1, double m2) {
    return solve_f(s, g, m1, m2, s - 0.5 * g);
}

KinematicsSample solve_f(const Vec3& s, const Vec3& g, double m1, double m2,
                         const Vec3& initial_guess) {
    if (!(g.norm() < m1 + m2))
        throw std::domain_error("solve_f expects |g| < m1 + m2");

    Vec3 f = initial_guess;
    auto residual_vec = [&](const Vec3& v) { return v - constraint_map(v, s, g, m1, m2); };

    double res = residual_vec(f).norm();
    int iter = 0;

    // Damped fixed point; a contraction for moderate |g|.
    while (res > kSolveTarget && iter < 100) {
        f = f + 0.5 * (constraint_map(f, s, g, m1, m2) - f);
        res = residual_vec(f).norm();
        ++iter;
    }

    // Newton on the residual with a finite-difference Jacobian.
    while (res > kSolveTarget && iter < kMaxIterations) {
        const double h = 1e-7 * std::max(1.0, f.norm());
        const Vec3 r0 = residual_vec(f);
        double J[3][3];
        for (int j = 0; j < 3; ++j) {
            Vec3 fp = f, fm = f;
            (j == 0 ? fp.x : j == 1 ? fp.y : fp.z) += h;
            (j == 0 ? fm.x : j == 1 ? fm.y : fm.z) -= h;
            const Vec3 rp = residual_vec(fp);
            const Vec3 rm = residual_vec(fm);
            J[0][j] = (rp.x - rm.x) / (2 * h);
            J[1][j] = (rp.y - rm.y) / (2 * h);
            J[2][j] = (rp.z - rm.z) / (2 * h);
        }
        const double det =
            J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
            J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
            J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
        if (std::abs(det) < 1e-300)
            throw convergence_error("solve_f: singular Jacobian in Newton step", res);
        // Cramer's rule on the 3x3 system J * step = r0.
        auto det_with = [&](int col) {
            double M[3][3];
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    M[r][c] = J[r][c];
            M[0][col] = r0.x;
            M[1][col] = r0.y;
            M[2][col] = r0.z;
            return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                   M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                   M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
        };
        const Vec3 step{det_with(0) / det, det_with(1) / det, det_with(2) / det};
        f = f - step;
        res = residual_vec(f).norm();
        ++iter;
    }

    if (res > kSolveTol)
        throw convergence_error("solve_f: no convergence after 200 iterations", res);

    KinematicsSample sample;
    sample.s = s;
    sample.g = g;
    sample.f = f;
    sample.residual = res;
    return sample;
}

Vec3 f_expansion(const Vec3& s, const Vec3& g, double mass) {
    const double es = eps(s, mass);
    return s - 0.5 * g + g * (s.dot(g) / (4.0 * es * es));
}

std::array<double, 3> expansion_identities(KinematicsSample& sample, double mass) {
    const double efg = eps(sample.f + sample.g, mass);
    const double ef = eps(sample.f, mass);
    const double es = eps(sample.s, mass);
    const double g2 = sample.g.norm2();
    const double sg = sample.s.dot(sample.g);

    sample.identity_residuals = {
        std::abs(efg * ef - (es * es + 0.25 * g2)),
        std::abs(efg * efg + ef * ef - (2.0 * es * es + 0.5 * g2 + sg * sg / (es * es))),
        std::abs(efg * efg - ef * ef - 2.0 * sg),
    };
    return sample.identity_residuals;
}

} // namespace epb
