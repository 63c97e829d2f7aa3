#pragma once

#include <array>
#include <cmath>

namespace epb {

/// 3-momentum in units of m*c (dimensionless).
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double norm2() const noexcept { return x * x + y * y + z * z; }
    double norm() const noexcept { return std::sqrt(norm2()); }
    double dot(const Vec3& o) const noexcept { return x * o.x + y * o.y + z * o.z; }

    Vec3 operator+(const Vec3& o) const noexcept { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const noexcept { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double c) const noexcept { return {c * x, c * y, c * z}; }
    Vec3 operator-() const noexcept { return {-x, -y, -z}; }
};

inline Vec3 operator*(double c, const Vec3& v) noexcept { return v * c; }

/// Relativistic single-particle energy sqrt(mass^2 + |p|^2).
double eps(const Vec3& p, double mass);

struct PropagatorValue {
    double value = 0.0;
    double pole_distance = 0.0;  // distance from E to the nearest pole
};

/// Free two-fermion equal-time propagator in momentum space: the common
/// prefactor m1*m2/(eps1*eps2) times a sum of four simple poles at
/// E = +-eps1 +- eps2, all with unit coefficient. Evaluated in the closed
/// rational form; singular within a guard band of 1e-9 around each pole.
PropagatorValue l2(const Vec3& p, const Vec3& q, double E, double m1, double m2);

/// The same value from the explicit four-pole sum. Kept separate so the
/// algebraic identity between the two forms can be checked.
double l2_pole_sum(const Vec3& p, const Vec3& q, double E, double m1, double m2);

struct PoleResidue {
    double pole_location = 0.0;
    double residue = 0.0;
};

struct ResidueTable {
    std::array<PoleResidue, 4> entries;   // sorted by pole location, descending
    bool degenerate = false;              // eps1 == eps2: double pole at E = 0
};

/// Pole locations and residues of l2, extracted numerically via
/// lim_{E->E0} (E - E0) * L2 with Richardson extrapolation. The analytic
/// amplitude is m1*m2/(eps1*eps2) for every pole.
ResidueTable l2_residues(const Vec3& p, const Vec3& q, double m1, double m2);

struct KinematicsSample {
    Vec3 s, g, f;
    double residual = 0.0;
    std::array<double, 3> identity_residuals{};  // filled by expansion_identities
};

/// Solve the relative-momentum constraint
///   f = s - g * eps2(f) / (eps2(f) + eps1(f + g))
/// by damped fixed-point iteration with a Newton fallback on the 3-vector
/// residual. Converged residual <= 1e-12, else convergence_error.
KinematicsSample solve_f(const Vec3& s, const Vec3& g, double m1, double m2);

/// Same, from an explicit starting point (used to verify uniqueness of the
/// fixed point within the search region).
KinematicsSample solve_f(const Vec3& s, const Vec3& g, double m1, double m2,
                         const Vec3& initial_guess);

/// Small-g expansion of the constraint solution, through second order:
///   f = s - g/2 + g (s.g) / (4 eps(s)^2)
/// Equal masses only; the solver must match this to O(g^3).
Vec3 f_expansion(const Vec3& s, const Vec3& g, double mass);

/// Absolute residuals of the three equal-mass kinematic identities relating
/// eps(f+g), eps(f) and eps(s); each scales as O(g^3) as g -> 0. The sample
/// is updated in place and the residuals returned.
std::array<double, 3> expansion_identities(KinematicsSample& sample, double mass);

} // namespace epb
