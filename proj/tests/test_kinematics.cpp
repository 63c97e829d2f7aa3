#include "epbound/kinematics.hpp"

#include "epbound/checks.hpp"
#include "epbound/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace epb;

TEST_CASE("single-particle energy") {
    CHECK(eps({0, 0, 0}, 1.0) == 1.0);
    CHECK(eps({0, 0, 1}, 1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(eps({3, 0, 4}, 1.0) == doctest::Approx(std::sqrt(26.0)).epsilon(1e-15));
    CHECK_THROWS_AS(eps({1, 0, 0}, 0.0), std::domain_error);
}

TEST_CASE("eps(p) >= m with equality only at rest") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> comp(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const Vec3 p{comp(rng), comp(rng), comp(rng)};
        const double e = eps(p, 1.3);
        CHECK(e >= 1.3);
        if (p.norm2() > 0)
            CHECK(e > 1.3);
    }
}

TEST_CASE("propagator at rest") {
    // At p=q=0, m=1 the poles sit at {2, 0, 0, -2}; at E=1 the four pole
    // terms sum to -1 + 1 + 1 + 1/3 = 4/3.
    const auto v = l2({0, 0, 0}, {0, 0, 0}, 1.0, 1.0, 1.0);
    CHECK(v.value == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(v.pole_distance == doctest::Approx(1.0).epsilon(1e-15));

    CHECK(l2_pole_sum({0, 0, 0}, {0, 0, 0}, 1.0, 1.0, 1.0) ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("propagator rational form equals pole sum away from poles") {
    const Vec3 p{0, 0, 0}, q{0, 0, 0};
    const double rational = l2(p, q, 4.0, 1.0, 1.0).value;
    const double sum = l2_pole_sum(p, q, 4.0, 1.0, 1.0);
    CHECK(rational == doctest::Approx(sum).epsilon(1e-12));
}

TEST_CASE("near-pole guard") {
    CHECK_THROWS_AS(l2({0, 0, 0}, {0, 0, 0}, 2.0 + 1e-10, 1.0, 1.0),
                    pole_proximity_error);
    try {
        l2({0, 0, 0}, {0, 0, 0}, 2.0 + 1e-10, 1.0, 1.0);
    } catch (const pole_proximity_error& e) {
        CHECK(e.pole() == doctest::Approx(2.0));
    }
}

TEST_CASE("residues: degenerate rest case") {
    const auto table = l2_residues({0, 0, 0}, {0, 0, 0}, 1.0, 1.0);
    CHECK(table.degenerate);
    CHECK(table.entries[0].pole_location == doctest::Approx(2.0));
    CHECK(table.entries[3].pole_location == doctest::Approx(-2.0));
    CHECK(table.entries[1].pole_location == doctest::Approx(0.0));
    for (const auto& e : table.entries)
        CHECK(e.residue == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("residues: split poles") {
    // p=(1,0,0), q=0: poles at +-(sqrt(2)+-1), residues all 1/sqrt(2).
    const auto table = l2_residues({1, 0, 0}, {0, 0, 0}, 1.0, 1.0);
    CHECK_FALSE(table.degenerate);
    const double s2 = std::sqrt(2.0);
    CHECK(table.entries[0].pole_location == doctest::Approx(s2 + 1).epsilon(1e-14));
    CHECK(table.entries[1].pole_location == doctest::Approx(s2 - 1).epsilon(1e-14));
    CHECK(table.entries[2].pole_location == doctest::Approx(1 - s2).epsilon(1e-14));
    CHECK(table.entries[3].pole_location == doctest::Approx(-s2 - 1).epsilon(1e-14));
    for (const auto& e : table.entries) {
        CHECK(e.residue > 0.0);
        CHECK(e.residue == doctest::Approx(1.0 / s2).epsilon(1e-8));
    }
}

TEST_CASE("solve_f: g=0 returns s exactly") {
    const Vec3 s{1, 0, 0};
    const auto sample = solve_f(s, {0, 0, 0}, 1.0, 1.0);
    CHECK(sample.f.x == s.x);
    CHECK(sample.f.y == s.y);
    CHECK(sample.f.z == s.z);
    CHECK(sample.residual <= 1e-14);
}

TEST_CASE("solve_f: symmetric split at s=0") {
    const Vec3 g{0, 0, 0.3};
    const auto sample = solve_f({0, 0, 0}, g, 1.0, 1.0);
    CHECK(sample.f.z == doctest::Approx(-0.15).epsilon(1e-12));
    CHECK(sample.residual <= 1e-12);
}

TEST_CASE("solve_f matches the small-g expansion to O(g^3)") {
    const Vec3 s{1, 0, 0};
    std::vector<double> gs, errs, errs_wrong;
    for (int i = 0; i < 8; ++i) {
        const double gmag = 1e-3 * std::pow(50.0, i / 7.0);
        const Vec3 g{gmag / std::sqrt(2.0), 0, gmag / std::sqrt(2.0)};
        const auto sample = solve_f(s, g, 1.0, 1.0);

        const Vec3 predicted = f_expansion(s, g, 1.0);
        gs.push_back(gmag);
        errs.push_back(std::max((sample.f - predicted).norm(), 1e-300));

        // Alternative reading of the quadratic term denominator,
        // 4 eps(s) |s|^2 instead of 4 eps(s)^2: must NOT fit at third order.
        const double es = eps(s, 1.0);
        const Vec3 wrong = s - 0.5 * g + g * (s.dot(g) / (4.0 * es * s.norm2()));
        errs_wrong.push_back(std::max((sample.f - wrong).norm(), 1e-300));
    }
    CHECK(log_log_slope(gs, errs) >= 2.7);
    CHECK(log_log_slope(gs, errs_wrong) < 2.5);
}

TEST_CASE("solve_f rejects |g| beyond the bracket assumption") {
    CHECK_THROWS_AS(solve_f({0, 0, 0}, {0, 0, 2.5}, 1.0, 1.0), std::domain_error);
}

TEST_CASE("expansion identities") {
    const Vec3 s{1, 0, 0};

    auto at_rest = solve_f(s, {0, 0, 0}, 1.0, 1.0);
    for (double r : expansion_identities(at_rest, 1.0))
        CHECK(r == 0.0);

    auto small = solve_f(s, {0, 0, 1e-3}, 1.0, 1.0);
    for (double r : expansion_identities(small, 1.0))
        CHECK(r <= 1e-8);
}

TEST_CASE("unequal masses are supported in evaluation") {
    const auto v = l2({0.2, 0, 0}, {0, 0.1, 0}, 0.5, 1.0, 1836.0);
    CHECK(std::isfinite(v.value));
    const auto sample = solve_f({0.4, 0, 0}, {0, 0, 0.1}, 1.0, 1836.0);
    CHECK(sample.residual <= 1e-12);
}
