// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in code next to each check.

#include "epbound/checks.hpp"
#include "epbound/constants.hpp"
#include "epbound/cubic_model.hpp"
#include "epbound/kinematics.hpp"
#include "epbound/roots.hpp"
#include "epbound/spectrum.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace {

using namespace epb;

int failures = 0;

void report(int criterion, const std::string& name, bool passed,
            const std::string& detail = "") {
    std::printf("%s  criterion %d: %s%s%s\n", passed ? "PASS" : "FAIL",
                criterion, name.c_str(), detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!passed)
        ++failures;
}

bool rel_close(double value, double reference, double tol) {
    return std::abs(value - reference) <= tol * std::abs(reference);
}

// --- criterion 1: closed-form solutions -----------------------------------

void criterion_closed_forms() {
    const double alpha = 1.0 / 137.0;
    const auto states = closed_form_states(alpha);

    bool ok = true;
    for (const auto& s : {states.positronium_1s, states.deep}) {
        ok &= std::abs(s.equation_residual_1(alpha)) <= 1e-12;
        ok &= std::abs(s.equation_residual_2(alpha)) <= 1e-12;
    }
    ok &= states.deep.E == -2.0 * alpha;
    ok &= states.deep.beta == 1.0;
    ok &= std::abs(states.positronium_1s.beta - 3.64963e-3) <= 1e-7;
    ok &= std::abs(states.positronium_1s.E - 1.99998668) <= 1e-7;

    std::ostringstream detail;
    detail << "beta1=" << states.positronium_1s.beta
           << " E1=" << states.positronium_1s.E;
    report(1, "closed-form states", ok, detail.str());
}

// --- criterion 2: variational minima --------------------------------------

struct Minima {
    BranchMinimum branch1;
    BranchMinimum branch2;
    CubicVariant variant;
};

Minima find_minima(CubicVariant variant) {
    const double alpha = 1.0 / 137.0;
    return {minimize_branch(alpha, variant, 1, 1e-4, 0.1),
            minimize_branch(alpha, variant, 2, 0.3, 1.1), variant};
}

bool minima_match(const Minima& m) {
    return rel_close(m.branch1.beta_star, 3.64769e-3, 1e-3) &&
           std::abs(m.branch1.E_star - 1.99998669) <= 2e-7 &&
           rel_close(m.branch2.beta_star, 0.725625, 1e-3) &&
           rel_close(m.branch2.E_star, -7.94318e-3, 1e-3);
}

Minima criterion_variational_minima() {
    const Minima derived = find_minima(CubicVariant::derived);
    if (minima_match(derived)) {
        std::ostringstream detail;
        detail << "derived variant: beta1=" << derived.branch1.beta_star
               << " E1=" << derived.branch1.E_star
               << " beta2=" << derived.branch2.beta_star
               << " E2=" << derived.branch2.E_star;
        report(2, "variational minima (derived cubic)", true, detail.str());
        return derived;
    }
    // Fallback: the printed coefficients might be the ones the figures used.
    const Minima printed = find_minima(CubicVariant::printed);
    report(2, "variational minima (printed cubic fallback)", minima_match(printed),
           "derived variant missed the reported minima");
    return printed;
}

// --- criterion 3: physical-unit reports -----------------------------------

void criterion_physical_units(const Minima& m) {
    const auto cfg = CouplingConfig::make(AlphaMode::paper);

    const auto s1 = eigenstate_report(m.branch1.E_star, m.branch1.beta_star,
                                      StateLabel::positronium_1s,
                                      SolveMethod::variational, m.variant, cfg);
    const auto s2 = eigenstate_report(m.branch2.E_star, m.branch2.beta_star,
                                      StateLabel::deep, SolveMethod::variational,
                                      m.variant, cfg);

    const bool ok = rel_close(s1.radius.value, 2.00054, 1e-3) &&
                    std::abs(s1.binding_energy.value - 6.80157) <= 0.01 &&
                    rel_close(s2.radius.value, 1.37812, 1e-3) &&
                    rel_close(s2.binding_energy.value /
                                  cfg.electron_rest_energy_eV,
                              2.00794, 1e-4);

    std::ostringstream detail;
    detail << "a1=" << s1.radius.value << " a_B, Eb1=" << s1.binding_energy.value
           << " eV, a2=" << s2.radius.value << " lambda_e, Eb2/mc2="
           << s2.binding_energy.value / cfg.electron_rest_energy_eV;
    report(3, "physical-unit reports", ok, detail.str());
}

// --- criterion 4: bound-system mass ---------------------------------------

void criterion_mass(const Minima& m) {
    const double alpha = 1.0 / 137.0;

    const double m1 = mass_derived(m.branch1.E_star, m.branch1.beta_star, alpha).m_s_over_m;
    const double m2 = mass_derived(m.branch2.E_star, m.branch2.beta_star, alpha).m_s_over_m;
    const double mt = mass_derived(2.0, 1e-6, alpha).m_s_over_m;

    const bool ok = rel_close(m1, 1.99995121, 1e-3) &&
                    rel_close(m2, -0.0097293 * 2.0, 2e-2) &&
                    rel_close(mt, 2.0, 1e-5);

    // Printed-expression values recorded, not required to match.
    const double p1 = mass_printed(m.branch1.E_star, m.branch1.beta_star, alpha).m_s_over_m;
    const double p2 = mass_printed(m.branch2.E_star, m.branch2.beta_star, alpha).m_s_over_m;

    std::ostringstream detail;
    detail << "derived: m1=" << m1 << " m2=" << m2 << " threshold=" << mt
           << "; printed (recorded, deviating): m1=" << p1 << " m2=" << p2;
    report(4, "bound-system mass", ok, detail.str());
}

// --- criterion 5: oracle equivalences -------------------------------------

void criterion_oracles() {
    const auto results = run_all_checks();
    bool ok = true;
    std::ostringstream detail;
    for (const auto& r : results) {
        ok &= r.passed;
        if (!r.passed)
            detail << r.name << " failed (" << r.detail << "); ";
    }
    report(5, "oracle equivalences", ok, detail.str());
}

// --- criterion 6: kinematics ----------------------------------------------

void criterion_kinematics() {
    const Vec3 s{1, 0, 0};

    const auto rest = solve_f(s, Vec3{}, 1.0, 1.0);
    bool ok = (rest.f - s).norm() <= 1e-14;

    // Leading identity residual carries s.g; keep g non-orthogonal to s.
    const Vec3 dir = (1.0 / Vec3{0.3, 0.1, -0.2}.norm()) * Vec3{0.3, 0.1, -0.2};
    std::vector<double> gs, residuals;
    for (int i = 0; i < 10; ++i) {
        const double gmag = 1e-3 * std::pow(100.0, i / 9.0);
        auto sample = solve_f(s, gmag * dir, 1.0, 1.0);
        ok &= sample.residual <= 1e-12;
        const auto ids = expansion_identities(sample, 1.0);
        gs.push_back(gmag);
        residuals.push_back(std::max({ids[0], ids[1], ids[2], 1e-300}));
    }
    const double slope = log_log_slope(gs, residuals);
    ok &= slope >= 2.7;

    std::ostringstream detail;
    detail << "identity-residual slope " << slope;
    report(6, "relative-momentum kinematics", ok, detail.str());
}

// --- criterion 7: figure reproduction through the CLI ---------------------

void criterion_scan_csv() {
    const std::string cmd = std::string(EPBOUND_CLI_PATH) +
                            " scan --beta-min 1e-4 --beta-max 1.2 --steps 2000"
                            " --variant derived 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        report(7, "scan figure reproduction", false, "cannot run CLI");
        return;
    }
    std::string output;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        output.append(buf, n);
    const int status = pclose(pipe);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        report(7, "scan figure reproduction", false, "CLI scan failed");
        return;
    }

    std::vector<std::array<double, 4>> rows;  // beta, E1, E2, E3
    std::istringstream lines(output);
    std::string line;
    std::getline(lines, line);  // header
    while (std::getline(lines, line)) {
        std::array<double, 4> row{};
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &row[0], &row[1],
                        &row[2], &row[3]) == 4)
            rows.push_back(row);
    }

    bool ok = rows.size() == 2000;
    if (ok) {
        auto argmin = [&](int col) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < rows.size(); ++i)
                if (rows[i][col] < rows[best][col])
                    best = i;
            return best;
        };
        const std::size_t i1 = argmin(1);
        const std::size_t i2 = argmin(2);
        const std::size_t i3 = argmin(3);
        ok &= i1 > 0 && i1 + 1 < rows.size() &&
              rel_close(rows[i1][0], 3.64769e-3, 0.05) &&
              std::abs(rows[i1][1] - 1.99998669) <= 1e-6;
        ok &= i2 > 0 && i2 + 1 < rows.size() &&
              rel_close(rows[i2][0], 0.725625, 0.01) &&
              rel_close(rows[i2][2], -7.94318e-3, 1e-2);
        ok &= i3 == 0 || i3 + 1 == rows.size();  // no interior minimum for E3
    }
    std::ostringstream detail;
    detail << rows.size() << " rows";
    report(7, "scan figure reproduction", ok, detail.str());
}

} // namespace

int main() {
    criterion_closed_forms();
    const Minima minima = criterion_variational_minima();
    criterion_physical_units(minima);
    criterion_mass(minima);
    criterion_oracles();
    criterion_kinematics();
    criterion_scan_csv();

    std::printf("%s\n", failures == 0 ? "ALL ACCEPTANCE CRITERIA PASSED"
                                      : "ACCEPTANCE FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}
