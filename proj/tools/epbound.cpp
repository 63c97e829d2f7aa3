// Command-line front end: solve / scan / mass / kinematics / check.
//
// Exit codes: 0 success, 1 usage or config error, 2 computational failure.

#include "epbound/checks.hpp"
#include "epbound/constants.hpp"
#include "epbound/cubic_model.hpp"
#include "epbound/errors.hpp"
#include "epbound/kinematics.hpp"
#include "epbound/roots.hpp"
#include "epbound/spectrum.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using epb::CouplingConfig;
using epb::CubicVariant;
using nlohmann::json;

constexpr const char* kToolVersion = "epbound 0.1.0";

// Honors SOURCE_DATE_EPOCH so output files can be made byte-reproducible.
std::string timestamp_utc() {
    std::time_t t = std::time(nullptr);
    if (const char* env = std::getenv("SOURCE_DATE_EPOCH"))
        t = static_cast<std::time_t>(std::strtoll(env, nullptr, 10));
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct GlobalOptions {
    std::string config_path;
    std::string alpha_mode;
    double custom_alpha = 0.0;
    double rest_energy_eV = epb::kElectronRestEnergyDefault_eV;
    bool alpha_set = false;
    bool rest_energy_set = false;
};

CouplingConfig build_config(const GlobalOptions& opt) {
    CouplingConfig cfg;
    if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in)
            throw std::invalid_argument("cannot open config file: " + opt.config_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        cfg = CouplingConfig::from_json_text(buffer.str());
    }
    if (!opt.alpha_mode.empty()) {
        epb::AlphaMode mode;
        if (opt.alpha_mode == "paper") mode = epb::AlphaMode::paper;
        else if (opt.alpha_mode == "codata") mode = epb::AlphaMode::codata;
        else if (opt.alpha_mode == "custom") mode = epb::AlphaMode::custom;
        else throw std::invalid_argument("unknown alpha mode: " + opt.alpha_mode);
        cfg = CouplingConfig::make(
            mode, opt.custom_alpha,
            opt.rest_energy_set ? opt.rest_energy_eV : cfg.electron_rest_energy_eV);
    } else if (opt.rest_energy_set) {
        cfg = CouplingConfig::make(cfg.alpha_mode, cfg.alpha, opt.rest_energy_eV);
    }
    return cfg;
}

json config_json(const CouplingConfig& cfg) {
    return {{"alpha_mode", epb::alpha_mode_name(cfg.alpha_mode)},
            {"alpha", cfg.alpha},
            {"electron_rest_energy_eV", cfg.electron_rest_energy_eV}};
}

json manifest_json(const std::string& command, const CouplingConfig& cfg,
                   const json& input_echo) {
    return {{"command", command},
            {"config", config_json(cfg)},
            {"tool_version", kToolVersion},
            {"timestamp", timestamp_utc()},
            {"input", input_echo}};
}

json quantity_json(const epb::PhysicalQuantity& q) {
    return {{"value", q.value}, {"unit", epb::unit_name(q.unit)}};
}

json eigenstate_json(const epb::Eigenstate& s) {
    json j = {{"label", epb::label_name(s.label)},
              {"method", epb::method_name(s.method)},
              {"E", s.E},
              {"beta", s.beta},
              {"binding_energy", quantity_json(s.binding_energy)},
              {"radius", quantity_json(s.radius)}};
    j["variant"] = s.variant ? epb::variant_name(*s.variant) : "not_applicable";
    return j;
}

std::vector<CubicVariant> parse_variants(const std::string& flag) {
    if (flag == "printed") return {CubicVariant::printed};
    if (flag == "derived") return {CubicVariant::derived};
    if (flag == "both") return {CubicVariant::printed, CubicVariant::derived};
    throw std::invalid_argument("unknown variant: " + flag);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot open output file: " + path);
    out << text << "\n";
}

// Brackets for the two interior minima of the root branches.
constexpr double kBranch1Lo = 1e-4, kBranch1Hi = 0.1;
constexpr double kBranch2Lo = 0.3, kBranch2Hi = 1.1;

int cmd_solve(const CouplingConfig& cfg, const std::string& variant_flag,
              const std::string& out_path) {
    const auto variants = parse_variants(variant_flag);

    json results = json::array();
    int exit_code = 0;

    const auto closed = epb::closed_form_states(cfg.alpha);
    results.push_back(eigenstate_json(epb::eigenstate_report(
        closed.positronium_1s.E, closed.positronium_1s.beta,
        epb::StateLabel::closed_form_1s, epb::SolveMethod::closed_form,
        std::nullopt, cfg)));
    results.push_back(eigenstate_json(epb::eigenstate_report(
        closed.deep.E, closed.deep.beta, epb::StateLabel::closed_form_deep,
        epb::SolveMethod::closed_form, std::nullopt, cfg)));

    for (auto variant : variants) {
        struct Job {
            int branch;
            double lo, hi;
            epb::StateLabel label;
        };
        for (const Job& job : {Job{1, kBranch1Lo, kBranch1Hi, epb::StateLabel::positronium_1s},
                               Job{2, kBranch2Lo, kBranch2Hi, epb::StateLabel::deep}}) {
            try {
                const auto minimum = epb::minimize_branch(cfg.alpha, variant,
                                                          job.branch, job.lo, job.hi);
                json entry = eigenstate_json(epb::eigenstate_report(
                    minimum.E_star, minimum.beta_star, job.label,
                    epb::SolveMethod::variational, variant, cfg));
                entry["minimization"] = {{"branch_index", minimum.branch_index},
                                         {"bracket", {minimum.bracket_lo, minimum.bracket_hi}},
                                         {"converged", minimum.converged}};
                results.push_back(std::move(entry));
            } catch (const std::exception& e) {
                results.push_back({{"label", epb::label_name(job.label)},
                                   {"variant", epb::variant_name(variant)},
                                   {"error", e.what()}});
                exit_code = 2;
            }
        }
    }

    json doc = {{"manifest", manifest_json("solve", cfg, {{"variant", variant_flag}})},
                {"results", results}};
    write_output(out_path, doc.dump(2));
    return exit_code;
}

int cmd_scan(const CouplingConfig& cfg, const std::string& variant_flag,
             double beta_min, double beta_max, int steps, bool linear,
             const std::string& out_path) {
    const auto variants = parse_variants(variant_flag);
    if (variants.size() != 1)
        throw std::invalid_argument("scan takes a single variant (printed or derived)");
    const CubicVariant variant = variants.front();

    std::vector<double> grid;
    if (steps == 1) {
        if (beta_min != beta_max)
            throw std::invalid_argument("steps=1 requires beta-min == beta-max");
        grid.push_back(beta_min);
    } else if (linear || beta_min == 0.0) {
        for (int i = 0; i < steps; ++i)
            grid.push_back(beta_min + (beta_max - beta_min) * i / (steps - 1));
    } else {
        grid = epb::make_log_grid(beta_min, beta_max, steps);
    }

    const auto table = epb::branch_scan(cfg.alpha, variant, grid);

    std::ostringstream csv;
    csv << "beta,E1,E2,E3,real_count,variant\n";
    char buf[64];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        csv << buf;
    };
    for (const auto& row : table.points) {
        put(row.beta);
        for (int i = 0; i < 3; ++i) {
            csv << ",";
            if (i < row.real_count)
                put(row.roots[i]);
        }
        csv << "," << row.real_count << "," << epb::variant_name(variant) << "\n";
    }

    std::string text = csv.str();
    text.pop_back();  // write_output appends the final newline
    write_output(out_path, text);
    return 0;
}

int cmd_mass(const CouplingConfig& cfg, const std::string& state_flag,
             const std::string& variant_flag, std::optional<double> custom_E,
             std::optional<double> custom_beta, const std::string& out_path) {
    const auto variants = parse_variants(variant_flag);

    std::vector<epb::Eigenstate> states;
    int exit_code = 0;

    if (custom_E || custom_beta) {
        if (!custom_E || !custom_beta)
            throw std::invalid_argument("--E and --beta must be given together");
        states.push_back(epb::eigenstate_report(*custom_E, *custom_beta,
                                                epb::StateLabel::positronium_1s,
                                                epb::SolveMethod::variational,
                                                std::nullopt, cfg));
        states.back().label = *custom_E > 0 ? epb::StateLabel::positronium_1s
                                            : epb::StateLabel::deep;
    } else {
        for (auto variant : variants) {
            if (state_flag == "1s" || state_flag == "all") {
                const auto m1 = epb::minimize_branch(cfg.alpha, variant, 1,
                                                     kBranch1Lo, kBranch1Hi);
                states.push_back(epb::eigenstate_report(
                    m1.E_star, m1.beta_star, epb::StateLabel::positronium_1s,
                    epb::SolveMethod::variational, variant, cfg));
            }
            if (state_flag == "deep" || state_flag == "all") {
                const auto m2 = epb::minimize_branch(cfg.alpha, variant, 2,
                                                     kBranch2Lo, kBranch2Hi);
                states.push_back(epb::eigenstate_report(
                    m2.E_star, m2.beta_star, epb::StateLabel::deep,
                    epb::SolveMethod::variational, variant, cfg));
            }
        }
    }

    json results = json::array();
    for (const auto& s : states) {
        json entry = {{"state", epb::label_name(s.label)},
                      {"E", s.E},
                      {"beta", s.beta}};
        if (s.variant)
            entry["cubic_variant"] = epb::variant_name(*s.variant);
        try {
            entry["mass_printed_over_m"] =
                epb::mass_printed(s.E, s.beta, cfg.alpha).m_s_over_m;
            entry["mass_derived_over_m"] =
                epb::mass_derived(s.E, s.beta, cfg.alpha).m_s_over_m;
            entry["projection_identity_residual"] =
                epb::projection_identity_residual(s.E, s.beta, cfg.alpha);
        } catch (const std::exception& e) {
            entry["error"] = e.what();
            exit_code = 2;
        }
        results.push_back(std::move(entry));
    }

    const auto report = epb::mass_discrepancy_report(states, cfg);
    json report_json = {{"summary", report.summary},
                        {"cubic_c1_differences", report.cubic_c1_differences}};
    json rows = json::array();
    for (const auto& row : report.rows) {
        rows.push_back({{"state", row.state},
                        {"E", row.E},
                        {"beta", row.beta},
                        {"mass_printed_over_m", row.mass_printed_over_m},
                        {"mass_derived_over_m", row.mass_derived_over_m},
                        {"abs_difference", row.abs_difference},
                        {"rel_difference", row.rel_difference},
                        {"printed_matches_reference", row.printed_matches_reference},
                        {"derived_matches_reference", row.derived_matches_reference}});
    }
    report_json["rows"] = std::move(rows);

    json doc = {{"manifest", manifest_json("mass", cfg,
                                           {{"state", state_flag},
                                            {"variant", variant_flag}})},
                {"results", results},
                {"discrepancy_report", report_json}};
    write_output(out_path, doc.dump(2));
    return exit_code;
}

epb::Vec3 parse_vec3(const std::string& text) {
    epb::Vec3 v;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf", &v.x, &v.y, &v.z) != 3)
        throw std::invalid_argument("expected a vector as x,y,z: " + text);
    return v;
}

int cmd_kinematics(const CouplingConfig& cfg, const std::string& s_flag,
                   const std::string& g_flag, double m1, double m2,
                   const std::string& out_path) {
    const epb::Vec3 s = parse_vec3(s_flag);
    const epb::Vec3 g = parse_vec3(g_flag);

    int exit_code = 0;
    json result;
    try {
        auto sample = epb::solve_f(s, g, m1, m2);
        if (m1 == m2)
            epb::expansion_identities(sample, m1);
        result = {{"s", {sample.s.x, sample.s.y, sample.s.z}},
                  {"g", {sample.g.x, sample.g.y, sample.g.z}},
                  {"f", {sample.f.x, sample.f.y, sample.f.z}},
                  {"residual", sample.residual},
                  {"identity_residuals", sample.identity_residuals}};
    } catch (const epb::convergence_error& e) {
        result = {{"error", e.what()}, {"last_residual", e.last_residual()}};
        exit_code = 2;
    }

    json doc = {{"manifest", manifest_json("kinematics", cfg,
                                           {{"s", s_flag},
                                            {"g", g_flag},
                                            {"m1", m1},
                                            {"m2", m2}})},
                {"results", result}};
    write_output(out_path, doc.dump(2));
    return exit_code;
}

int cmd_check(const CouplingConfig& cfg, bool perturb, const std::string& out_path) {
    epb::CheckOptions options;
    options.perturb = perturb;
    const auto results = epb::run_all_checks(options);

    json checks = json::array();
    for (const auto& r : results)
        checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});

    const bool ok = epb::all_passed(results);
    json doc = {{"manifest", manifest_json("check", cfg, {{"perturb", perturb}})},
                {"all_passed", ok},
                {"checks", checks}};
    write_output(out_path, doc.dump(2));
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound-state solver for the non-Hamiltonian relativistic "
                 "electron-positron wave equation"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    GlobalOptions gopt;
    app.add_option("--config", gopt.config_path, "JSON config file");
    app.add_option("--alpha-mode", gopt.alpha_mode, "paper | codata | custom");
    app.add_option("--alpha", gopt.custom_alpha,
                   "fine-structure constant (alpha-mode=custom only)");
    app.add_option("--rest-energy-eV", gopt.rest_energy_eV,
                   "electron rest energy in eV")
        ->each([&](const std::string&) { gopt.rest_energy_set = true; });

    std::string out_path;
    app.add_option("-o,--out", out_path, "output file (default: stdout)");

    auto* solve = app.add_subcommand("solve", "closed-form and variational bound states");
    std::string solve_variant = "both";
    solve->add_option("--variant", solve_variant, "printed | derived | both");

    auto* scan = app.add_subcommand("scan", "root branches over a beta grid (CSV)");
    std::string scan_variant = "derived";
    double beta_min = 1e-4, beta_max = 1.2;
    int steps = 2000;
    bool linear = false;
    scan->add_option("--variant", scan_variant, "printed | derived");
    scan->add_option("--beta-min", beta_min, "grid start");
    scan->add_option("--beta-max", beta_max, "grid end");
    scan->add_option("--steps", steps, "grid points")->check(CLI::PositiveNumber);
    scan->add_flag("--linear", linear, "linear grid instead of log-spaced");

    auto* mass = app.add_subcommand("mass", "bound-system mass, both formulas");
    std::string mass_state = "all";
    std::string mass_variant = "both";
    std::optional<double> custom_E, custom_beta;
    mass->add_option("--state", mass_state, "1s | deep | all");
    mass->add_option("--variant", mass_variant, "printed | derived | both");
    mass->add_option("--E", custom_E, "custom dimensionless energy");
    mass->add_option("--beta", custom_beta, "custom trial exponent");

    auto* kin = app.add_subcommand("kinematics", "relative-momentum constraint solve");
    std::string s_flag = "0,0,0", g_flag = "0,0,0";
    double m1 = 1.0, m2 = 1.0;
    kin->add_option("--s", s_flag, "canonical momentum, x,y,z");
    kin->add_option("--g", g_flag, "total momentum, x,y,z");
    kin->add_option("--m1", m1, "first mass");
    kin->add_option("--m2", m2, "second mass");

    auto* check = app.add_subcommand("check", "run all oracle cross-validations");
    bool perturb = false;
    check->add_flag("--perturb", perturb,
                    "perturb an internal constant; the suite must then fail")
        ->group("");  // harness hook, hidden from help

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors are exit code 1
    }

    try {
        const CouplingConfig cfg = build_config(gopt);
        if (solve->parsed()) return cmd_solve(cfg, solve_variant, out_path);
        if (scan->parsed())
            return cmd_scan(cfg, scan_variant, beta_min, beta_max, steps, linear, out_path);
        if (mass->parsed())
            return cmd_mass(cfg, mass_state, mass_variant, custom_E, custom_beta, out_path);
        if (kin->parsed()) return cmd_kinematics(cfg, s_flag, g_flag, m1, m2, out_path);
        if (check->parsed()) return cmd_check(cfg, perturb, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
