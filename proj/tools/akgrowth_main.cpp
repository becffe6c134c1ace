// Command-line front end: load a scenario file, validate it, run the
// feasibility checks and either solver, and emit plot-ready CSV tables.
//
// Exit codes: 0 success, 1 usage/parse error, 2 validation failure,
// 3 numerical failure.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "akgrowth/akgrowth.hpp"

namespace {

using namespace akgrowth;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_validation = 2;
constexpr int exit_numerical = 3;

struct SolverOverrides {
    std::size_t modes = 0;
    double horizon = 0.0;
    double fd_dt = 0.0;
    double fd_dx = -1.0;
};

void apply_overrides(Scenario& s, const SolverOverrides& o) {
    if (o.modes > 0) s.mode_cutoff = o.modes;
    if (o.horizon > 0.0) {
        const std::size_t steps = s.time_mesh.size() < 2 ? 100 : s.time_mesh.size() - 1;
        s.horizon = o.horizon;
        s.time_mesh = uniform_time_mesh(o.horizon, steps);
    }
    if (o.fd_dt > 0.0) s.tolerances.fd_dt = o.fd_dt;
    if (o.fd_dx >= 0.0) s.tolerances.fd_dx = o.fd_dx;
}

std::ofstream open_csv(const std::filesystem::path& dir, const std::string& name) {
    std::ofstream out(dir / name, std::ios::binary);  // binary: identical bytes everywhere
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    return out;
}

void write_field_csv(std::ostream& out, const SpaceTimeField& field, const Scenario& s,
                     const char* value_name, bool derived) {
    out << "t,x," << value_name;
    if (derived) out << ",y,tau,s";
    out << "\n";
    for (std::size_t j = 0; j < field.times.size(); ++j) {
        const double t = field.times[j];
        SpatialProfile tau = derived ? trade_balance(field, j) : SpatialProfile::constant(4, 0.0);
        const double a = derived ? s.technology.rate(t) : 0.0;
        for (std::size_t i = 0; i < field.grid_size; ++i) {
            const double x = two_pi * static_cast<double>(i) / static_cast<double>(field.grid_size);
            out << format_double(t) << ',' << format_double(x) << ','
                << format_double(field.values[j][i]);
            if (derived) {
                // budget identity: output y = A k splits into consumption,
                // trade balance tau = -k_xx, and saving s = k_t = y - c - tau
                const double y = a * field.values[j][i];
                const double saving = y - s.consumption.value(x, t) - tau[i];
                out << ',' << format_double(y) << ',' << format_double(tau[i]) << ','
                    << format_double(saving);
            }
            out << "\n";
        }
    }
}

void write_trade_balance_csv(std::ostream& out, const SpaceTimeField& field) {
    out << "t,x,tau\n";
    for (std::size_t j = 0; j < field.times.size(); ++j) {
        const SpatialProfile tau = trade_balance(field, j);
        for (std::size_t i = 0; i < field.grid_size; ++i)
            out << format_double(field.times[j]) << ','
                << format_double(tau.grid_point(i)) << ',' << format_double(tau[i]) << "\n";
    }
}

void write_feasibility_csv(std::ostream& out, const FeasibilityReport& rep, double tol) {
    auto verdict = [](bool ok) { return ok ? "pass" : "fail"; };
    out << "check,verdict,margin\n";
    out << "theorem1_concavity," << verdict(rep.theorem1.concavity_ok) << ','
        << format_double(tol - rep.theorem1.spatial_range) << "\n";
    out << "theorem1_bound," << verdict(rep.theorem1.bound_ok) << ','
        << format_double(rep.theorem1.margin) << "\n";
    out << "theorem2_bound," << verdict(rep.theorem2.bound_ok) << ','
        << format_double(rep.theorem2.margin) << "\n";
    out << "footnote_decay," << verdict(rep.footnote.discounted_c_vanishes) << ','
        << format_double(-rep.footnote.fitted_rate) << "\n";
}

void write_diagnostics_csv(std::ostream& out, const ConvergenceDiagnostics& diag,
                           const std::vector<double>* disagreement) {
    out << "t,sup_deviation,spatial_inequality,predicted_limit";
    if (disagreement) out << ",solver_disagreement";
    out << "\n";
    const double nan = std::nan("");
    for (std::size_t j = 0; j < diag.times.size(); ++j) {
        const double dev = j < diag.sup_deviation.size() ? diag.sup_deviation[j] : nan;
        const double lim = diag.predicted_limit ? *diag.predicted_limit : nan;
        out << format_double(diag.times[j]) << ',' << format_double(dev) << ','
            << format_double(diag.spatial_inequality[j]) << ',' << format_double(lim);
        if (disagreement) out << ',' << format_double((*disagreement)[j]);
        out << "\n";
    }
}

int report_violations(const std::vector<Violation>& violations) {
    std::cerr << "scenario is invalid:\n";
    for (const auto& v : violations) std::cerr << "  [" << v.where << "] " << v.message << "\n";
    return exit_validation;
}

struct RunRequest {
    std::string scenario_path;
    std::string solver = "spectral";
    std::set<std::string> outputs{"field", "detrended", "feasibility", "diagnostics"};
    std::string out_dir = "out";
    bool derived = false;
    SolverOverrides overrides;
};

int run_scenario(const Scenario& scenario, const RunRequest& req,
                 const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);

    const FeasibilityReport report = check_feasibility(scenario);
    if (req.outputs.count("feasibility")) {
        auto out = open_csv(dir, "feasibility.csv");
        write_feasibility_csv(out, report, scenario.tolerances.feasibility);
    }
    if (!report.theorem2.bound_ok)
        std::cerr << "warning: sufficient condition for non-negativity does not hold "
                     "(margin "
                  << format_double(report.theorem2.margin)
                  << "); solving anyway, capital may go negative\n";

    const bool want_spectral = req.solver == "spectral" || req.solver == "both";
    const bool want_fd = req.solver == "fd" || req.solver == "both";

    SpaceTimeField spectral_field, fd_field;
    if (want_spectral) spectral_field = solve(scenario);
    if (want_fd) fd_field = solve_fd(scenario, FdConfig::from_scenario(scenario));

    const SpaceTimeField& primary = want_spectral ? spectral_field : fd_field;

    std::vector<double> disagreement;
    if (want_spectral && want_fd && fd_field.grid_size == spectral_field.grid_size) {
        disagreement.resize(primary.times.size());
        for (std::size_t j = 0; j < primary.times.size(); ++j) {
            double d = 0.0;
            for (std::size_t i = 0; i < primary.grid_size; ++i)
                d = std::max(d, std::fabs(spectral_field.values[j][i] - fd_field.values[j][i]));
            disagreement[j] = d;
        }
    }

    if (req.outputs.count("field")) {
        auto out = open_csv(dir, "field.csv");
        write_field_csv(out, primary, scenario, "k", req.derived);
        if (want_spectral && want_fd) {
            auto out_fd = open_csv(dir, "field_fd.csv");
            write_field_csv(out_fd, fd_field, scenario, "k", false);
        }
    }
    if (req.outputs.count("detrended")) {
        auto out = open_csv(dir, "detrended.csv");
        write_field_csv(out, detrend(primary, scenario.technology), scenario, "h", false);
    }
    if (req.outputs.count("trade_balance")) {
        auto out = open_csv(dir, "trade_balance.csv");
        write_trade_balance_csv(out, primary);
    }
    if (req.outputs.count("diagnostics")) {
        const ConvergenceDiagnostics diag = convergence_report(primary, scenario);
        auto out = open_csv(dir, "diagnostics.csv");
        write_diagnostics_csv(out, diag, disagreement.empty() ? nullptr : &disagreement);
    }
    return exit_ok;
}

int cmd_run(const RunRequest& req) {
    Scenario scenario = load_scenario(req.scenario_path);
    apply_overrides(scenario, req.overrides);
    const auto violations = validate_scenario(scenario);
    if (!violations.empty()) return report_violations(violations);
    return run_scenario(scenario, req, req.out_dir);
}

int cmd_check(const std::string& path, const std::string& out_dir) {
    Scenario scenario = load_scenario(path);
    const auto violations = validate_scenario(scenario);
    if (!violations.empty()) return report_violations(violations);

    const FeasibilityReport report = check_feasibility(scenario);
    std::filesystem::create_directories(out_dir);
    auto out = open_csv(out_dir, "feasibility.csv");
    write_feasibility_csv(out, report, scenario.tolerances.feasibility);

    auto verdict = [](bool ok) { return ok ? "pass" : "fail"; };
    std::cout << "theorem1_concavity: " << verdict(report.theorem1.concavity_ok)
              << " (spatial range " << format_double(report.theorem1.spatial_range) << ")\n";
    std::cout << "theorem1_bound: " << verdict(report.theorem1.bound_ok) << " (margin "
              << format_double(report.theorem1.margin) << ")\n";
    std::cout << "theorem2_bound: " << verdict(report.theorem2.bound_ok) << " (margin "
              << format_double(report.theorem2.margin) << ", budget "
              << format_double(report.theorem2.budget) << ", floor "
              << format_double(report.theorem2.floor) << ")\n";
    std::cout << "footnote_decay: " << verdict(report.footnote.discounted_c_vanishes)
              << " (fitted rate " << format_double(report.footnote.fitted_rate) << ")\n";
    if (!report.theorem2.bound_ok)
        std::cout << "note: the condition is sufficient, not necessary -- "
                     "non-negativity is inconclusive, not ruled out\n";
    return exit_ok;
}

struct SweepParam {
    std::string section;
    std::string key;
    std::vector<double> values;
};

SweepParam parse_sweep_param(const std::string& text) {
    const auto eq = text.find('=');
    const auto dot = text.find('.');
    if (eq == std::string::npos || dot == std::string::npos || dot > eq)
        throw CLI::ValidationError("--param expects section.key=start:stop:count");
    SweepParam p;
    p.section = text.substr(0, dot);
    p.key = text.substr(dot + 1, eq - dot - 1);
    const auto spec = split(std::string_view(text).substr(eq + 1), ':');
    if (spec.size() != 3) throw CLI::ValidationError("--param expects start:stop:count");
    const double start = parse_double(spec[0]);
    const double stop = parse_double(spec[1]);
    const int count = static_cast<int>(parse_double(spec[2]));
    if (count < 1 || count > 10000) throw CLI::ValidationError("--param count out of range");
    for (int i = 0; i < count; ++i)
        p.values.push_back(count == 1 ? start
                                      : start + (stop - start) * static_cast<double>(i) /
                                                    static_cast<double>(count - 1));
    return p;
}

int cmd_sweep(const std::string& path, const std::vector<std::string>& param_specs,
              const RunRequest& base_req) {
    std::ifstream in(path);
    if (!in) throw ScenarioParseError("cannot open scenario file: " + path);
    const std::size_t slash = path.find_last_of('/');
    const std::string base_dir = slash == std::string::npos ? "" : path.substr(0, slash);
    const auto sections = scenario_io_detail::parse_sections(in);

    std::vector<SweepParam> params;
    for (const auto& spec : param_specs) params.push_back(parse_sweep_param(spec));
    if (params.empty()) throw CLI::ValidationError("sweep needs at least one --param");

    std::vector<std::size_t> index(params.size(), 0);
    std::size_t total = 1;
    for (const auto& p : params) total *= p.values.size();

    std::filesystem::create_directories(base_req.out_dir);
    auto summary = open_csv(base_req.out_dir, "sweep_summary.csv");
    summary << "run";
    for (const auto& p : params) summary << ',' << p.section << '.' << p.key;
    summary << ",theorem2_margin,min_k,final_spatial_inequality\n";

    for (std::size_t run = 0; run < total; ++run) {
        auto combo = sections;
        for (std::size_t pi = 0; pi < params.size(); ++pi) {
            auto& entry = combo[params[pi].section][params[pi].key];
            entry.value = format_double(params[pi].values[index[pi]]);
        }
        Scenario scenario = build_scenario(combo, base_dir);
        apply_overrides(scenario, base_req.overrides);
        const auto violations = validate_scenario(scenario);
        if (!violations.empty()) return report_violations(violations);

        char tag[32];
        std::snprintf(tag, sizeof tag, "run_%03zu", run);
        const std::filesystem::path dir = std::filesystem::path(base_req.out_dir) / tag;
        RunRequest req = base_req;
        const int rc = run_scenario(scenario, req, dir);
        if (rc != exit_ok) return rc;

        const FeasibilityReport rep = check_feasibility(scenario);
        const SpaceTimeField field = solve(scenario);
        const ConvergenceDiagnostics diag = convergence_report(field, scenario);
        summary << tag;
        for (std::size_t pi = 0; pi < params.size(); ++pi)
            summary << ',' << format_double(params[pi].values[index[pi]]);
        summary << ',' << format_double(rep.theorem2.margin) << ','
                << format_double(field.min_value()) << ','
                << format_double(diag.spatial_inequality.back()) << "\n";

        for (std::size_t pi = 0; pi < params.size(); ++pi) {
            if (++index[pi] < params[pi].values.size()) break;
            index[pi] = 0;
        }
    }
    return exit_ok;
}

int cmd_gen(const std::string& preset, const std::string& out_path, std::uint64_t seed) {
    const Scenario scenario = preset_by_name(preset, seed);
    save_scenario(out_path, scenario);
    std::cout << "wrote " << out_path << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spatial AK growth dynamics: capital diffusion on the circle"};
    app.require_subcommand(1);

    RunRequest req;
    std::vector<std::string> outputs_arg;
    std::vector<std::string> param_specs;
    std::string preset = "benchmark";
    std::string gen_out = "scenario.akg";
    std::uint64_t seed = 1;

    auto add_common = [&](CLI::App* cmd, bool with_solver) {
        cmd->add_option("scenario", req.scenario_path, "scenario file")->required();
        cmd->add_option("--out", req.out_dir, "output directory");
        if (with_solver) {
            cmd->add_option("--solver", req.solver, "spectral | fd | both")
                ->check(CLI::IsMember({"spectral", "fd", "both"}));
            cmd->add_option("--outputs", outputs_arg,
                            "subset of field,detrended,trade_balance,diagnostics,feasibility")
                ->delimiter(',');
            cmd->add_flag("--derived", req.derived, "add y, tau, s columns to field.csv");
            cmd->add_option("--modes", req.overrides.modes, "override the mode cutoff");
            cmd->add_option("--horizon", req.overrides.horizon, "override the horizon");
            cmd->add_option("--fd-dt", req.overrides.fd_dt, "override the oracle time step");
            cmd->add_option("--fd-dx", req.overrides.fd_dx, "override the oracle grid spacing");
        }
    };

    CLI::App* run_cmd = app.add_subcommand("run", "solve a scenario and write CSV outputs");
    add_common(run_cmd, true);

    CLI::App* check_cmd = app.add_subcommand("check", "run only the feasibility checks");
    add_common(check_cmd, false);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "batch runs over a parameter grid");
    add_common(sweep_cmd, true);
    sweep_cmd->add_option("--param", param_specs,
                          "section.key=start:stop:count (repeatable, cartesian)");

    CLI::App* gen_cmd = app.add_subcommand("gen", "emit a preset scenario file");
    gen_cmd->add_option("--preset", preset,
                        "benchmark | single-mode | asymptotic-constant | asymptotic-varying | "
                        "violating | random");
    gen_cmd->add_option("--seed", seed, "seed for the random preset");
    gen_cmd->add_option("--out", gen_out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (!outputs_arg.empty()) req.outputs = {outputs_arg.begin(), outputs_arg.end()};
        if (run_cmd->parsed()) return cmd_run(req);
        if (check_cmd->parsed()) return cmd_check(req.scenario_path, req.out_dir);
        if (sweep_cmd->parsed()) return cmd_sweep(req.scenario_path, param_specs, req);
        if (gen_cmd->parsed()) return cmd_gen(preset, gen_out, seed);
    } catch (const ScenarioParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}
