// hwcm: command-line front end for scans, reductions and scenario runs.
#include "hwcm/errors.hpp"
#include "hwcm/harness/commands.hpp"
#include "hwcm/manifold/reduced_io.hpp"
#include "hwcm/util/config.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace hwcm;

namespace {

struct ParamFlags {
    double kappa = 1.5;
    double beta = 1e-3;
    int p = 1;
    int n = 16;

    void attach(CLI::App* app) {
        app->add_option("--kappa", kappa, "drift coefficient")->capture_default_str();
        app->add_option("--beta", beta, "hyper-diffusion (both fields)")->capture_default_str();
        app->add_option("--p", p, "hyper-diffusion order")->capture_default_str();
        app->add_option("--n", n, "lattice half-width (grid = 2n)")->capture_default_str();
    }
    PhysParams build(const nlohmann::json& config) const {
        PhysParams d;
        d.kappa = kappa;
        d.beta_phi = d.beta_rho = beta;
        d.p = p;
        d.n = n;
        return params_from_json(config.contains("params") ? config.at("params") : nlohmann::json::object(), d);
    }
};

ModeIndex parse_mode(const std::vector<int>& v) { return {v.at(0), v.at(1)}; }

std::string output_root(const std::string& fallback) {
    if (const char* env = std::getenv("HW_OUTPUT_DIR"); env && *env) return env;
    return fallback;
}

nlohmann::json load_config(const std::string& path) {
    if (path.empty()) return nlohmann::json::object();
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config file " + path);
    return nlohmann::json::parse(in);
}

Scenario resolve_scenario(const std::string& name, const nlohmann::json& config, int grid, long seed) {
    Scenario s = scenario_from_json(config, name.empty() ? Scenario{} : find_scenario(name));
    if (grid > 0) s = with_grid(s, grid);
    if (seed >= 0) s.initial.seed = static_cast<std::uint64_t>(seed);
    s.outputs = output_root(s.outputs);
    s.validate();
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Drift-wave spectral solver, stability scans and centre-manifold reduction"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config (scenario fields or {\"params\": ...})");

    ParamFlags pf;

    auto* scan = app.add_subcommand("scan", "max Re lambda against alpha, one curve per beta");
    pf.attach(scan);
    double a_min = 1e-8, a_max = 400.0;
    int a_count = 600;
    bool linear = false;
    std::vector<double> betas{1e-2, 5e-3, 1e-3};
    std::string scan_out;
    scan->add_option("--alpha-min", a_min)->capture_default_str();
    scan->add_option("--alpha-max", a_max)->capture_default_str();
    scan->add_option("--alpha-count", a_count)->capture_default_str()->check(CLI::PositiveNumber);
    scan->add_flag("--linear", linear, "linear alpha spacing (default logarithmic)");
    scan->add_option("--betas", betas, "beta list")->delimiter(',')->capture_default_str();
    scan->add_option("-o,--out", scan_out, "CSV path (default <output>/scan.csv)");

    auto* crit = app.add_subcommand("critical-alpha", "bisect Re lambda+ of one mode in alpha");
    pf.attach(crit);
    std::vector<int> mode{0, 1};
    std::vector<double> bracket{1.0, 1000.0};
    crit->add_option("--mode", mode, "KX,KY")->delimiter(',')->expected(2)->required();
    crit->add_option("--bracket", bracket, "LO,HI")->delimiter(',')->expected(2)->capture_default_str();

    auto* red = app.add_subcommand("reduce", "critical alpha, reduced system and coefficient report");
    pf.attach(red);
    std::string which = "alpha", red_json;
    red->add_option("--mode", mode, "KX,KY")->delimiter(',')->expected(2)->required();
    red->add_option("--bracket", bracket, "LO,HI")->delimiter(',')->expected(2)->capture_default_str();
    red->add_option("--suspend", which, "alpha | kappa | beta_phi | beta_rho")->capture_default_str();
    red->add_option("--json", red_json, "write the reduced system here");

    auto* run = app.add_subcommand("run", "integrate a named scenario");
    auto* cmp = app.add_subcommand("compare", "full vs reduced overlay for a scenario with a compare block");
    std::string scenario_name;
    int grid = 0;
    long seed = -1;
    double t_end = -1, budget = -1;
    for (auto* sub : {run, cmp}) {
        sub->add_option("--scenario", scenario_name, "registry name")->required();
        sub->add_option("--grid", grid, "grid points per side");
        sub->add_option("--seed", seed, "initial-condition seed");
        sub->add_option("--t-end", t_end, "override t_end");
        sub->add_option("--wall-budget", budget, "stop after this many seconds");
    }
    auto* list = app.add_subcommand("list", "print scenario names");

    CLI11_PARSE(app, argc, argv);

    try {
        const auto config = load_config(config_path);
        if (*scan) {
            std::vector<double> alphas;
            for (int i = 0; i < a_count; ++i) {
                const double f = a_count == 1 ? 0.0 : static_cast<double>(i) / (a_count - 1);
                alphas.push_back(linear ? a_min + (a_max - a_min) * f : a_min * std::pow(a_max / a_min, f));
            }
            const auto curves = scan_alpha(pf.build(config), alphas, betas);
            if (scan_out.empty()) {
                const auto root = output_root("runs");
                std::filesystem::create_directories(root);
                scan_out = root + "/scan.csv";
            }
            std::ofstream os(scan_out);
            write_scan_curves_csv(os, curves);
            for (const auto& c : curves) {
                std::cout << "beta=" << c.beta << " sign changes:";
                for (double a : sign_changes(c.rows)) std::cout << ' ' << a;
                std::cout << '\n';
            }
            std::cout << "wrote " << scan_out << '\n';
        } else if (*crit) {
            std::cout << std::setprecision(12)
                      << critical_alpha(parse_mode(mode), pf.build(config), bracket[0], bracket[1]) << '\n';
        } else if (*red) {
            const auto rep = reduce_at(parse_mode(mode), pf.build(config), bracket[0], bracket[1],
                                       suspended_param_from_string(which));
            print_report(std::cout, rep);
            if (!red_json.empty()) write_reduced_json(red_json, rep.system);
        } else if (*run || *cmp) {
            Scenario s = resolve_scenario(scenario_name, config, grid, seed);
            if (t_end > 0) s.t_end = t_end;
            if (budget > 0) s.wall_budget_seconds = budget;
            if (*run) {
                const auto res = run_scenario(s);
                std::cout << "stop: " << res.record.stop_reason << "  steps: " << res.record.steps
                          << "  wall: " << res.record.wall_seconds << " s\n";
                for (std::size_t c = 0; c < res.verdicts.size(); ++c) {
                    std::cout << res.record.labels[c] << ": " << to_string(res.verdicts[c]) << '\n';
                }
                std::cout << "wrote " << res.directory << '\n';
            } else {
                const auto res = compare_full_reduced(s);
                std::cout << "alpha* = " << std::setprecision(10) << res.alpha_star << "  eps = " << res.epsilon
                          << "\ne-folding time = " << res.efolding_time << "  target t = " << res.t_target
                          << "  covered t = " << res.t_covered
                          << "\nmax relative deviation = " << res.max_rel_deviation << '\n'
                          << "wrote " << res.directory << '\n';
            }
        } else if (*list) {
            for (const auto& n : scenario_names()) std::cout << n << '\n';
        }
    } catch (const BracketError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DegenerateError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const IntegrationError& e) {
        std::cerr << "integration failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
