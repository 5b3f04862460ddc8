#pragma once

#include "hwcm/harness/verdict.hpp"
#include "hwcm/integrate/drivers.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hwcm {

enum class Boundary { periodic, zero_y };

struct InitSpec {
    enum class Kind { box_random, model_gamma, zero_bc_sin, centre };
    Kind kind = Kind::box_random;
    std::uint64_t seed = 1;
    double cap = 0.01;   ///< box radius
    double s = 0.01;     ///< zero-boundary scale
    double gamma = 1e-4; ///< model-problem radius
};

/// Pairing with a reduced system for full-vs-reduced comparisons: the
/// reduction is taken at the critical alpha of `mode` found in `bracket`.
struct CompareSpec {
    ModeIndex mode{0, 1};
    double lo = 0.0;
    double hi = 0.0;
    double amplitude = 1e-3; ///< initial centre amplitude
    /// t_end in units of the reduced e-folding time (used when > 0).
    double efoldings = 0.0;
};

struct Scenario {
    std::string name;
    Boundary boundary = Boundary::periodic;
    PhysParams params;
    InitSpec initial;
    double t_end = 100.0;
    double sample_dt = 1.0;
    std::vector<ModeIndex> tracked;
    std::string outputs = "runs";
    ImexOptions imex;
    double stop_amplitude = std::numeric_limits<double>::infinity();
    double wall_budget_seconds = std::numeric_limits<double>::infinity();
    std::optional<CompareSpec> compare;

    /// Throws DomainError on tracked modes outside the lattice or a bad boundary/init pairing.
    void validate() const;
};

nlohmann::json to_json(const Scenario& s);
/// Missing keys fall back to `base` (e.g. a registry entry).
Scenario scenario_from_json(const nlohmann::json& j, const Scenario& base = {});

/// Named scenarios of the periodic and zero-boundary studies.
std::vector<std::string> scenario_names();
/// Throws DomainError for unknown names.
Scenario find_scenario(const std::string& name);

/// Applies --grid: sets n = grid / 2.
Scenario with_grid(Scenario s, int grid);

StateVector make_initial(const Scenario& s);

struct ScenarioResult {
    RunRecord record;
    std::vector<Verdict> verdicts; ///< one per tracked mode
    std::string directory;
};

/// Runs the full system, writes run.csv, run.json (with verdicts) under
/// <outputs>/<name>_g<grid>_s<seed>/, and returns the verdicts.
/// Integration failures propagate after the partial record is written.
ScenarioResult run_scenario(const Scenario& s);

std::string run_directory(const Scenario& s);

} // namespace hwcm
