#pragma once

#include "hwcm/integrate/imex_bdf.hpp"
#include "hwcm/integrate/run_record.hpp"
#include "hwcm/manifold/reduced.hpp"

#include <functional>

namespace hwcm {

/// Settings of a full-system run.
struct FullRunConfig {
    double t_end = 100.0;
    double sample_dt = 1.0;
    std::vector<ModeIndex> tracked; ///< Phi coefficients recorded when no observer is given
    ImexOptions imex;
    /// Stop early (reason "amplitude_cap") once max |coefficient| exceeds this.
    double stop_amplitude = std::numeric_limits<double>::infinity();
    /// Stop early (reason "wall_budget") after this many seconds.
    double wall_budget_seconds = std::numeric_limits<double>::infinity();
    /// Custom columns; labels must match the observer's output length.
    std::function<std::vector<cplx>(const StateVector&)> observer;
    std::vector<std::string> observer_labels;
    /// When set, the last good state is written here (binary field dumps) on failure.
    std::string failure_dump_dir;
    nlohmann::json meta;
};

/// Integrates the full system, sampling at multiples of sample_dt (the
/// initial state is sample 0). Integration errors propagate after the
/// record gathered so far has been stored in `partial` when given.
RunRecord integrate_full(const StateVector& initial, const PhysParams& params,
                         const FullRunConfig& config, RunRecord* partial = nullptr);

struct ReducedRunConfig {
    double t_end = 100.0;
    double sample_dt = 1.0;
    double rtol = 1e-10;
    double atol = 1e-16;
    double dt_init = 1e-2;
    double wall_budget_seconds = std::numeric_limits<double>::infinity();
};

/// Integrates dX/dt = reduced_rhs(X, eps) with an adaptive Dormand-Prince
/// 5(4) pair and dense output. Columns are the centre amplitudes.
RunRecord integrate_reduced(const ReducedSystem& sys, const std::vector<cplx>& x0, double eps,
                            const ReducedRunConfig& config);

} // namespace hwcm
