#pragma once

#include "hwcm/spectral/rhs.hpp"

#include <array>
#include <deque>
#include <functional>
#include <limits>
#include <optional>

namespace hwcm {

struct ImexOptions {
    double rtol = 1e-8;
    double atol = 1e-12;
    double dt_init = 1e-3;
    double dt_min = 1e-12;
    double dt_max = 1.0;
    int max_order = 4;

    bool adaptive = true; ///< false: fixed step dt_init, no error control
    double safety = 0.9;
    double growth_min = 0.2;
    double growth_max = 5.0;
    int startup_steps = 3;              ///< steps at orders 1, 2, 3 before the full order
    double startup_dt_fraction = 0.01;  ///< dt cap during startup, as a fraction of dt_max

    bool enforce_hermitian = true;
    bool odd_x = false; ///< project onto odd-in-x fields after every step
    NonlinearPath nonlinear = NonlinearPath::fft_dealiased;
};

/// Counters and last-step diagnostics.
struct StepStats {
    long accepted = 0;
    long rejected = 0;
    double last_error = 0.0;
    ModeIndex worst_mode;
};

/// Variable-step IMEX-BDF: the per-mode linear blocks implicitly, the
/// convolution nonlinearity by polynomial extrapolation of past evaluations.
/// Coefficients come from Lagrange interpolation on the actual time nodes.
class ImexBdf {
public:
    using Forcing = std::function<StateVector(double)>;

    ImexBdf(const PhysParams& params, const ImexOptions& opts, StateVector y0, double t0 = 0.0,
            Forcing forcing = {});

    /// Replace the history by exact past states, oldest first; the last entry
    /// becomes the current state. Lets fixed-step runs start at full order.
    void seed_history(const std::vector<std::pair<double, StateVector>>& past);

    /// One accepted step, never past `t_stop`. Throws IntegrationError when dt
    /// falls below dt_min or the new state is not finite; the integrator then
    /// still holds the last good state.
    void step(double t_stop = std::numeric_limits<double>::infinity());

    double t() const { return hist_.front().t; }
    const StateVector& state() const { return hist_.front().y; }
    double dt() const { return dt_; }
    int order() const { return static_cast<int>(hist_.size()); }
    const StepStats& stats() const { return stats_; }
    const PhysParams& params() const { return params_; }

    /// State at t in [oldest history time, t()] by Lagrange interpolation over the history.
    StateVector interpolate(double t) const;

private:
    struct Point {
        double t;
        StateVector y;
        StateVector f; ///< nonlinear part at (t, y)
    };

    StateVector nonlinear(const StateVector& y) const;
    StateVector solve(int order, double t_new) const;
    StateVector solve_euler_from(const StateVector& y, const StateVector& f, double t_new, double h) const;
    void finish(StateVector& y) const;
    double error_norm(const StateVector& hi, const StateVector& lo, const StateVector& old,
                      ModeIndex& worst) const;

    PhysParams params_;
    ImexOptions opts_;
    Forcing forcing_;
    std::vector<std::array<cplx, 4>> blocks_; ///< a, b, c, d per storage index
    std::deque<Point> hist_;                  ///< newest first
    double dt_;
    double err_prev_ = 1.0;
    long steps_taken_ = 0;
    StepStats stats_;
};

} // namespace hwcm
