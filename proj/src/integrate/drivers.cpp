#include "hwcm/integrate/drivers.hpp"

#include "hwcm/errors.hpp"
#include "hwcm/spectral/field_io.hpp"

#include <boost/numeric/odeint.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>

namespace hwcm {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

RunRecord integrate_full(const StateVector& initial, const PhysParams& params,
                         const FullRunConfig& config, RunRecord* partial) {
    if (!(config.sample_dt > 0.0)) throw DomainError("sample_dt must be positive");
    for (const auto& k : config.tracked) {
        if (!in_lattice(k, params.n)) throw DomainError("tracked mode outside lattice");
    }
    const auto start = Clock::now();
    RunRecord rec;
    rec.meta = config.meta;
    std::function<std::vector<cplx>(const StateVector&)> observe = config.observer;
    if (observe) {
        rec.labels = config.observer_labels;
    } else {
        for (const auto& k : config.tracked) rec.labels.push_back(mode_label("phi", k));
        observe = [&config](const StateVector& s) {
            std::vector<cplx> v;
            for (const auto& k : config.tracked) v.push_back(s.phi[k]);
            return v;
        };
    }

    ImexBdf integ(params, config.imex, initial);
    auto record = [&](double t, const StateVector& s) {
        rec.t.push_back(t);
        rec.values.push_back(observe(s));
        if (rec.values.back().size() != rec.labels.size()) {
            throw DomainError("observer output does not match its labels");
        }
    };
    record(integ.t(), integ.state());
    long next_sample = 1;
    auto sync_stats = [&] {
        rec.steps = integ.stats().accepted;
        rec.rejected = integ.stats().rejected;
        rec.wall_seconds = seconds_since(start);
    };

    try {
        while (integ.t() < config.t_end) {
            integ.step(config.t_end);
            for (;;) {
                const double ts = next_sample * config.sample_dt;
                if (ts > integ.t() + 1e-12 * std::max(1.0, ts) || ts > config.t_end * (1 + 1e-14)) break;
                record(ts, std::abs(ts - integ.t()) <= 1e-12 * std::max(1.0, ts) ? integ.state()
                                                                                : integ.interpolate(ts));
                ++next_sample;
            }
            if (integ.state().max_abs() > config.stop_amplitude) {
                rec.stop_reason = "amplitude_cap";
                break;
            }
            if (seconds_since(start) > config.wall_budget_seconds) {
                rec.stop_reason = "wall_budget";
                break;
            }
        }
    } catch (const IntegrationError&) {
        rec.stop_reason = "failed";
        sync_stats();
        if (!config.failure_dump_dir.empty()) {
            std::filesystem::create_directories(config.failure_dump_dir);
            save_field_binary(config.failure_dump_dir + "/last_good_phi.bin", integ.state().phi);
            save_field_binary(config.failure_dump_dir + "/last_good_rho.bin", integ.state().rho);
        }
        if (partial) *partial = rec;
        throw;
    }
    sync_stats();
    rec.meta["t_reached"] = integ.t();
    return rec;
}

RunRecord integrate_reduced(const ReducedSystem& sys, const std::vector<cplx>& x0, double eps,
                            const ReducedRunConfig& config) {
    namespace odeint = boost::numeric::odeint;
    using State = std::vector<cplx>;
    if (x0.size() != sys.a()) throw DomainError("initial reduced state has wrong length");
    const auto start = Clock::now();

    RunRecord rec;
    for (const auto& s : sys.part.centre) {
        rec.labels.push_back("X" + mode_label("", s.mode) + (s.branch == Branch::plus ? "+" : "-"));
    }
    rec.meta["epsilon"] = eps;

    std::vector<double> times;
    for (long i = 0;; ++i) {
        const double t = i * config.sample_dt;
        if (t > config.t_end * (1 + 1e-14)) break;
        times.push_back(t);
    }
    if (times.back() < config.t_end) times.push_back(config.t_end);

    long evals = 0;
    auto rhs = [&](const State& x, State& dx, double) {
        ++evals;
        dx = reduced_rhs(sys, x, eps);
    };
    struct BudgetExceeded {};
    auto observer = [&](const State& x, double t) {
        rec.t.push_back(t);
        rec.values.push_back(x);
        if (seconds_since(start) > config.wall_budget_seconds) throw BudgetExceeded{};
    };
    State x = x0;
    auto stepper = odeint::make_dense_output(config.atol, config.rtol, odeint::runge_kutta_dopri5<State>());
    try {
        rec.steps = static_cast<long>(odeint::integrate_times(stepper, rhs, x, times.begin(), times.end(),
                                                              config.dt_init, observer,
                                                              odeint::max_step_checker(1000000)));
    } catch (const BudgetExceeded&) {
        rec.stop_reason = "wall_budget";
    } catch (const std::exception& e) {
        throw IntegrationError(std::string("reduced integration failed: ") + e.what());
    }
    rec.meta["rhs_evaluations"] = evals;
    rec.wall_seconds = seconds_since(start);
    return rec;
}

} // namespace hwcm
