#include "hwcm/integrate/imex_bdf.hpp"

#include "hwcm/errors.hpp"
#include "hwcm/linear/eigen.hpp"
#include "hwcm/spectral/sine.hpp"

#include <cmath>
#include <sstream>

namespace hwcm {

namespace {

// Derivative at x[0] of the Lagrange basis polynomials on nodes x.
std::vector<double> derivative_weights(const std::vector<double>& x) {
    const std::size_t k = x.size();
    std::vector<double> w(k, 0.0);
    for (std::size_t m = 1; m < k; ++m) w[0] += 1.0 / (x[0] - x[m]);
    for (std::size_t j = 1; j < k; ++j) {
        double num = 1.0, den = 1.0;
        for (std::size_t m = 0; m < k; ++m) {
            if (m == j) continue;
            den *= x[j] - x[m];
            if (m != 0) num *= x[0] - x[m];
        }
        w[j] = num / den;
    }
    return w;
}

// Values at t of the Lagrange basis polynomials on nodes x.
std::vector<double> value_weights(const std::vector<double>& x, double t) {
    std::vector<double> w(x.size(), 1.0);
    for (std::size_t j = 0; j < x.size(); ++j) {
        for (std::size_t m = 0; m < x.size(); ++m) {
            if (m != j) w[j] *= (t - x[m]) / (x[j] - x[m]);
        }
    }
    return w;
}

} // namespace

ImexBdf::ImexBdf(const PhysParams& params, const ImexOptions& opts, StateVector y0, double t0,
                 Forcing forcing)
    : params_(params), opts_(opts), forcing_(std::move(forcing)), dt_(opts.dt_init) {
    params_.validate();
    if (y0.n() != params_.n) throw DomainError("initial state lattice does not match params.n");
    if (opts_.max_order < 1 || opts_.max_order > 4) throw DomainError("IMEX-BDF order must be 1..4");
    if (!(opts_.dt_min > 0.0) || !(opts_.dt_max >= opts_.dt_min)) throw DomainError("bad step bounds");
    blocks_.resize(y0.phi.size());
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        const auto b = mode_blocks(y0.phi.mode_at(i), params_);
        blocks_[i] = {b.a, b.b, b.c, b.d};
    }
    finish(y0);
    Point p{t0, std::move(y0), {}};
    p.f = nonlinear(p.y);
    hist_.push_front(std::move(p));
}

void ImexBdf::seed_history(const std::vector<std::pair<double, StateVector>>& past) {
    if (past.empty()) throw DomainError("seed_history needs at least one state");
    if (static_cast<int>(past.size()) > opts_.max_order) throw DomainError("too many history states");
    hist_.clear();
    for (const auto& [t, y] : past) {
        Point p{t, y, {}};
        finish(p.y);
        p.f = nonlinear(p.y);
        hist_.push_front(std::move(p));
    }
    steps_taken_ = static_cast<long>(past.size()) - 1;
}

StateVector ImexBdf::nonlinear(const StateVector& y) const {
    return nonlinear_part(nonlinear_terms(y, opts_.nonlinear));
}

void ImexBdf::finish(StateVector& y) const {
    if (opts_.enforce_hermitian) y = enforce_hermitian(y);
    if (opts_.odd_x) y = project_odd_x(y);
    y.phi[ModeIndex{0, 0}] = 0.0;
    y.rho[ModeIndex{0, 0}] = 0.0;
}

// Solves (a0 - L) y = sum beta_j f_j + S(t_new) - sum_{j>=1} a_j y_j with
// `order` past points.
StateVector ImexBdf::solve(int order, double t_new) const {
    std::vector<double> nodes{0.0};
    for (int j = 0; j < order; ++j) nodes.push_back(hist_[j].t - t_new);
    const auto alpha = derivative_weights(nodes);
    const auto beta = value_weights({nodes.begin() + 1, nodes.end()}, 0.0);

    StateVector rhs(params_.n);
    for (int j = 0; j < order; ++j) {
        const auto& h = hist_[j];
        for (std::size_t i = 0; i < rhs.phi.size(); ++i) {
            rhs.phi.data()[i] += beta[j] * h.f.phi.data()[i] - alpha[j + 1] * h.y.phi.data()[i];
            rhs.rho.data()[i] += beta[j] * h.f.rho.data()[i] - alpha[j + 1] * h.y.rho.data()[i];
        }
    }
    if (forcing_) rhs += forcing_(t_new);

    const double a0 = alpha[0];
    StateVector y(params_.n);
    const auto total = static_cast<long>(rhs.phi.size());
    auto yp = y.phi.data();
    auto yr = y.rho.data();
    const auto rp = rhs.phi.data();
    const auto rr = rhs.rho.data();
#pragma omp parallel for schedule(static)
    for (long i = 0; i < total; ++i) {
        const auto& b = blocks_[static_cast<std::size_t>(i)];
        const cplx m00 = a0 - b[0], m01 = -b[1], m10 = -b[2], m11 = a0 - b[3];
        const cplx det = m00 * m11 - m01 * m10;
        yp[i] = (m11 * rp[i] - m01 * rr[i]) / det;
        yr[i] = (m00 * rr[i] - m10 * rp[i]) / det;
    }
    return y;
}

StateVector ImexBdf::solve_euler_from(const StateVector& y0, const StateVector& f0, double t_new,
                                      double h) const {
    StateVector rhs = (1.0 / h) * y0;
    rhs += f0;
    if (forcing_) rhs += forcing_(t_new);
    StateVector y(params_.n);
    for (std::size_t i = 0; i < rhs.phi.size(); ++i) {
        const auto& b = blocks_[i];
        const double a0 = 1.0 / h;
        const cplx m00 = a0 - b[0], m01 = -b[1], m10 = -b[2], m11 = a0 - b[3];
        const cplx det = m00 * m11 - m01 * m10;
        y.phi.data()[i] = (m11 * rhs.phi.data()[i] - m01 * rhs.rho.data()[i]) / det;
        y.rho.data()[i] = (m00 * rhs.rho.data()[i] - m10 * rhs.phi.data()[i]) / det;
    }
    return y;
}

double ImexBdf::error_norm(const StateVector& hi, const StateVector& lo, const StateVector& old,
                           ModeIndex& worst) const {
    double err = 0.0;
    const std::size_t size = hi.phi.size();
    auto scan = [&](const SpectralField& a, const SpectralField& b, const SpectralField& o) {
        for (std::size_t i = 0; i < size; ++i) {
            const double w = opts_.atol +
                             opts_.rtol * std::max(std::abs(a.data()[i]), std::abs(o.data()[i]));
            const double e = std::abs(a.data()[i] - b.data()[i]) / w;
            if (e > err) {
                err = e;
                worst = a.mode_at(i);
            }
        }
    };
    scan(hi.phi, lo.phi, old.phi);
    scan(hi.rho, lo.rho, old.rho);
    return err;
}

void ImexBdf::step(double t_stop) {
    const int avail = static_cast<int>(hist_.size());
    const bool starting = steps_taken_ < opts_.startup_steps;
    const int order = std::min({avail, opts_.max_order, static_cast<int>(steps_taken_) + 1});
    const double cap = starting && opts_.adaptive ? opts_.dt_max * opts_.startup_dt_fraction : opts_.dt_max;

    for (;;) {
        double h = std::min(dt_, cap);
        bool clipped = false;
        if (t() + h >= t_stop) {
            h = t_stop - t();
            clipped = true;
        }
        if (!(h > 0.0)) throw DomainError("step requested with t_stop <= t");
        const double t_new = t() + h;

        StateVector y;
        double err = 0.0;
        ModeIndex worst;
        int q = order;
        if (!opts_.adaptive) {
            y = solve(order, t_new);
        } else if (order == 1) {
            // Step doubling for the first step.
            y = solve(1, t_new);
            const StateVector half = solve_euler_from(state(), hist_.front().f, t() + 0.5 * h, 0.5 * h);
            StateVector half_f = nonlinear(half);
            StateVector two = solve_euler_from(half, half_f, t_new, 0.5 * h);
            // compare in the constrained space: components finish() discards carry no error
            finish(y);
            finish(two);
            err = error_norm(two, y, state(), worst);
            y = two;
            q = 2;
        } else {
            y = solve(order, t_new);
            StateVector lower = solve(order - 1, t_new);
            finish(y);
            finish(lower);
            err = error_norm(y, lower, state(), worst);
        }

        if (opts_.adaptive && err > 1.0) {
            ++stats_.rejected;
            stats_.last_error = err;
            stats_.worst_mode = worst;
            dt_ = h * std::max(opts_.growth_min, opts_.safety * std::pow(err, -1.0 / q));
            if (dt_ < opts_.dt_min) {
                std::ostringstream msg;
                msg << "step size underflow at t=" << t() << ": dt=" << dt_ << " < dt_min=" << opts_.dt_min
                    << ", error estimate " << err << " worst at mode (" << worst.kx << "," << worst.ky << ")";
                throw IntegrationError(msg.str());
            }
            continue;
        }

        finish(y);
        if (!y.is_finite()) {
            std::ostringstream msg;
            msg << "non-finite state after step from t=" << t() << " with dt=" << h;
            throw IntegrationError(msg.str());
        }
        Point p{t_new, std::move(y), {}};
        p.f = nonlinear(p.y);
        hist_.push_front(std::move(p));
        while (static_cast<int>(hist_.size()) > opts_.max_order) hist_.pop_back();
        ++steps_taken_;
        ++stats_.accepted;
        stats_.last_error = err;
        stats_.worst_mode = worst;

        if (opts_.adaptive) {
            const double e = std::max(err, 1e-10);
            double factor = opts_.safety * std::pow(e, -0.7 / q) * std::pow(err_prev_, 0.4 / q);
            factor = std::clamp(factor, opts_.growth_min, opts_.growth_max);
            err_prev_ = e;
            // A step shortened to land on t_stop says nothing about the controller's choice.
            dt_ = clipped ? std::max(dt_, h) : h * factor;
            dt_ = std::min(dt_, opts_.dt_max);
        }
        return;
    }
}

StateVector ImexBdf::interpolate(double t) const {
    const double slack = 1e-12 * std::max(1.0, std::abs(t));
    if (t > hist_.front().t + slack || t < hist_.back().t - slack) {
        throw DomainError("interpolation time outside the stored history");
    }
    std::vector<double> nodes;
    for (const auto& p : hist_) nodes.push_back(p.t);
    const auto w = value_weights(nodes, t);
    StateVector out(params_.n);
    for (std::size_t j = 0; j < hist_.size(); ++j) {
        const auto& y = hist_[j].y;
        for (std::size_t i = 0; i < out.phi.size(); ++i) {
            out.phi.data()[i] += w[j] * y.phi.data()[i];
            out.rho.data()[i] += w[j] * y.rho.data()[i];
        }
    }
    return out;
}

} // namespace hwcm
