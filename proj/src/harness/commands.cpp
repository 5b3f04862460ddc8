#include "hwcm/harness/commands.hpp"

#include "hwcm/errors.hpp"
#include "hwcm/util/config.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

namespace hwcm {

std::vector<ScanCurve> scan_alpha(const PhysParams& base, const std::vector<double>& alphas,
                                  const std::vector<double>& betas) {
    if (alphas.empty()) throw DomainError("scan_alpha: empty alpha grid");
    std::vector<ScanCurve> out;
    for (double beta : betas) {
        PhysParams p = base;
        p.beta_phi = p.beta_rho = beta;
        p.validate();
        out.push_back({beta, stability_scan(p, alphas)});
    }
    return out;
}

void write_scan_curves_csv(std::ostream& os, const std::vector<ScanCurve>& curves) {
    os << "beta,alpha,max_re_lambda,argmax_kx,argmax_ky\n" << std::setprecision(17);
    for (const auto& c : curves) {
        for (const auto& r : c.rows) {
            os << c.beta << ',' << r.alpha << ',' << r.max_re_lambda << ',' << r.argmax.kx << ','
               << r.argmax.ky << '\n';
        }
    }
}

CoefficientReport reduce_at(ModeIndex mode, const PhysParams& base, double lo, double hi,
                            SuspendedParam which) {
    CoefficientReport r;
    r.mode = mode;
    r.alpha_star = critical_alpha(mode, base, lo, hi);
    PhysParams star = base;
    star.alpha = r.alpha_star;
    r.system = build_reduced_system(star, which);
    r.coefficients = linear_coefficients(r.system);
    return r;
}

namespace {

std::string fmt(cplx z) {
    std::ostringstream os;
    os << std::setprecision(7) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

} // namespace

void print_report(std::ostream& os, const CoefficientReport& r) {
    os << "mode (" << r.mode.kx << "," << r.mode.ky << ")  alpha* = " << std::setprecision(12) << r.alpha_star
       << "  centre dim = " << r.system.a() << "  quadratic terms = " << r.system.xi.size() << '\n';
    for (const auto& c : r.coefficients) {
        os << "X(" << c.slot.mode.kx << "," << c.slot.mode.ky << ")" << (c.slot.branch == Branch::plus ? "+" : "-")
           << "  lambda = " << fmt(c.lambda) << "  eps = " << fmt(c.eps1) << "  eps^2 = " << fmt(c.eps2) << '\n';
    }
}

CompareResult compare_full_reduced(const Scenario& s, bool write_outputs) {
    s.validate();
    if (!s.compare) throw DomainError("scenario '" + s.name + "' has no compare block");
    const CompareSpec& c = *s.compare;
    CompareResult out;
    out.alpha_star = critical_alpha(c.mode, s.params, c.lo, c.hi);
    out.epsilon = s.params.alpha - out.alpha_star;
    PhysParams star = s.params;
    star.alpha = out.alpha_star;
    const ReducedSystem sys = rebind_epsilon(build_reduced_system(star, SuspendedParam::alpha), out.epsilon);

    double rate = -std::numeric_limits<double>::infinity();
    for (const auto& lc : linear_coefficients(sys)) {
        rate = std::max(rate, (lc.lambda + out.epsilon * lc.eps1 + out.epsilon * out.epsilon * lc.eps2).real());
    }
    out.efolding_time = rate > 0 ? 1.0 / rate : std::numeric_limits<double>::infinity();
    out.t_target = c.efoldings > 0 && std::isfinite(out.efolding_time) ? c.efoldings * out.efolding_time : s.t_end;

    const std::vector<cplx> x0(sys.a(), c.amplitude);
    FullRunConfig fc;
    fc.t_end = out.t_target;
    fc.sample_dt = s.sample_dt;
    fc.imex = s.imex;
    fc.wall_budget_seconds = s.wall_budget_seconds;
    fc.observer = [&sys](const StateVector& st) { return centre_coordinates(sys, st); };
    for (const auto& slot : sys.part.centre) {
        fc.observer_labels.push_back("X" + mode_label("", slot.mode) + (slot.branch == Branch::plus ? "+" : "-"));
    }
    fc.meta = {{"scenario", to_json(s)}, {"config_hash", config_hash(to_json(s))}};
    out.full = integrate_full(lift(sys, x0, out.epsilon), s.params, fc);

    ReducedRunConfig rc;
    rc.t_end = out.full.t.back();
    rc.sample_dt = s.sample_dt;
    out.reduced = integrate_reduced(sys, x0, out.epsilon, rc);

    const std::size_t ns = std::min(out.full.t.size(), out.reduced.t.size());
    out.t_covered = ns ? std::min(out.full.t[ns - 1], out.reduced.t[ns - 1]) : 0.0;
    for (std::size_t col = 0; col < sys.a(); ++col) {
        double dev = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < ns; ++i) {
            dev = std::max(dev, std::abs(out.full.values[i][col] - out.reduced.values[i][col]));
            scale = std::max(scale, std::abs(out.reduced.values[i][col]));
        }
        if (scale > 0) out.max_rel_deviation = std::max(out.max_rel_deviation, dev / scale);
    }

    if (write_outputs) {
        out.directory = run_directory(s);
        std::filesystem::create_directories(out.directory);
        std::ofstream csv(out.directory + "/overlay.csv");
        csv << "t" << std::setprecision(17);
        for (const auto& l : out.full.labels) csv << ",\"re_full_" << l << "\",\"im_full_" << l << "\",\"re_red_" << l << "\",\"im_red_" << l << '"';
        csv << '\n';
        for (std::size_t i = 0; i < ns; ++i) {
            csv << out.full.t[i];
            for (std::size_t col = 0; col < sys.a(); ++col) {
                const cplx f = out.full.values[i][col], r = out.reduced.values[i][col];
                csv << ',' << f.real() << ',' << f.imag() << ',' << r.real() << ',' << r.imag();
            }
            csv << '\n';
        }
        nlohmann::json j = fc.meta;
        j["alpha_star"] = out.alpha_star;
        j["epsilon"] = out.epsilon;
        j["efolding_time"] = std::isfinite(out.efolding_time) ? nlohmann::json(out.efolding_time) : nlohmann::json(nullptr);
        j["t_target"] = out.t_target;
        j["t_covered"] = out.t_covered;
        j["max_rel_deviation"] = out.max_rel_deviation;
        j["full"] = out.full.sidecar();
        j["reduced"] = out.reduced.sidecar();
        std::ofstream(out.directory + "/compare.json") << j.dump(2) << '\n';
    }
    return out;
}

} // namespace hwcm
