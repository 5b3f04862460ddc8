#include "hwcm/linear/stability.hpp"

#include "hwcm/errors.hpp"
#include "hwcm/linear/eigen.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace hwcm {

double growth_rate(ModeIndex k, const PhysParams& params) {
    return eigenvalues(k, params).first.real();
}

GrowthRate max_growth_rate(const PhysParams& params, Execution exec) {
    const int n = params.n;
    const int m = params.m();
    const long total = static_cast<long>(m) * m;
    std::vector<double> rates(static_cast<std::size_t>(total));
    auto mode_of = [n, m](long i) {
        return ModeIndex{static_cast<int>(i / m) - n, static_cast<int>(i % m) - n};
    };
    if (exec == Execution::serial) {
        for (long i = 0; i < total; ++i) rates[i] = growth_rate(mode_of(i), params);
    } else {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < total; ++i) rates[i] = growth_rate(mode_of(i), params);
    }
    GrowthRate best{-std::numeric_limits<double>::infinity(), {}};
    for (long i = 0; i < total; ++i) {
        const ModeIndex k = mode_of(i);
        if (k.is_zero()) continue;
        if (rates[i] > best.re) best = {rates[i], k};
    }
    return best;
}

double critical_alpha(ModeIndex k, const PhysParams& params, double lo, double hi) {
    if (!(lo > 0.0) || !(hi > lo)) throw DomainError("critical_alpha needs 0 < lo < hi");
    PhysParams p = params;
    auto f = [&](double alpha) {
        p.alpha = alpha;
        return growth_rate(k, p);
    };
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        std::ostringstream msg;
        msg << "no sign change of Re lambda+ for mode (" << k.kx << "," << k.ky << ") on [" << lo
            << ", " << hi << "]: " << flo << ", " << fhi;
        throw BracketError(msg.str());
    }
    while (hi - lo > 1e-10 * hi) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<ScanRow> stability_scan(const PhysParams& params, const std::vector<double>& alphas) {
    if (alphas.empty()) throw DomainError("stability_scan needs a nonempty alpha grid");
    std::vector<ScanRow> rows(alphas.size());
    const long count = static_cast<long>(alphas.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        PhysParams p = params;
        p.alpha = alphas[i];
        const auto g = max_growth_rate(p, Execution::serial);
        rows[i] = {alphas[i], g.re, g.mode};
    }
    return rows;
}

void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
    os << "alpha,max_re_lambda,argmax_kx,argmax_ky\n";
    os.precision(17);
    for (const auto& r : rows) {
        os << r.alpha << ',' << r.max_re_lambda << ',' << r.argmax.kx << ',' << r.argmax.ky << '\n';
    }
}

std::vector<double> sign_changes(const std::vector<ScanRow>& rows) {
    std::vector<double> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double y0 = rows[i - 1].max_re_lambda;
        const double y1 = rows[i].max_re_lambda;
        if ((y0 > 0.0) != (y1 > 0.0)) {
            const double t = y0 / (y0 - y1);
            out.push_back(rows[i - 1].alpha + t * (rows[i].alpha - rows[i - 1].alpha));
        }
    }
    return out;
}

} // namespace hwcm
