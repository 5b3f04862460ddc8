#pragma once

#include "hwcm/spectral/nonlinear.hpp"
#include "hwcm/spectral/params.hpp"

#include <iosfwd>
#include <vector>

namespace hwcm {

struct GrowthRate {
    double re = 0.0;
    ModeIndex mode;
};

/// Re lambda_plus of one mode as a function of the parameters.
double growth_rate(ModeIndex k, const PhysParams& params);

/// Largest Re lambda_plus over all lattice modes except (0,0). Ties resolve to
/// the first mode in (kx, ky) ascending order.
GrowthRate max_growth_rate(const PhysParams& params, Execution exec = Execution::parallel);

/// Bisection on Re lambda_plus(alpha) for mode k between lo and hi, down to a
/// relative bracket width of 1e-10. params.alpha is ignored.
/// Throws BracketError when the end points do not straddle a sign change.
double critical_alpha(ModeIndex k, const PhysParams& params, double lo, double hi);

struct ScanRow {
    double alpha = 0.0;
    double max_re_lambda = 0.0;
    ModeIndex argmax;
};

/// max_growth_rate at every alpha of the grid. Throws DomainError on an empty grid.
std::vector<ScanRow> stability_scan(const PhysParams& params, const std::vector<double>& alphas);

/// CSV with header "alpha,max_re_lambda,argmax_kx,argmax_ky".
void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows);

/// Alphas at which consecutive rows change sign, by linear interpolation.
std::vector<double> sign_changes(const std::vector<ScanRow>& rows);

} // namespace hwcm
