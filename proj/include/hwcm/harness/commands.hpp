#pragma once

#include "hwcm/harness/scenario.hpp"
#include "hwcm/linear/stability.hpp"
#include "hwcm/manifold/reduced.hpp"

#include <iosfwd>
#include <vector>

namespace hwcm {

/// One stability curve per beta (beta_phi = beta_rho = beta).
struct ScanCurve {
    double beta = 0.0;
    std::vector<ScanRow> rows;
};

/// Throws DomainError on an empty alpha grid. An empty beta list gives no curves.
std::vector<ScanCurve> scan_alpha(const PhysParams& base, const std::vector<double>& alphas,
                                  const std::vector<double>& betas);

/// Header "beta,alpha,max_re_lambda,argmax_kx,argmax_ky" (always written).
void write_scan_curves_csv(std::ostream& os, const std::vector<ScanCurve>& curves);

struct CoefficientReport {
    ModeIndex mode;
    double alpha_star = 0.0;
    ReducedSystem system;
    std::vector<LinearCoefficient> coefficients;
};

/// critical_alpha in [lo, hi], then the reduced system at that point.
CoefficientReport reduce_at(ModeIndex mode, const PhysParams& base, double lo, double hi,
                            SuspendedParam which = SuspendedParam::alpha);

/// Human-readable lines "X(kx,ky)+ lambda=... eps=... eps^2=...".
void print_report(std::ostream& os, const CoefficientReport& r);

struct CompareResult {
    double alpha_star = 0.0;
    double epsilon = 0.0;
    double efolding_time = 0.0;  ///< 1 / max Re of the reduced linear rates (inf when none grow)
    double t_target = 0.0;       ///< requested comparison horizon
    double t_covered = 0.0;      ///< horizon reached by both runs
    double max_rel_deviation = 0.0;
    RunRecord full;
    RunRecord reduced;
    std::string directory;
};

/// Full system started from lift(X0) observed in centre coordinates, next to
/// the reduced system from X0. Deviation is max_t |X_full - X_red| / max_t |X_red|
/// over the common horizon, per column, maximised over columns.
/// Writes overlay.csv and compare.json when write_outputs is set.
CompareResult compare_full_reduced(const Scenario& s, bool write_outputs = true);

} // namespace hwcm
