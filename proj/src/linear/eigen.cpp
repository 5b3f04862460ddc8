#include "hwcm/linear/eigen.hpp"

#include <limits>
#include <stdexcept>

namespace hwcm {

ModeBlocks mode_blocks(ModeIndex k, const PhysParams& params) {
    const double kp = k2_plus(k, params.n);
    const double kd = k_pow(k, params.p);
    const double a = -params.alpha / kp - params.beta_phi * kd;
    const double b = params.alpha / kp;
    const cplx c{params.alpha, -static_cast<double>(k.ky) * params.kappa};
    const double d = -params.alpha - params.beta_rho * kd;
    return {a, b, c, d};
}

std::pair<cplx, cplx> eigenvalues(const ModeBlocks& blk) {
    const cplx tr = blk.a + blk.d;
    const cplx det = blk.a * blk.d - blk.c * blk.b;
    const cplx sq = std::sqrt(tr * tr - 4.0 * det);
    const cplx p = 0.5 * (tr + sq);
    const cplx m = 0.5 * (tr - sq);
    if (std::abs(p) >= std::abs(m)) {
        return {p, p == cplx{} ? m : det / p};
    }
    return {det / m, m};
}

std::pair<cplx, cplx> eigenvalues(ModeIndex k, const PhysParams& params) {
    return eigenvalues(mode_blocks(k, params));
}

namespace {

// u = -b/(a - lambda) = (lambda - d)/c; take whichever denominator is
// larger so the rounding error of lambda is not amplified.
cplx eigen_u(const ModeBlocks& blk, cplx lambda) {
    const cplx den = blk.a - lambda;
    if (den == cplx{}) throw std::logic_error("eigenvector: a - lambda vanished");
    const cplx alt = lambda - blk.d;
    if (std::abs(alt) > std::abs(den) && blk.c != cplx{}) return alt / blk.c;
    return -blk.b / den;
}

} // namespace

std::pair<cplx, cplx> eigenvector(ModeIndex k, Branch which, const PhysParams& params) {
    const auto blk = mode_blocks(k, params);
    const auto [lp, lm] = eigenvalues(blk);
    return {eigen_u(blk, which == Branch::plus ? lp : lm), 1.0};
}

ModeEigenSystem mode_eigensystem(ModeIndex k, const PhysParams& params) {
    ModeEigenSystem es;
    es.blocks = mode_blocks(k, params);
    std::tie(es.lambda_plus, es.lambda_minus) = eigenvalues(es.blocks);
    es.u_plus = eigen_u(es.blocks, es.lambda_plus);
    es.u_minus = eigen_u(es.blocks, es.lambda_minus);
    const cplx gap = es.lambda_plus - es.lambda_minus;
    es.e = gap == cplx{} ? cplx{std::numeric_limits<double>::infinity(), 0.0} : 1.0 / gap;
    return es;
}

} // namespace hwcm
