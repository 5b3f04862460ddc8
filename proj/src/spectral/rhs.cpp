#include "hwcm/spectral/rhs.hpp"

#include "hwcm/linear/eigen.hpp"

namespace hwcm {

StateVector apply_linear(const StateVector& state, const PhysParams& params) {
    const int n = state.n();
    PhysParams p = params;
    p.n = n;
    StateVector out(n);
    for (std::size_t i = 0; i < state.phi.size(); ++i) {
        const ModeIndex k = state.phi.mode_at(i);
        if (k.is_zero()) continue;
        const auto blk = mode_blocks(k, p);
        const cplx phi = state.phi.data()[i];
        const cplx rho = state.rho.data()[i];
        out.phi.data()[i] = blk.a * phi + blk.b * rho;
        out.rho.data()[i] = blk.c * phi + blk.d * rho;
    }
    return out;
}

StateVector nonlinear_part(const NonlinearPair& nl) {
    const int n = nl.vorticity.n();
    StateVector out(n);
    for (std::size_t i = 0; i < out.phi.size(); ++i) {
        const ModeIndex k = out.phi.mode_at(i);
        if (k.is_zero()) continue;
        out.phi.data()[i] = -nl.vorticity.data()[i] / k2_plus(k, n);
        out.rho.data()[i] = -nl.density.data()[i];
    }
    return out;
}

NonlinearPair nonlinear_terms(const StateVector& state, NonlinearPath path) {
    return path == NonlinearPath::direct ? nonlinear_terms(state)
                                         : nonlinear_terms_fft(state, path == NonlinearPath::fft_dealiased);
}

StateVector rhs_full(const StateVector& state, const PhysParams& params, NonlinearPath path) {
    const NonlinearPair nl = nonlinear_terms(state, path);
    StateVector out = apply_linear(state, params);
    out += nonlinear_part(nl);
    out.phi[ModeIndex{0, 0}] = 0.0;
    out.rho[ModeIndex{0, 0}] = 0.0;
    return out;
}

} // namespace hwcm
