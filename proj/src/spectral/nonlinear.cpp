#include "hwcm/spectral/nonlinear.hpp"

#include "hwcm/spectral/kernels.hpp"

namespace hwcm {

namespace {

SpectralField convolve(const SpectralField& f, const SpectralField& g,
                       kernels::SecondFactorWeight w, Execution exec) {
    SpectralField out;
    if (exec == Execution::serial) {
        kernels::convolve_serial(f, g, w, out);
    } else {
        kernels::convolve_parallel(f, g, w, out);
    }
    return out;
}

} // namespace

SpectralField poisson_bracket_direct(const SpectralField& f, const SpectralField& g,
                                     Execution exec) {
    return convolve(f, g, kernels::SecondFactorWeight::none, exec);
}

NonlinearPair nonlinear_terms(const StateVector& state, Execution exec) {
    return {convolve(state.phi, state.phi, kernels::SecondFactorWeight::k_squared, exec),
            convolve(state.phi, state.rho, kernels::SecondFactorWeight::none, exec)};
}

// Largest K with 3K < m, so that no product of retained modes aliases back
// onto a retained mode.
int dealias_cutoff(int n) { return (2 * n - 1) / 3; }

bool dealias_keep(ModeIndex k, int n) {
    const int c = dealias_cutoff(n);
    return k.kx >= -c && k.kx <= c && k.ky >= -c && k.ky <= c;
}

} // namespace hwcm
