#pragma once

#include "hwcm/spectral/field.hpp"

#include <memory>

namespace hwcm {

/// Which implementation of a data-parallel kernel to run. `serial` is the
/// plain reference loop kept for testing; `parallel` is the OpenMP version.
enum class Execution { serial, parallel };

/// The two convolution sums of the spectral system:
/// vorticity = N(Phi, D_N Phi), density = N(Phi, R).
struct NonlinearPair {
    SpectralField vorticity;
    SpectralField density;
};

/// Spectral coefficients of [f, g] = f_x g_y - f_y g_x by the explicit double
/// sum over q with both q and k - q in the lattice (Galerkin truncation).
SpectralField poisson_bracket_direct(const SpectralField& f, const SpectralField& g,
                                     Execution exec = Execution::parallel);

/// Both convolution sums by direct summation. The vorticity sum carries the
/// |k - q|^2 weight on the second factor.
NonlinearPair nonlinear_terms(const StateVector& state, Execution exec = Execution::parallel);

/// Retained-mode mask of the 2/3 rule: |kx|, |ky| <= floor(2n/3).
bool dealias_keep(ModeIndex k, int n);
int dealias_cutoff(int n);

/// Pseudospectral evaluator of the convolution sums. Owns FFTW plans and
/// scratch buffers, so one instance must not be shared between threads.
class FftNonlinear {
public:
    explicit FftNonlinear(int n);
    ~FftNonlinear();
    FftNonlinear(const FftNonlinear&) = delete;
    FftNonlinear& operator=(const FftNonlinear&) = delete;
    FftNonlinear(FftNonlinear&&) noexcept;
    FftNonlinear& operator=(FftNonlinear&&) noexcept;

    int n() const;

    /// With `dealias`, inputs are masked before the physical-space products
    /// and the transformed products are masked again.
    NonlinearPair evaluate(const StateVector& state, bool dealias) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// One-shot convenience wrapper around FftNonlinear.
NonlinearPair nonlinear_terms_fft(const StateVector& state, bool dealias);

/// Inverse transform to the m x m physical grid, x-major: u[a*m + b] = u(2 pi a/m, 2 pi b/m).
std::vector<cplx> to_physical(const SpectralField& f);
/// Forward transform with the 1/m^2 analysis normalisation.
SpectralField from_physical(std::span<const cplx> values, int n);

} // namespace hwcm
