#pragma once

#include "hwcm/spectral/nonlinear.hpp"
#include "hwcm/spectral/params.hpp"

namespace hwcm {

/// fft_aliased skips the 2/3 truncation; kept only to study aliasing artefacts.
enum class NonlinearPath { direct, fft_dealiased, fft_aliased };

NonlinearPair nonlinear_terms(const StateVector& state, NonlinearPath path);

/// Linear part L [Phi; R], mode by mode.
StateVector apply_linear(const StateVector& state, const PhysParams& params);

/// Nonlinear part F(Phi, R) = -[N(Phi, D_N Phi) / k+^2 ; N(Phi, R)].
StateVector nonlinear_part(const NonlinearPair& n);

/// Time derivative of the full spectral system; the zero mode derivative is 0.
StateVector rhs_full(const StateVector& state, const PhysParams& params,
                     NonlinearPath path = NonlinearPath::direct);

} // namespace hwcm
