#pragma once

#include "hwcm/spectral/field.hpp"

namespace hwcm::kernels {

/// Extra weight applied to the second factor of a convolution term.
enum class SecondFactorWeight { none, k_squared };

/// out_k = sum_q (kx qy - qx ky) w(k - q) f_q g_(k-q) over q, k - q in the lattice.
/// Single output coefficient of the sum above.
cplx convolve_mode(const SpectralField& f, const SpectralField& g, SecondFactorWeight w,
                   ModeIndex k);

/// Reference loop; the parallel variant must reproduce it bit for bit.
void convolve_serial(const SpectralField& f, const SpectralField& g, SecondFactorWeight w,
                     SpectralField& out);

/// OpenMP version over output modes. Each output is summed in the same order
/// as the serial loop, so results are identical regardless of thread count.
void convolve_parallel(const SpectralField& f, const SpectralField& g, SecondFactorWeight w,
                       SpectralField& out);

} // namespace hwcm::kernels
