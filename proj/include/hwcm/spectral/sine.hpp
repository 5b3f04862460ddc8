#pragma once

#include "hwcm/spectral/field.hpp"

#include <span>
#include <vector>

namespace hwcm {

/// Zero boundaries along the y-axis: fields vanish on the lines x = 0 and
/// x = +-pi and stay periodic in y. A sine series of size N = n in x is
/// realised on the 2N Fourier grid through the odd extension u(-x, y) = -u(x, y),
/// which in spectral space reads U_(-kx, ky) = -U_(kx, ky) and kills every
/// (0, ky) mode.

/// Real samples on the half grid, interior rows a = 1 .. n-1 (x_a = 2 pi a / m)
/// by all m columns in y, row-major.
struct HalfField {
    int n = 0;
    std::vector<double> values; ///< (n - 1) * 2n entries

    double& operator()(int a, int b) { return values[static_cast<std::size_t>(a - 1) * 2 * n + b]; }
    double operator()(int a, int b) const { return values[static_cast<std::size_t>(a - 1) * 2 * n + b]; }
};

HalfField make_half_field(int n);

/// Spectral field of the odd extension of `half`.
SpectralField sin_embed(const HalfField& half);

/// Odd part in x: (U_(kx,ky) - U_(-kx,ky)) / 2, Nyquist and zero mode cleared.
SpectralField project_odd_x(const SpectralField& f);
StateVector project_odd_x(const StateVector& s);

/// Largest |U_(kx,ky) + U_(-kx,ky)| over in-range pairs.
double odd_x_defect(const SpectralField& f);

} // namespace hwcm
