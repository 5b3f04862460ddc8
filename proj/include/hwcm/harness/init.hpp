#pragma once

#include "hwcm/spectral/field.hpp"

#include <cstdint>

namespace hwcm {

/// Counter-based draw in [0, 1): a pure function of (seed, kx, ky, stream),
/// so a coefficient's value does not depend on visiting order.
double counter_uniform(std::uint64_t seed, int kx, int ky, std::uint32_t stream);

/// Complex value uniform on the disk of the given radius, keyed like counter_uniform.
cplx disk_draw(std::uint64_t seed, ModeIndex k, double radius);

/// Random Phi on 0 <= |kx| <= 5, 1 <= |ky| <= 5 with |Phi| <= cap, Hermitian, R = Phi.
StateVector init_box_random(std::uint64_t seed, int n, double cap = 0.01);

/// Phi_(0,+-1) = 0.1 plus random entries on 0 <= |kx| <= 5, 2 <= |ky| <= 5
/// with |Phi| <= gamma; Hermitian, R = Phi.
StateVector init_model_gamma(std::uint64_t seed, int n, double gamma);

/// Grid function sum_{k=1..4} [g_k h_k sin(2 pi k a/m) sin(2 pi k b/m) + cos(2 pi k a/m)]
/// with g_k, h_k uniform in [-1, 1], projected onto odd-in-x fields and scaled
/// so that the mean absolute value of the physical field is s. R = Phi.
/// A draw whose odd part vanishes is redrawn with seed + 1.
StateVector init_zero_bc(std::uint64_t seed, int n, double s);

/// Mean of |u| over the physical grid.
double mean_abs_physical(const SpectralField& f);

} // namespace hwcm
