#pragma once

namespace hwcm {

/// Model constants of the Hasegawa–Wakatani system on a 2n x 2n mode lattice.
struct PhysParams {
    double alpha = 1.0;     ///< parallel resistivity
    double kappa = 0.0;     ///< density-gradient drive
    double beta_phi = 1e-3; ///< viscosity
    double beta_rho = 1e-3; ///< diffusion
    int p = 1;              ///< dissipation order, 1 or 2
    int n = 16;             ///< half lattice size

    int m() const { return 2 * n; }

    /// Throws DomainError unless alpha, beta_phi, beta_rho > 0, kappa >= 0, p in {1,2}, n >= 1.
    void validate() const;
};

} // namespace hwcm
