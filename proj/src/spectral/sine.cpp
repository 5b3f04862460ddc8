#include "hwcm/spectral/sine.hpp"

#include "hwcm/errors.hpp"
#include "hwcm/spectral/nonlinear.hpp"

namespace hwcm {

HalfField make_half_field(int n) {
    if (n < 2) throw DomainError("half field needs n >= 2");
    return HalfField{n, std::vector<double>(static_cast<std::size_t>(n - 1) * 2 * n, 0.0)};
}

SpectralField sin_embed(const HalfField& half) {
    const int n = half.n;
    const int m = 2 * n;
    if (half.values.size() != static_cast<std::size_t>(n - 1) * m) {
        throw DomainError("half field has wrong number of samples");
    }
    std::vector<cplx> grid(static_cast<std::size_t>(m) * m, 0.0);
    for (int a = 1; a < n; ++a) {
        for (int b = 0; b < m; ++b) {
            grid[static_cast<std::size_t>(a) * m + b] = half(a, b);
            grid[static_cast<std::size_t>(m - a) * m + b] = -half(a, b);
        }
    }
    return project_odd_x(from_physical(grid, n));
}

SpectralField project_odd_x(const SpectralField& f) {
    const int n = f.n();
    SpectralField out(n);
    for (int kx = -n + 1; kx < n; ++kx) {
        for (int ky = -n + 1; ky < n; ++ky) {
            out[{kx, ky}] = 0.5 * (f[{kx, ky}] - f[{-kx, ky}]);
        }
    }
    return out;
}

StateVector project_odd_x(const StateVector& s) {
    return StateVector(project_odd_x(s.phi), project_odd_x(s.rho));
}

double odd_x_defect(const SpectralField& f) {
    const int n = f.n();
    double worst = 0.0;
    for (int kx = -n + 1; kx < n; ++kx) {
        for (int ky = -n + 1; ky < n; ++ky) {
            worst = std::max(worst, std::abs(f[{kx, ky}] + f[{-kx, ky}]));
        }
    }
    return worst;
}

} // namespace hwcm
