#include "hwcm/spectral/kernels.hpp"

#include "hwcm/errors.hpp"

#include <algorithm>

namespace hwcm::kernels {

namespace {

// Shared by both variants so the summation order is identical.
inline cplx convolve_one(const SpectralField& f, const SpectralField& g, SecondFactorWeight w,
                         ModeIndex k) {
    const int n = f.n();
    cplx acc{};
    const int qx_lo = std::max(-n, k.kx - n + 1);
    const int qx_hi = std::min(n - 1, k.kx + n);
    const int qy_lo = std::max(-n, k.ky - n + 1);
    const int qy_hi = std::min(n - 1, k.ky + n);
    for (int qx = qx_lo; qx <= qx_hi; ++qx) {
        for (int qy = qy_lo; qy <= qy_hi; ++qy) {
            const ModeIndex q{qx, qy};
            const ModeIndex r = k - q;
            const double weight = bracket_weight(k, q);
            if (weight == 0.0) continue;
            const double second =
                w == SecondFactorWeight::k_squared ? static_cast<double>(r.k2()) : 1.0;
            acc += (weight * second) * (f[q] * g[r]);
        }
    }
    return acc;
}

} // namespace

cplx convolve_mode(const SpectralField& f, const SpectralField& g, SecondFactorWeight w,
                   ModeIndex k) {
    return convolve_one(f, g, w, k);
}

void convolve_serial(const SpectralField& f, const SpectralField& g, SecondFactorWeight w,
                     SpectralField& out) {
    require_same_lattice(f, g);
    out = SpectralField(f.n());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out.data()[i] = convolve_one(f, g, w, out.mode_at(i));
    }
}

} // namespace hwcm::kernels
