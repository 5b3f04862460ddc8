#include "hwcm/spectral/kernels.hpp"

namespace hwcm::kernels {

void convolve_parallel(const SpectralField& f, const SpectralField& g, SecondFactorWeight w,
                       SpectralField& out) {
    require_same_lattice(f, g);
    out = SpectralField(f.n());
    const auto total = static_cast<long>(out.size());
    auto data = out.data();
#pragma omp parallel for schedule(static)
    for (long i = 0; i < total; ++i) {
        data[i] = convolve_mode(f, g, w, out.mode_at(static_cast<std::size_t>(i)));
    }
}

} // namespace hwcm::kernels
