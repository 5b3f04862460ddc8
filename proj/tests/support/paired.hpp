#pragma once

#include "hwcm/manifold/reduced.hpp"

#include <random>

namespace oracle {

// Conjugate-paired centre amplitudes.
inline std::vector<hwcm::cplx> paired_state(const hwcm::ReducedSystem& sys, double amp, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-amp, amp);
    std::vector<hwcm::cplx> x(sys.a());
    std::vector<bool> done(sys.a(), false);
    for (std::size_t j = 0; j < sys.a(); ++j) {
        if (done[j]) continue;
        const auto s = sys.part.centre[j];
        const int mirror = sys.part.centre_index({-s.mode, s.branch});
        x[j] = {u(rng), u(rng)};
        done[j] = true;
        if (mirror >= 0) {
            x[static_cast<std::size_t>(mirror)] = std::conj(x[j]);
            done[static_cast<std::size_t>(mirror)] = true;
        }
    }
    return x;
}

} // namespace oracle
