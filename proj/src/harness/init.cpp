#include "hwcm/harness/init.hpp"

#include "hwcm/errors.hpp"
#include "hwcm/spectral/nonlinear.hpp"
#include "hwcm/spectral/sine.hpp"

#include <cmath>
#include <iostream>
#include <numbers>

namespace hwcm {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stores v at k and conj(v) at -k.
void set_pair(SpectralField& f, ModeIndex k, cplx v) {
    f[k] = v;
    f[-k] = std::conj(v);
}

// Canonical member of the pair {k, -k}.
bool is_canonical(ModeIndex k) { return k.kx > 0 || (k.kx == 0 && k.ky > 0); }

StateVector box(std::uint64_t seed, int n, int ky_min, double radius) {
    if (n < 6) throw DomainError("initial-condition box needs n >= 6");
    SpectralField phi(n);
    for (int kx = -5; kx <= 5; ++kx) {
        for (int ky = -5; ky <= 5; ++ky) {
            const ModeIndex k{kx, ky};
            if (std::abs(ky) < ky_min || !is_canonical(k)) continue;
            set_pair(phi, k, disk_draw(seed, k, radius));
        }
    }
    return StateVector(phi, phi);
}

} // namespace

double counter_uniform(std::uint64_t seed, int kx, int ky, std::uint32_t stream) {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ static_cast<std::uint32_t>(kx));
    h = splitmix64(h ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(ky)) << 1));
    h = splitmix64(h ^ (static_cast<std::uint64_t>(stream) << 2));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

cplx disk_draw(std::uint64_t seed, ModeIndex k, double radius) {
    const double r = radius * std::sqrt(counter_uniform(seed, k.kx, k.ky, 0));
    const double th = 2.0 * std::numbers::pi * counter_uniform(seed, k.kx, k.ky, 1);
    return std::polar(r, th);
}

StateVector init_box_random(std::uint64_t seed, int n, double cap) { return box(seed, n, 1, cap); }

StateVector init_model_gamma(std::uint64_t seed, int n, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
    StateVector s = box(seed, n, 2, gamma);
    set_pair(s.phi, {0, 1}, 0.1);
    set_pair(s.rho, {0, 1}, 0.1);
    return s;
}

double mean_abs_physical(const SpectralField& f) {
    const auto u = to_physical(f);
    double sum = 0.0;
    for (const auto& v : u) sum += std::abs(v);
    return sum / static_cast<double>(u.size());
}

StateVector init_zero_bc(std::uint64_t seed, int n, double s) {
    if (!(s > 0.0)) throw DomainError("scale s must be positive");
    const int m = 2 * n;
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        const std::uint64_t key = seed + attempt;
        std::vector<cplx> grid(static_cast<std::size_t>(m) * m);
        for (int k = 1; k <= 4; ++k) {
            const double g = 2.0 * counter_uniform(key, k, 0, 2) - 1.0;
            const double h = 2.0 * counter_uniform(key, k, 0, 3) - 1.0;
            for (int a = 0; a < m; ++a) {
                const double xa = 2.0 * std::numbers::pi * k * a / m;
                for (int b = 0; b < m; ++b) {
                    const double yb = 2.0 * std::numbers::pi * k * b / m;
                    grid[static_cast<std::size_t>(a) * m + b] += g * h * std::sin(xa) * std::sin(yb) + std::cos(xa);
                }
            }
        }
        SpectralField phi = enforce_hermitian(project_odd_x(from_physical(grid, n)));
        const double norm = mean_abs_physical(phi);
        if (norm > 1e-12) {
            phi *= s / norm;
            return StateVector(phi, phi);
        }
        std::clog << "init_zero_bc: degenerate draw for seed " << key << ", redrawing\n";
    }
    throw DomainError("init_zero_bc: no usable draw");
}

} // namespace hwcm
