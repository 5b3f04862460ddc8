#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace hwcm {

/// Wavenumber pair (kx, ky) on the lattice [-n, n)^2.
struct ModeIndex {
    int kx = 0;
    int ky = 0;

    constexpr std::int64_t k2() const {
        return static_cast<std::int64_t>(kx) * kx + static_cast<std::int64_t>(ky) * ky;
    }
    constexpr bool is_zero() const { return kx == 0 && ky == 0; }
    constexpr ModeIndex operator-() const { return {-kx, -ky}; }
    constexpr ModeIndex operator+(ModeIndex o) const { return {kx + o.kx, ky + o.ky}; }
    constexpr ModeIndex operator-(ModeIndex o) const { return {kx - o.kx, ky - o.ky}; }

    constexpr auto operator<=>(const ModeIndex&) const = default;
};

/// True when both indices lie in [-n, n).
constexpr bool in_lattice(ModeIndex k, int n) {
    return k.kx >= -n && k.kx < n && k.ky >= -n && k.ky < n;
}

/// True when either index is the unpaired Nyquist value -n.
constexpr bool is_nyquist(ModeIndex k, int n) { return k.kx == -n || k.ky == -n; }

/// Regularised squared wavenumber: k^2, or 8n^2 at the zero mode.
/// Throws DomainError when |kx| > n or |ky| > n.
double k2_plus(ModeIndex k, int n);

/// (k^2)^p, the symbol of the hyper-diffusion; zero at the origin.
double k_pow(ModeIndex k, int p);

/// Bracket weight kx*qy - qx*ky appearing in the convolution sums.
constexpr double bracket_weight(ModeIndex k, ModeIndex q) {
    return static_cast<double>(k.kx) * q.ky - static_cast<double>(q.kx) * k.ky;
}

} // namespace hwcm

template <>
struct std::hash<hwcm::ModeIndex> {
    std::size_t operator()(const hwcm::ModeIndex& k) const noexcept {
        return std::hash<std::int64_t>{}((static_cast<std::int64_t>(k.kx) << 32) ^
                                         static_cast<std::uint32_t>(k.ky));
    }
};
