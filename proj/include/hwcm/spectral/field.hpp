#pragma once

#include "hwcm/spectral/mode.hpp"

#include <complex>
#include <span>
#include <vector>

namespace hwcm {

using cplx = std::complex<double>;

/// Complex Fourier coefficients on the m x m lattice, m = 2n.
///
/// Storage is kx-major with the usual FFT wraparound: mode (kx, ky) lives at
/// row (kx mod m), column (ky mod m). Synthesis carries no normalisation:
/// u(x, y) = sum_k U_k exp(i kx x) exp(i ky y).
class SpectralField {
public:
    SpectralField() = default;
    explicit SpectralField(int n);

    static SpectralField zeros(int n) { return SpectralField(n); }

    int n() const { return n_; }
    int m() const { return 2 * n_; }
    std::size_t size() const { return data_.size(); }

    /// Flat storage index of an in-lattice mode (no range check).
    std::size_t index(ModeIndex k) const {
        const int mm = m();
        const int i = k.kx < 0 ? k.kx + mm : k.kx;
        const int j = k.ky < 0 ? k.ky + mm : k.ky;
        return static_cast<std::size_t>(i) * mm + j;
    }
    /// Mode stored at flat index.
    ModeIndex mode_at(std::size_t flat) const {
        const int mm = m();
        const int i = static_cast<int>(flat / mm);
        const int j = static_cast<int>(flat % mm);
        return {i < n_ ? i : i - mm, j < n_ ? j : j - mm};
    }

    cplx& operator[](ModeIndex k) { return data_[index(k)]; }
    const cplx& operator[](ModeIndex k) const { return data_[index(k)]; }

    /// Range-checked access; throws DomainError outside [-n, n)^2.
    cplx& at(ModeIndex k);
    const cplx& at(ModeIndex k) const;

    /// Value at k, or zero when k is outside the lattice.
    cplx get_or_zero(ModeIndex k) const {
        return in_lattice(k, n_) ? data_[index(k)] : cplx{};
    }

    std::span<cplx> data() { return data_; }
    std::span<const cplx> data() const { return data_; }

    double max_abs() const;
    double l2_norm() const;
    bool is_finite() const;

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(cplx s);

    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(cplx s, SpectralField a) { return a *= s; }

    bool operator==(const SpectralField&) const = default;

private:
    int n_ = 0;
    std::vector<cplx> data_;
};

/// Stacked [Phi; R] state of the spectral system.
struct StateVector {
    SpectralField phi;
    SpectralField rho;

    StateVector() = default;
    explicit StateVector(int n) : phi(n), rho(n) {}
    StateVector(SpectralField p, SpectralField r);

    int n() const { return phi.n(); }
    double max_abs() const;
    bool is_finite() const { return phi.is_finite() && rho.is_finite(); }

    StateVector& operator+=(const StateVector& o);
    StateVector& operator-=(const StateVector& o);
    StateVector& operator*=(cplx s);
    friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
    friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
    friend StateVector operator*(cplx s, StateVector a) { return a *= s; }
    bool operator==(const StateVector&) const = default;
};

/// Throws DomainError when the two fields live on different lattices.
void require_same_lattice(const SpectralField& a, const SpectralField& b);

/// Largest |U_{-k} - conj(U_k)| over pairs with both indices in range (Nyquist excluded).
double hermitian_defect(const SpectralField& f);

/// Hermitian projection: averages each (k, -k) pair, zeroes the Nyquist row and
/// column and the zero mode. Idempotent.
SpectralField enforce_hermitian(const SpectralField& f);
StateVector enforce_hermitian(const StateVector& s);

} // namespace hwcm
