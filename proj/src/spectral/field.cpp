#include "hwcm/spectral/field.hpp"

#include "hwcm/errors.hpp"
#include "hwcm/spectral/params.hpp"

#include <cmath>
#include <string>

namespace hwcm {

void PhysParams::validate() const {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    if (!(beta_phi > 0.0)) throw DomainError("beta_phi must be positive");
    if (!(beta_rho > 0.0)) throw DomainError("beta_rho must be positive");
    if (!(kappa >= 0.0)) throw DomainError("kappa must be non-negative");
    if (p != 1 && p != 2) throw DomainError("dissipation order p must be 1 or 2");
    if (n < 1) throw DomainError("half lattice size n must be positive");
}

double k2_plus(ModeIndex k, int n) {
    if (std::abs(k.kx) > n || std::abs(k.ky) > n) {
        throw DomainError("mode (" + std::to_string(k.kx) + "," + std::to_string(k.ky) +
                          ") outside lattice of half size " + std::to_string(n));
    }
    const auto k2 = k.k2();
    return k2 != 0 ? static_cast<double>(k2) : 8.0 * n * n;
}

double k_pow(ModeIndex k, int p) {
    const double k2 = static_cast<double>(k.k2());
    return p == 1 ? k2 : std::pow(k2, p);
}

SpectralField::SpectralField(int n) : n_(n), data_(static_cast<std::size_t>(4) * n * n) {
    if (n < 1) throw DomainError("lattice half size must be positive");
}

cplx& SpectralField::at(ModeIndex k) {
    if (!in_lattice(k, n_)) throw DomainError("mode outside lattice");
    return data_[index(k)];
}

const cplx& SpectralField::at(ModeIndex k) const {
    if (!in_lattice(k, n_)) throw DomainError("mode outside lattice");
    return data_[index(k)];
}

double SpectralField::max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double SpectralField::l2_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

bool SpectralField::is_finite() const {
    for (const auto& v : data_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
}

void require_same_lattice(const SpectralField& a, const SpectralField& b) {
    if (a.n() != b.n()) {
        throw DomainError("lattice mismatch: n=" + std::to_string(a.n()) + " vs n=" +
                          std::to_string(b.n()));
    }
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    require_same_lattice(*this, o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    require_same_lattice(*this, o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

SpectralField& SpectralField::operator*=(cplx s) {
    for (auto& v : data_) v *= s;
    return *this;
}

StateVector::StateVector(SpectralField p, SpectralField r) : phi(std::move(p)), rho(std::move(r)) {
    require_same_lattice(phi, rho);
}

double StateVector::max_abs() const { return std::max(phi.max_abs(), rho.max_abs()); }

StateVector& StateVector::operator+=(const StateVector& o) {
    phi += o.phi;
    rho += o.rho;
    return *this;
}

StateVector& StateVector::operator-=(const StateVector& o) {
    phi -= o.phi;
    rho -= o.rho;
    return *this;
}

StateVector& StateVector::operator*=(cplx s) {
    phi *= s;
    rho *= s;
    return *this;
}

double hermitian_defect(const SpectralField& f) {
    const int n = f.n();
    double worst = 0.0;
    for (int kx = -n + 1; kx < n; ++kx) {
        for (int ky = -n + 1; ky < n; ++ky) {
            const ModeIndex k{kx, ky};
            worst = std::max(worst, std::abs(f[-k] - std::conj(f[k])));
        }
    }
    return worst;
}

SpectralField enforce_hermitian(const SpectralField& f) {
    const int n = f.n();
    SpectralField out(n);
    for (int kx = -n + 1; kx < n; ++kx) {
        for (int ky = -n + 1; ky < n; ++ky) {
            const ModeIndex k{kx, ky};
            out[k] = 0.5 * (f[k] + std::conj(f[-k]));
        }
    }
    out[ModeIndex{0, 0}] = 0.0;
    return out;
}

StateVector enforce_hermitian(const StateVector& s) {
    return StateVector(enforce_hermitian(s.phi), enforce_hermitian(s.rho));
}

} // namespace hwcm
