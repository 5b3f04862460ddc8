#include "hwcm/manifold/projection.hpp"

#include "hwcm/errors.hpp"

#include <sstream>

namespace hwcm {

Projection build_projection(const PhysParams& params) {
    const int n = params.n;
    const int m = params.m();
    std::vector<ModeProjection> blocks(static_cast<std::size_t>(m) * m);
    SpectralField probe(n);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const ModeIndex k = probe.mode_at(i);
        const auto es = mode_eigensystem(k, params);
        const double scale = std::max(std::abs(es.lambda_plus), std::abs(es.lambda_minus));
        if (std::abs(es.lambda_plus - es.lambda_minus) < 1e-13 * scale) {
            std::ostringstream msg;
            msg << "coincident eigenvalues at mode (" << k.kx << "," << k.ky << "): " << es.lambda_plus;
            throw DegenerateError(msg.str());
        }
        auto& b = blocks[i];
        b.p << es.u_plus, es.u_minus, 1.0, 1.0;
        const cplx det = es.u_plus - es.u_minus;
        b.p_inv << 1.0 / det, -es.u_minus / det, -1.0 / det, es.u_plus / det;
        b.lambda[0] = es.lambda_plus;
        b.lambda[1] = es.lambda_minus;
    }
    return Projection(n, std::move(blocks));
}

StateVector to_eigen_coords(const StateVector& s, const Projection& proj) {
    StateVector w(s.n());
    for (std::size_t i = 0; i < s.phi.size(); ++i) {
        const Eigen::Vector2cd v(s.phi.data()[i], s.rho.data()[i]);
        const Eigen::Vector2cd out = proj.blocks()[i].p_inv * v;
        w.phi.data()[i] = out(0);
        w.rho.data()[i] = out(1);
    }
    return w;
}

StateVector from_eigen_coords(const StateVector& w, const Projection& proj) {
    StateVector s(w.n());
    for (std::size_t i = 0; i < w.phi.size(); ++i) {
        const Eigen::Vector2cd v(w.phi.data()[i], w.rho.data()[i]);
        const Eigen::Vector2cd out = proj.blocks()[i].p * v;
        s.phi.data()[i] = out(0);
        s.rho.data()[i] = out(1);
    }
    return s;
}

std::string_view to_string(SuspendedParam p) {
    switch (p) {
    case SuspendedParam::alpha: return "alpha";
    case SuspendedParam::kappa: return "kappa";
    case SuspendedParam::beta_phi: return "beta_phi";
    case SuspendedParam::beta_rho: return "beta_rho";
    }
    return "?";
}

SuspendedParam suspended_param_from_string(std::string_view s) {
    for (auto p : {SuspendedParam::alpha, SuspendedParam::kappa, SuspendedParam::beta_phi,
                   SuspendedParam::beta_rho}) {
        if (to_string(p) == s) return p;
    }
    throw DomainError("unknown suspended parameter '" + std::string(s) + "'");
}

Eigen::Matrix2cd SuspensionSpec::g_block(ModeIndex k, const PhysParams& params) const {
    Eigen::Matrix2cd g = Eigen::Matrix2cd::Zero();
    switch (which) {
    case SuspendedParam::alpha: {
        const double inv = 1.0 / k2_plus(k, params.n);
        g << -inv, inv, 1.0, -1.0;
        break;
    }
    case SuspendedParam::kappa: g(1, 0) = cplx(0.0, -static_cast<double>(k.ky)); break;
    case SuspendedParam::beta_phi: g(0, 0) = -k_pow(k, params.p); break;
    case SuspendedParam::beta_rho: g(1, 1) = -k_pow(k, params.p); break;
    }
    return g;
}

StateVector SuspensionSpec::apply(const StateVector& s, const PhysParams& params) const {
    const int n = s.n();
    StateVector out(n);
    for (std::size_t i = 0; i < s.phi.size(); ++i) {
        const ModeIndex k = s.phi.mode_at(i);
        const cplx phi = s.phi.data()[i];
        const cplx rho = s.rho.data()[i];
        cplx dphi{}, drho{};
        switch (which) {
        case SuspendedParam::alpha:
            dphi = (rho - phi) / k2_plus(k, n);
            drho = phi - rho;
            break;
        case SuspendedParam::kappa: drho = cplx(0.0, -static_cast<double>(k.ky)) * phi; break;
        case SuspendedParam::beta_phi: dphi = -k_pow(k, params.p) * phi; break;
        case SuspendedParam::beta_rho: drho = -k_pow(k, params.p) * rho; break;
        }
        out.phi.data()[i] = dphi;
        out.rho.data()[i] = drho;
    }
    return out;
}

PhysParams SuspensionSpec::at(const PhysParams& base, double eps) const {
    PhysParams p = base;
    const double v = epsilon_star + eps;
    switch (which) {
    case SuspendedParam::alpha: p.alpha = v; break;
    case SuspendedParam::kappa: p.kappa = v; break;
    case SuspendedParam::beta_phi: p.beta_phi = v; break;
    case SuspendedParam::beta_rho: p.beta_rho = v; break;
    }
    return p;
}

ModeMatrices build_M(const SuspensionSpec& s, const Projection& proj, const PhysParams& params) {
    const int n = proj.n();
    ModeMatrices out(proj.blocks().size());
    SpectralField probe(n);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto g = s.g_block(probe.mode_at(i), params);
        const auto& pb = proj.blocks()[i];
        const cplx up = pb.p(0, 0), um = pb.p(0, 1);
        const cplx det = up - um;
        for (int j = 0; j < 2; ++j) {
            const cplx uj = j == 0 ? up : um;
            const cplx sj = g(0, 0) * uj + g(0, 1);
            const cplx tj = g(1, 0) * uj + g(1, 1);
            out[i](0, j) = (sj - um * tj) / det;
            out[i](1, j) = (up * tj - sj) / det;
        }
    }
    return out;
}

ModeMatrices build_M_assembled(const SuspensionSpec& s, const Projection& proj,
                               const PhysParams& params) {
    const int n = proj.n();
    ModeMatrices out(proj.blocks().size());
    for (int branch = 0; branch < 2; ++branch) {
        StateVector basis(n);
        for (std::size_t i = 0; i < out.size(); ++i) {
            basis.phi.data()[i] = proj.blocks()[i].p(0, branch);
            basis.rho.data()[i] = proj.blocks()[i].p(1, branch);
        }
        const StateVector image = to_eigen_coords(s.apply(basis, params), proj);
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i](0, branch) = image.phi.data()[i];
            out[i](1, branch) = image.rho.data()[i];
        }
    }
    return out;
}

} // namespace hwcm
