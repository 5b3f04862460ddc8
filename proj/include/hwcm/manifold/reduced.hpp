#pragma once

#include "hwcm/manifold/partition.hpp"
#include "hwcm/manifold/projection.hpp"

#include <Eigen/Sparse>

#include <span>
#include <vector>

namespace hwcm {

using SparseC = Eigen::SparseMatrix<cplx>;

/// Coefficient of X_j1 X_j2 in the projected nonlinearity at one target slot.
struct QuadF {
    EigenSlot target;
    std::size_t j1 = 0;
    std::size_t j2 = 0;
    cplx f;
};

/// Quadratic manifold coefficient xi = f / c for a stable target row.
struct QuadXi {
    std::size_t row = 0; ///< stable index
    std::size_t j1 = 0;
    std::size_t j2 = 0;
    cplx f;
    cplx c;
    cplx xi;
};

/// Centre-manifold reduction around a critical parameter value.
/// psi(X, eps) = eps Psi_L X + Psi_N(X), Psi_N(X)_i = sum xi_(i,j1,j2) X_j1 X_j2.
struct ReducedSystem {
    PhysParams params; ///< operator parameters at epsilon_star
    SuspensionSpec suspension;
    double epsilon = 0.0; ///< eps at which f, c and xi were evaluated
    ModePartition part;
    Projection projection;
    ModeMatrices m_modes;

    std::vector<cplx> lambda_x;
    std::vector<cplx> lambda_y;
    SparseC m11, m12, m21, m22;
    SparseC psi_l; ///< b x a
    std::vector<QuadF> f_table;
    std::vector<QuadXi> xi;

    std::size_t a() const { return part.a(); }
    std::size_t b() const { return part.b(); }
};

/// Builds the reduction with the suspended parameter pinned at its value in
/// `params_star`. Throws DegenerateError for an empty centre set, coincident
/// eigenvalues or |Lambda_X - Lambda_Y| < 1e-13, and for near-resonant
/// |c| < 1e-13 (message names the triple).
ReducedSystem build_reduced_system(const PhysParams& params_star, SuspendedParam which,
                                   double eps = 0.0, double tol = 1e-9);

/// Same system with f, c and xi re-evaluated at another eps.
ReducedSystem rebind_epsilon(const ReducedSystem& sys, double eps);

/// (Psi_L)_ij = M21_ij / (Lambda_X_j - Lambda_Y_i).
SparseC psi_linear(const SparseC& m21, const std::vector<cplx>& lambda_x,
                   const std::vector<cplx>& lambda_y);

/// Psi(X, eps) as a sparse list of (stable row, value).
std::vector<std::pair<std::size_t, cplx>> manifold_map(const ReducedSystem& sys,
                                                       std::span<const cplx> x, double eps);

/// Reduced right-hand side
/// Lambda_X X + eps M11 X + eps^2 M12 Psi_L X + eps M12 Psi_N(X) + [I 0] Fbar(X, Psi(X, eps)),
/// with Fbar evaluated exactly from the embedded physical state.
std::vector<cplx> reduced_rhs(const ReducedSystem& sys, std::span<const cplx> x, double eps);

/// Options for tests: drop the Fbar term.
std::vector<cplx> reduced_rhs_linear(const ReducedSystem& sys, std::span<const cplx> x, double eps);

/// Norm of D Psi . Xdot - Ydot on the manifold, where Xdot and Ydot are the
/// full suspended dynamics evaluated at (X, Psi(X, eps)).
double manifold_residual(const ReducedSystem& sys, std::span<const cplx> x, double eps);

/// X-linear coefficient of centre row j: lambda + eps * eps1 + eps^2 * eps2.
struct LinearCoefficient {
    EigenSlot slot;
    cplx lambda;
    cplx eps1;
    cplx eps2;
};
std::vector<LinearCoefficient> linear_coefficients(const ReducedSystem& sys);

/// Physical state of centre amplitudes X lifted by Psi(X, eps).
StateVector lift(const ReducedSystem& sys, std::span<const cplx> x, double eps);
/// Centre amplitudes of a full state, X = [I 0] Q [Phi; R].
std::vector<cplx> centre_coordinates(const ReducedSystem& sys, const StateVector& s);

} // namespace hwcm
