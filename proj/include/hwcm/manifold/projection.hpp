#pragma once

#include "hwcm/linear/eigen.hpp"

#include <string_view>
#include <vector>

namespace hwcm {

/// Eigenbasis of one mode: columns of P are (u+, 1) and (u-, 1).
struct ModeProjection {
    Eigen::Matrix2cd p;
    Eigen::Matrix2cd p_inv;
    cplx lambda[2]; ///< indexed by Branch
};

/// Block-diagonal change of basis to eigen-coordinates over the whole lattice.
class Projection {
public:
    Projection() = default;
    Projection(int n, std::vector<ModeProjection> blocks) : n_(n), blocks_(std::move(blocks)) {}

    int n() const { return n_; }
    const ModeProjection& at(ModeIndex k) const { return blocks_[flat(k)]; }
    const std::vector<ModeProjection>& blocks() const { return blocks_; }
    std::size_t flat(ModeIndex k) const {
        const int m = 2 * n_;
        return static_cast<std::size_t>(k.kx < 0 ? k.kx + m : k.kx) * m + (k.ky < 0 ? k.ky + m : k.ky);
    }

private:
    int n_ = 0;
    std::vector<ModeProjection> blocks_;
};

/// Throws DegenerateError when |lambda+ - lambda-| < 1e-13 max(|lambda+|, |lambda-|) at any mode.
Projection build_projection(const PhysParams& params);

/// Eigen-coordinates of a state: w_k = P_k^-1 [Phi_k; R_k]; returned as (plus, minus) fields.
StateVector to_eigen_coords(const StateVector& s, const Projection& proj);
StateVector from_eigen_coords(const StateVector& w, const Projection& proj);

enum class SuspendedParam { alpha, kappa, beta_phi, beta_rho };

std::string_view to_string(SuspendedParam p);
SuspendedParam suspended_param_from_string(std::string_view s);

/// One scalar parameter promoted to a state variable: eps = value - epsilon_star.
/// G is the derivative of the linear operator with respect to that parameter.
struct SuspensionSpec {
    SuspendedParam which = SuspendedParam::alpha;
    double epsilon_star = 0.0;

    Eigen::Matrix2cd g_block(ModeIndex k, const PhysParams& params) const;
    /// G applied to a whole state.
    StateVector apply(const StateVector& s, const PhysParams& params) const;
    /// Parameters with the suspended value set to epsilon_star + eps.
    PhysParams at(const PhysParams& base, double eps) const;
};

/// Per-mode 2x2 blocks of M = Q G Q^-1 in eigen-coordinates (branch order +, -).
using ModeMatrices = std::vector<Eigen::Matrix2cd>;

/// Explicit formula P^-1 G P entry by entry.
ModeMatrices build_M(const SuspensionSpec& s, const Projection& proj, const PhysParams& params);
/// Same quantity by applying G to the eigenvector fields and projecting back.
ModeMatrices build_M_assembled(const SuspensionSpec& s, const Projection& proj,
                               const PhysParams& params);

} // namespace hwcm
