#pragma once

#include "hwcm/spectral/field.hpp"
#include "hwcm/spectral/params.hpp"

#include <Eigen/Dense>

#include <utility>

namespace hwcm {

enum class Branch { plus = 0, minus = 1 };

/// Per-mode entries of the linear operator:
/// d/dt [Phi_k; R_k] = [[a, b], [c, d]] [Phi_k; R_k].
struct ModeBlocks {
    cplx a;
    cplx b;
    cplx c;
    cplx d;

    Eigen::Matrix2cd matrix() const {
        Eigen::Matrix2cd mat;
        mat << a, b, c, d;
        return mat;
    }
};

ModeBlocks mode_blocks(ModeIndex k, const PhysParams& params);

/// Closed-form eigen-decomposition of one 2x2 mode block.
struct ModeEigenSystem {
    cplx lambda_plus;
    cplx lambda_minus;
    cplx u_plus;  ///< eigenvector (u_plus, 1) for lambda_plus
    cplx u_minus; ///< eigenvector (u_minus, 1) for lambda_minus
    cplx e;       ///< 1 / (lambda_plus - lambda_minus); infinite when degenerate
    ModeBlocks blocks;

    cplx lambda(Branch b) const { return b == Branch::plus ? lambda_plus : lambda_minus; }
    cplx u(Branch b) const { return b == Branch::plus ? u_plus : u_minus; }
};

/// (lambda_plus, lambda_minus) = (tr +- sqrt(tr^2 - 4 det)) / 2 with the
/// principal square root. The smaller-magnitude root is recovered from
/// det / (larger root) to avoid cancellation.
std::pair<cplx, cplx> eigenvalues(const ModeBlocks& blk);
std::pair<cplx, cplx> eigenvalues(ModeIndex k, const PhysParams& params);

/// Eigenvector (u, 1) with u = -b / (a - lambda). Throws std::logic_error if
/// a == lambda, which positive parameters rule out.
std::pair<cplx, cplx> eigenvector(ModeIndex k, Branch which, const PhysParams& params);

ModeEigenSystem mode_eigensystem(ModeIndex k, const PhysParams& params);

} // namespace hwcm
