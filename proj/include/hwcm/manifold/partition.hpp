#pragma once

#include "hwcm/linear/eigen.hpp"

#include <vector>

namespace hwcm {

/// One eigen-coordinate: a mode and one of its two eigenvalues.
struct EigenSlot {
    ModeIndex mode;
    Branch branch = Branch::plus;
    bool operator==(const EigenSlot&) const = default;
};

/// Split of all 2 m^2 eigen-coordinates into centre (|Re lambda| < tol) and stable lists.
struct ModePartition {
    int n = 0;
    double tol = 0.0;
    std::vector<EigenSlot> centre;
    std::vector<EigenSlot> stable;

    std::size_t a() const { return centre.size(); }
    std::size_t b() const { return stable.size(); }
    bool empty() const { return centre.empty(); }

    /// Position of a slot in the centre (resp. stable) list, or -1.
    int centre_index(EigenSlot s) const;
    int stable_index(EigenSlot s) const;
    /// Flat slot key used by the lookup tables: 2 * storage index + branch.
    std::size_t key(EigenSlot s) const;

    std::vector<int> centre_lookup; ///< indexed by key()
    std::vector<int> stable_lookup;
};

/// Centre set: all (k, branch) with |Re lambda| < tol, closed under k -> -k.
/// The zero mode and Nyquist modes are never centre. Centre entries are
/// ordered by |Re lambda| (computed on the representative (|kx|, |ky|) so
/// symmetric modes tie exactly), then kx, ky, branch. Stable entries follow
/// storage order. An empty centre list is returned, not thrown.
ModePartition partition(const PhysParams& params, double tol = 1e-9);

} // namespace hwcm
