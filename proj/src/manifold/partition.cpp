#include "hwcm/manifold/partition.hpp"

#include "hwcm/errors.hpp"

#include <algorithm>
#include <cmath>

namespace hwcm {

std::size_t ModePartition::key(EigenSlot s) const {
    const int m = 2 * n;
    const auto row = static_cast<std::size_t>(s.mode.kx < 0 ? s.mode.kx + m : s.mode.kx);
    const auto col = static_cast<std::size_t>(s.mode.ky < 0 ? s.mode.ky + m : s.mode.ky);
    return 2 * (row * m + col) + static_cast<std::size_t>(s.branch);
}

int ModePartition::centre_index(EigenSlot s) const {
    return in_lattice(s.mode, n) ? centre_lookup[key(s)] : -1;
}

int ModePartition::stable_index(EigenSlot s) const {
    return in_lattice(s.mode, n) ? stable_lookup[key(s)] : -1;
}

ModePartition partition(const PhysParams& params, double tol) {
    if (!(tol > 0.0)) throw DomainError("partition tolerance must be positive");
    ModePartition part;
    part.n = params.n;
    part.tol = tol;
    const int n = params.n;

    auto re_abs = [&](ModeIndex k, Branch b) {
        const auto [lp, lm] = eigenvalues({std::abs(k.kx), std::abs(k.ky)}, params);
        return std::abs((b == Branch::plus ? lp : lm).real());
    };

    struct Candidate {
        double key;
        EigenSlot slot;
    };
    std::vector<Candidate> centre;
    SpectralField probe(n);
    for (std::size_t i = 0; i < probe.size(); ++i) {
        const ModeIndex k = probe.mode_at(i);
        if (k.is_zero() || is_nyquist(k, n)) continue;
        for (Branch b : {Branch::plus, Branch::minus}) {
            const double r = re_abs(k, b);
            if (r < tol) centre.push_back({r, {k, b}});
        }
    }
    // Closure under k -> -k: the representative key already makes the test
    // symmetric, so this only guards against future changes to re_abs.
    const auto snapshot = centre;
    for (const auto& c : snapshot) {
        const EigenSlot mirror{-c.slot.mode, c.slot.branch};
        const bool present = std::any_of(centre.begin(), centre.end(),
                                          [&](const Candidate& o) { return o.slot == mirror; });
        if (!present) centre.push_back({c.key, mirror});
    }
    std::sort(centre.begin(), centre.end(), [](const Candidate& x, const Candidate& y) {
        if (x.key != y.key) return x.key < y.key;
        if (x.slot.mode.kx != y.slot.mode.kx) return x.slot.mode.kx < y.slot.mode.kx;
        if (x.slot.mode.ky != y.slot.mode.ky) return x.slot.mode.ky < y.slot.mode.ky;
        return x.slot.branch < y.slot.branch;
    });

    const std::size_t slots = 2 * probe.size();
    part.centre_lookup.assign(slots, -1);
    part.stable_lookup.assign(slots, -1);
    for (const auto& c : centre) {
        part.centre_lookup[part.key(c.slot)] = static_cast<int>(part.centre.size());
        part.centre.push_back(c.slot);
    }
    for (std::size_t i = 0; i < probe.size(); ++i) {
        for (Branch b : {Branch::plus, Branch::minus}) {
            const EigenSlot s{probe.mode_at(i), b};
            if (part.centre_lookup[part.key(s)] >= 0) continue;
            part.stable_lookup[part.key(s)] = static_cast<int>(part.stable.size());
            part.stable.push_back(s);
        }
    }
    return part;
}

} // namespace hwcm
