#include "hwcm/manifold/reduced.hpp"

#include "hwcm/errors.hpp"

#include <map>
#include <sstream>

namespace hwcm {

namespace {

using Vec2 = Eigen::Vector2cd;
using SparseState = std::map<ModeIndex, Vec2>;
using RowValues = std::vector<std::pair<std::size_t, cplx>>;

double suspended_value(const PhysParams& p, SuspendedParam which) {
    switch (which) {
    case SuspendedParam::alpha: return p.alpha;
    case SuspendedParam::kappa: return p.kappa;
    case SuspendedParam::beta_phi: return p.beta_phi;
    case SuspendedParam::beta_rho: return p.beta_rho;
    }
    return 0.0;
}

int br(Branch b) { return static_cast<int>(b); }

std::string slot_text(EigenSlot s) {
    std::ostringstream os;
    os << "((" << s.mode.kx << "," << s.mode.ky << ")," << (s.branch == Branch::plus ? '+' : '-') << ")";
    return os.str();
}

// Physical [Phi; R] of centre amplitudes plus stable amplitudes.
SparseState embed(const ReducedSystem& sys, std::span<const cplx> x, const RowValues& y) {
    SparseState s;
    auto add = [&](EigenSlot slot, cplx v) {
        const Vec2 col = sys.projection.at(slot.mode).p.col(br(slot.branch)) * v;
        auto [it, fresh] = s.try_emplace(slot.mode, col);
        if (!fresh) it->second += col;
    };
    for (std::size_t j = 0; j < x.size(); ++j) add(sys.part.centre[j], x[j]);
    for (const auto& [row, v] : y) add(sys.part.stable[row], v);
    return s;
}

// F(Phi, R) at mode k in eigen-coordinates, from the sparse convolution sums.
Vec2 projected_forcing(const ReducedSystem& sys, const SparseState& s, ModeIndex k) {
    cplx n1{}, n2{};
    for (const auto& [q, vq] : s) {
        const auto it = s.find(k - q);
        if (it == s.end()) continue;
        const double w = bracket_weight(k, q);
        if (w == 0.0) continue;
        const ModeIndex r = it->first;
        n1 += w * static_cast<double>(r.k2()) * vq(0) * it->second(0);
        n2 += w * vq(0) * it->second(1);
    }
    const Vec2 f(-n1 / k2_plus(k, sys.params.n), -n2);
    return sys.projection.at(k).p_inv * f;
}

bool valid_target(ModeIndex k, int n) { return in_lattice(k, n) && !is_nyquist(k, n) && !k.is_zero(); }

void add_sparse_column(const SparseC& m, std::size_t col, cplx scale, std::vector<cplx>& out) {
    for (SparseC::InnerIterator it(m, static_cast<Eigen::Index>(col)); it; ++it) {
        out[static_cast<std::size_t>(it.row())] += it.value() * scale;
    }
}

// Psi_N(X) as dense stable-row accumulation restricted to touched rows.
void add_quadratic(const ReducedSystem& sys, std::span<const cplx> x, std::map<std::size_t, cplx>& acc) {
    for (const auto& t : sys.xi) acc[t.row] += t.xi * x[t.j1] * x[t.j2];
}

RowValues to_rows(const std::map<std::size_t, cplx>& acc) { return {acc.begin(), acc.end()}; }

// Diagonal entry of M for a slot.
cplx m_diag(const ReducedSystem& sys, EigenSlot s) {
    return sys.m_modes[sys.projection.flat(s.mode)](br(s.branch), br(s.branch));
}

void build_quadratic(ReducedSystem& sys) {
    const auto& part = sys.part;
    const int n = sys.params.n;
    const double eps = sys.epsilon;
    const std::size_t a = part.a();

    // Centre embedding vectors e_j = P col + eps * sum_i Psi_L(i, j) P col_i (same mode).
    std::vector<Vec2> e(a);
    for (std::size_t j = 0; j < a; ++j) {
        const EigenSlot sj = part.centre[j];
        e[j] = sys.projection.at(sj.mode).p.col(br(sj.branch));
        for (SparseC::InnerIterator it(sys.psi_l, static_cast<Eigen::Index>(j)); it; ++it) {
            const EigenSlot si = part.stable[static_cast<std::size_t>(it.row())];
            if (si.mode != sj.mode) throw std::logic_error("Psi_L couples different modes");
            e[j] += eps * it.value() * sys.projection.at(si.mode).p.col(br(si.branch));
        }
    }

    sys.f_table.clear();
    sys.xi.clear();
    for (std::size_t j1 = 0; j1 < a; ++j1) {
        for (std::size_t j2 = 0; j2 < a; ++j2) {
            const ModeIndex m1 = part.centre[j1].mode;
            const ModeIndex m2 = part.centre[j2].mode;
            const ModeIndex k = m1 + m2;
            if (!valid_target(k, n)) continue;
            const double w = bracket_weight(k, m1);
            if (w == 0.0) continue;
            const cplx n1 = w * static_cast<double>(m2.k2()) * e[j1](0) * e[j2](0);
            const cplx n2 = w * e[j1](0) * e[j2](1);
            const Vec2 fv = sys.projection.at(k).p_inv * Vec2(-n1 / k2_plus(k, n), -n2);
            for (Branch b : {Branch::plus, Branch::minus}) {
                const EigenSlot target{k, b};
                sys.f_table.push_back({target, j1, j2, fv(br(b))});
                const int row = part.stable_index(target);
                if (row < 0) continue;
                const EigenSlot s1 = part.centre[j1], s2 = part.centre[j2];
                const cplx c = (sys.lambda_x[j1] + eps * m_diag(sys, s1)) +
                               (sys.lambda_x[j2] + eps * m_diag(sys, s2)) -
                               (sys.lambda_y[static_cast<std::size_t>(row)] + eps * m_diag(sys, target));
                if (std::abs(c) < 1e-13) {
                    throw DegenerateError("near-resonance |c| = " + std::to_string(std::abs(c)) +
                                          " for target " + slot_text(target) + " from " +
                                          slot_text(s1) + " x " + slot_text(s2));
                }
                sys.xi.push_back({static_cast<std::size_t>(row), j1, j2, fv(br(b)), c, fv(br(b)) / c});
            }
        }
    }
}

void assert_identities(const ReducedSystem& sys) {
    for (int col = 0; col < sys.psi_l.outerSize(); ++col) {
        for (SparseC::InnerIterator it(sys.psi_l, col); it; ++it) {
            const cplx lhs = it.value() * (sys.lambda_x[static_cast<std::size_t>(col)] -
                                           sys.lambda_y[static_cast<std::size_t>(it.row())]);
            const cplx rhs = sys.m21.coeff(it.row(), col);
            if (std::abs(lhs - rhs) > 1e-12 * std::abs(rhs)) {
                throw std::logic_error("Psi_L defining identity violated");
            }
        }
    }
    for (const auto& t : sys.xi) {
        if (std::abs(t.xi * t.c - t.f) > 1e-12 * std::abs(t.f)) {
            throw std::logic_error("xi defining identity violated");
        }
    }
}

} // namespace

SparseC psi_linear(const SparseC& m21, const std::vector<cplx>& lambda_x,
                   const std::vector<cplx>& lambda_y) {
    std::vector<Eigen::Triplet<cplx>> trips;
    for (int col = 0; col < m21.outerSize(); ++col) {
        for (SparseC::InnerIterator it(m21, col); it; ++it) {
            const cplx den = lambda_x[static_cast<std::size_t>(col)] -
                             lambda_y[static_cast<std::size_t>(it.row())];
            if (std::abs(den) < 1e-13) {
                throw DegenerateError("Lambda_X - Lambda_Y vanishes at row " + std::to_string(it.row()) +
                                      ", column " + std::to_string(col));
            }
            trips.emplace_back(it.row(), col, it.value() / den);
        }
    }
    SparseC out(m21.rows(), m21.cols());
    out.setFromTriplets(trips.begin(), trips.end());
    return out;
}

ReducedSystem build_reduced_system(const PhysParams& params_star, SuspendedParam which, double eps,
                                   double tol) {
    params_star.validate();
    ReducedSystem sys;
    sys.params = params_star;
    sys.suspension = {which, suspended_value(params_star, which)};
    sys.epsilon = eps;
    sys.part = partition(params_star, tol);
    if (sys.part.empty()) throw DegenerateError("empty centre set: nothing to reduce");
    sys.projection = build_projection(params_star);
    sys.m_modes = build_M(sys.suspension, sys.projection, params_star);

    const auto& part = sys.part;
    const std::size_t a = part.a(), b = part.b();
    for (const auto& s : part.centre) sys.lambda_x.push_back(sys.projection.at(s.mode).lambda[br(s.branch)]);
    for (const auto& s : part.stable) sys.lambda_y.push_back(sys.projection.at(s.mode).lambda[br(s.branch)]);

    std::vector<Eigen::Triplet<cplx>> t11, t12, t21, t22;
    SpectralField probe(params_star.n);
    for (std::size_t i = 0; i < probe.size(); ++i) {
        const ModeIndex k = probe.mode_at(i);
        const auto& mk = sys.m_modes[i];
        for (Branch rb : {Branch::plus, Branch::minus}) {
            for (Branch cb : {Branch::plus, Branch::minus}) {
                const cplx v = mk(br(rb), br(cb));
                if (v == cplx{}) continue;
                const EigenSlot rs{k, rb}, cs{k, cb};
                const int rc = part.centre_index(rs), cc = part.centre_index(cs);
                const int rsi = part.stable_index(rs), csi = part.stable_index(cs);
                if (rc >= 0 && cc >= 0) t11.emplace_back(rc, cc, v);
                else if (rc >= 0) t12.emplace_back(rc, csi, v);
                else if (cc >= 0) t21.emplace_back(rsi, cc, v);
                else t22.emplace_back(rsi, csi, v);
            }
        }
    }
    const auto ia = static_cast<Eigen::Index>(a), ib = static_cast<Eigen::Index>(b);
    sys.m11.resize(ia, ia);
    sys.m12.resize(ia, ib);
    sys.m21.resize(ib, ia);
    sys.m22.resize(ib, ib);
    sys.m11.setFromTriplets(t11.begin(), t11.end());
    sys.m12.setFromTriplets(t12.begin(), t12.end());
    sys.m21.setFromTriplets(t21.begin(), t21.end());
    sys.m22.setFromTriplets(t22.begin(), t22.end());

    sys.psi_l = psi_linear(sys.m21, sys.lambda_x, sys.lambda_y);
    build_quadratic(sys);
    assert_identities(sys);
    return sys;
}

ReducedSystem rebind_epsilon(const ReducedSystem& sys, double eps) {
    return build_reduced_system(sys.params, sys.suspension.which, eps, sys.part.tol);
}

std::vector<std::pair<std::size_t, cplx>> manifold_map(const ReducedSystem& sys,
                                                       std::span<const cplx> x, double eps) {
    std::map<std::size_t, cplx> acc;
    if (eps != 0.0) {
        for (int col = 0; col < sys.psi_l.outerSize(); ++col) {
            for (SparseC::InnerIterator it(sys.psi_l, col); it; ++it) {
                acc[static_cast<std::size_t>(it.row())] += eps * it.value() * x[static_cast<std::size_t>(col)];
            }
        }
    }
    add_quadratic(sys, x, acc);
    return to_rows(acc);
}

std::vector<cplx> reduced_rhs_linear(const ReducedSystem& sys, std::span<const cplx> x, double eps) {
    const std::size_t a = sys.a();
    if (x.size() != a) throw DomainError("reduced state has wrong length");
    std::vector<cplx> out(a);
    for (std::size_t j = 0; j < a; ++j) out[j] = sys.lambda_x[j] * x[j];
    if (eps != 0.0) {
        for (std::size_t j = 0; j < a; ++j) add_sparse_column(sys.m11, j, eps * x[j], out);
        // eps^2 M12 Psi_L X + eps M12 Psi_N(X) = eps M12 Psi(X, eps)
        for (const auto& [row, v] : manifold_map(sys, x, eps)) add_sparse_column(sys.m12, row, eps * v, out);
    }
    return out;
}

std::vector<cplx> reduced_rhs(const ReducedSystem& sys, std::span<const cplx> x, double eps) {
    auto out = reduced_rhs_linear(sys, x, eps);
    const auto y = manifold_map(sys, x, eps);
    const SparseState s = embed(sys, x, y);
    std::map<ModeIndex, Vec2> cache;
    for (std::size_t j = 0; j < sys.a(); ++j) {
        const EigenSlot slot = sys.part.centre[j];
        auto it = cache.find(slot.mode);
        if (it == cache.end()) it = cache.emplace(slot.mode, projected_forcing(sys, s, slot.mode)).first;
        out[j] += it->second(br(slot.branch));
    }
    return out;
}

double manifold_residual(const ReducedSystem& sys, std::span<const cplx> x, double eps) {
    const std::size_t a = sys.a();
    const int n = sys.params.n;
    const auto y = manifold_map(sys, x, eps);
    const SparseState s = embed(sys, x, y);

    // Projected forcing on every mode the quadratic sums can reach.
    std::map<ModeIndex, Vec2> forcing;
    for (const auto& [q, vq] : s) {
        if (valid_target(q, n)) forcing.try_emplace(q, Vec2::Zero());
        for (const auto& [r, vr] : s) {
            const ModeIndex k = q + r;
            if (valid_target(k, n)) forcing.try_emplace(k, Vec2::Zero());
        }
    }
    for (auto& [k, v] : forcing) v = projected_forcing(sys, s, k);

    // Xdot with the full coupling.
    std::vector<cplx> xdot(a);
    for (std::size_t j = 0; j < a; ++j) xdot[j] = sys.lambda_x[j] * x[j];
    for (std::size_t j = 0; j < a; ++j) add_sparse_column(sys.m11, j, eps * x[j], xdot);
    for (const auto& [row, v] : y) add_sparse_column(sys.m12, row, eps * v, xdot);
    for (std::size_t j = 0; j < a; ++j) {
        const auto it = forcing.find(sys.part.centre[j].mode);
        if (it != forcing.end()) xdot[j] += it->second(br(sys.part.centre[j].branch));
    }

    // D Psi . Xdot - Ydot over stable rows.
    std::map<std::size_t, cplx> res;
    for (int col = 0; col < sys.psi_l.outerSize(); ++col) {
        for (SparseC::InnerIterator it(sys.psi_l, col); it; ++it) {
            res[static_cast<std::size_t>(it.row())] += eps * it.value() * xdot[static_cast<std::size_t>(col)];
        }
    }
    for (const auto& t : sys.xi) res[t.row] += t.xi * (xdot[t.j1] * x[t.j2] + x[t.j1] * xdot[t.j2]);

    for (const auto& [row, v] : y) res[row] -= sys.lambda_y[row] * v;
    std::vector<cplx> coupling(sys.b());
    for (std::size_t j = 0; j < a; ++j) add_sparse_column(sys.m21, j, eps * x[j], coupling);
    for (const auto& [row, v] : y) add_sparse_column(sys.m22, row, eps * v, coupling);
    for (std::size_t i = 0; i < coupling.size(); ++i) {
        if (coupling[i] != cplx{}) res[i] -= coupling[i];
    }
    for (const auto& [k, v] : forcing) {
        for (Branch b : {Branch::plus, Branch::minus}) {
            const int row = sys.part.stable_index({k, b});
            if (row >= 0) res[static_cast<std::size_t>(row)] -= v(br(b));
        }
    }
    double sum = 0.0;
    for (const auto& [row, v] : res) sum += std::norm(v);
    return std::sqrt(sum);
}

std::vector<LinearCoefficient> linear_coefficients(const ReducedSystem& sys) {
    std::vector<LinearCoefficient> out;
    const SparseC m12_psi = sys.m12 * sys.psi_l;
    for (std::size_t j = 0; j < sys.a(); ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        out.push_back({sys.part.centre[j], sys.lambda_x[j], sys.m11.coeff(jj, jj), m12_psi.coeff(jj, jj)});
    }
    return out;
}

StateVector lift(const ReducedSystem& sys, std::span<const cplx> x, double eps) {
    const SparseState s = embed(sys, x, manifold_map(sys, x, eps));
    StateVector out(sys.params.n);
    for (const auto& [k, v] : s) {
        out.phi[k] = v(0);
        out.rho[k] = v(1);
    }
    return out;
}

std::vector<cplx> centre_coordinates(const ReducedSystem& sys, const StateVector& st) {
    std::vector<cplx> x(sys.a());
    for (std::size_t j = 0; j < sys.a(); ++j) {
        const EigenSlot slot = sys.part.centre[j];
        const Vec2 w = sys.projection.at(slot.mode).p_inv * Vec2(st.phi[slot.mode], st.rho[slot.mode]);
        x[j] = w(br(slot.branch));
    }
    return x;
}

} // namespace hwcm
