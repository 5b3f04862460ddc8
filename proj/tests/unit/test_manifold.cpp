#include <doctest.h>

#include "hwcm/errors.hpp"
#include "hwcm/linear/stability.hpp"
#include "hwcm/manifold/reduced.hpp"
#include "hwcm/spectral/rhs.hpp"
#include "oracles.hpp"
#include "paired.hpp"

#include <random>

using namespace hwcm;

namespace {

PhysParams base_params() {
    PhysParams p;
    p.kappa = 1.5;
    p.beta_phi = p.beta_rho = 1e-3;
    p.p = 1;
    p.n = 16;
    return p;
}

PhysParams critical(ModeIndex k, double lo, double hi) {
    auto p = base_params();
    p.alpha = critical_alpha(k, p, lo, hi);
    return p;
}

} // namespace

TEST_CASE("projection diagonalises every mode block") {
    auto p = base_params();
    p.alpha = 281.2475;
    p.n = 8;
    const auto proj = build_projection(p);
    SpectralField probe(p.n);
    for (std::size_t i = 0; i < probe.size(); ++i) {
        const ModeIndex k = probe.mode_at(i);
        const auto& b = proj.blocks()[i];
        CHECK((b.p * b.p_inv - Eigen::Matrix2cd::Identity()).norm() <= 1e-12);
        const Eigen::Matrix2cd L = mode_blocks(k, p).matrix();
        Eigen::Matrix2cd D = Eigen::Matrix2cd::Zero();
        D(0, 0) = b.lambda[0];
        D(1, 1) = b.lambda[1];
        CHECK((b.p_inv * L * b.p - D).norm() <= 1e-10 * L.norm());
    }
    CHECK(std::abs(proj.at({0, 1}).lambda[0].imag()) == doctest::Approx(0.75).epsilon(1e-4));

    StateVector s(oracle::random_field(p.n, 1.0, 1), oracle::random_field(p.n, 1.0, 2));
    const auto back = from_eigen_coords(to_eigen_coords(s, proj), proj);
    CHECK(oracle::max_diff(back.phi, s.phi) < 1e-12);
    CHECK(oracle::max_diff(back.rho, s.rho) < 1e-12);
}

TEST_CASE("M by two routes; identity G gives identity") {
    auto p = base_params();
    p.alpha = 281.2475;
    p.n = 8;
    const auto proj = build_projection(p);
    for (auto which : {SuspendedParam::alpha, SuspendedParam::kappa, SuspendedParam::beta_phi,
                       SuspendedParam::beta_rho}) {
        const SuspensionSpec spec{which, 0.0};
        const auto a = build_M(spec, proj, p);
        const auto b = build_M_assembled(spec, proj, p);
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, (a[i] - b[i]).norm() / (1.0 + a[i].norm()));
        CHECK(worst <= 1e-12);
    }
    // P^-1 I P = I, mode by mode
    for (const auto& blk : proj.blocks()) {
        CHECK((blk.p_inv * Eigen::Matrix2cd::Identity() * blk.p - Eigen::Matrix2cd::Identity()).norm() < 1e-12);
    }
    // G for alpha equals the derivative of the mode block
    const double h = 1e-4;
    auto hi = p, lo = p;
    hi.alpha += h;
    lo.alpha -= h;
    const Eigen::Matrix2cd fd = (mode_blocks({2, 3}, hi).matrix() - mode_blocks({2, 3}, lo).matrix()) / (2 * h);
    CHECK((fd - SuspensionSpec{}.g_block({2, 3}, p)).norm() < 1e-9);
}

TEST_CASE("partition at the reference critical points") {
    const auto p1 = critical({0, 1}, 200, 400);
    const auto part1 = partition(p1);
    REQUIRE(part1.a() == 2);
    CHECK(part1.centre[0] == EigenSlot{{0, -1}, Branch::plus});
    CHECK(part1.centre[1] == EigenSlot{{0, 1}, Branch::plus});
    CHECK(part1.a() + part1.b() == 2 * 32 * 32);

    const auto part2 = partition(critical({1, 1}, 60, 120));
    REQUIRE(part2.a() == 4);
    for (const auto& s : part2.centre) {
        CHECK(std::abs(s.mode.kx) == 1);
        CHECK(std::abs(s.mode.ky) == 1);
        CHECK(s.branch == Branch::plus);
    }
    for (const auto& s : part2.centre) CHECK(part2.stable_index(s) == -1);
    for (std::size_t i = 0; i < part2.b(); ++i) CHECK(part2.stable_index(part2.stable[i]) == static_cast<int>(i));

    auto p = base_params();
    p.alpha = 500.0;
    CHECK(partition(p).empty());
    CHECK_THROWS_AS(build_reduced_system(p, SuspendedParam::alpha), DegenerateError);
    CHECK_THROWS_AS(partition(p, 0.0), DomainError);
}

TEST_CASE("psi_linear") {
    SparseC m21(1, 1);
    m21.insert(0, 0) = 2.0;
    const auto psi = psi_linear(m21, {cplx(0, 1)}, {cplx(-1, 0)});
    CHECK(std::abs(psi.coeff(0, 0) - 2.0 / cplx(1, 1)) < 1e-15);
    SparseC zero(3, 2);
    CHECK(psi_linear(zero, {1.0, 2.0}, {0.0, 0.0, 0.0}).nonZeros() == 0);
    SparseC bad(1, 1);
    bad.insert(0, 0) = 1.0;
    CHECK_THROWS_AS(psi_linear(bad, {cplx(0, 1)}, {cplx(0, 1)}), DegenerateError);
}

TEST_CASE("reduced system at the (0,1) crossing is linear") {
    const auto sys = build_reduced_system(critical({0, 1}, 200, 400), SuspendedParam::alpha);
    CHECK(sys.f_table.empty());
    CHECK(sys.xi.empty());
    // M block sparsity: only same-mode couplings exist by construction of the
    // per-mode storage; the centre rows couple only to their own mode.
    for (int col = 0; col < sys.m12.outerSize(); ++col) {
        for (SparseC::InnerIterator it(sys.m12, col); it; ++it) {
            CHECK(sys.part.centre[static_cast<std::size_t>(it.row())].mode ==
                  sys.part.stable[static_cast<std::size_t>(col)].mode);
        }
    }
    const auto coef = linear_coefficients(sys);
    CHECK(coef[0].lambda.imag() == doctest::Approx(0.75).epsilon(1e-4));
    CHECK(coef[0].eps1.real() == doctest::Approx(-3.556e-6).epsilon(1e-3));
    CHECK(coef[0].eps1.imag() == doctest::Approx(1.896e-8).epsilon(1e-3));
    // eps^2 term equals the second Taylor coefficient of lambda+(alpha* + eps)
    const double h = 0.5;
    auto up = sys.params, dn = sys.params;
    up.alpha += h;
    dn.alpha -= h;
    const cplx l0 = eigenvalues({0, -1}, sys.params).first;
    const cplx second = (eigenvalues({0, -1}, up).first - 2.0 * l0 + eigenvalues({0, -1}, dn).first) / (2 * h * h);
    CHECK(std::abs(coef[0].eps2 - second) < 1e-4 * std::abs(second));

    const std::vector<cplx> x{cplx(1e-3, 2e-4), cplx(1e-3, -2e-4)};
    for (double eps : {0.0, 0.3, -0.4}) {
        const auto r = reduced_rhs(sys, x, eps);
        const cplx want = coef[0].lambda + eps * coef[0].eps1 + eps * eps * coef[0].eps2;
        CHECK(std::abs(r[0] - want * x[0]) < 1e-15);
        CHECK(std::abs(r[1] - std::conj(r[0])) < 1e-18);
    }
}

TEST_CASE("reduced system at the (1,1) crossing carries quadratic terms") {
    const auto sys = build_reduced_system(critical({1, 1}, 60, 120), SuspendedParam::alpha);
    CHECK(!sys.f_table.empty());
    CHECK(!sys.xi.empty());
    for (const auto& t : sys.xi) CHECK(std::abs(t.xi * t.c - t.f) <= 1e-12 * std::abs(t.f));
    for (const auto& t : sys.f_table) {
        const ModeIndex k = sys.part.centre[t.j1].mode + sys.part.centre[t.j2].mode;
        CHECK(t.target.mode == k);
    }

    const auto x = oracle::paired_state(sys, 1e-3, 7);
    CHECK(reduced_rhs(sys, std::vector<cplx>(sys.a()), 0.3) == std::vector<cplx>(sys.a()));
    for (double eps : {0.0, -0.5, 0.2}) {
        const auto r = reduced_rhs(sys, x, eps);
        for (std::size_t j = 0; j < sys.a(); ++j) {
            const auto s = sys.part.centre[j];
            const auto mj = static_cast<std::size_t>(sys.part.centre_index({-s.mode, s.branch}));
            CHECK(std::abs(r[mj] - std::conj(r[j])) <= 1e-12 * std::abs(r[j]));
        }
    }
    const auto lin = reduced_rhs_linear(sys, x, 0.0);
    for (std::size_t j = 0; j < sys.a(); ++j) CHECK(lin[j] == sys.lambda_x[j] * x[j]);
}

TEST_CASE("reduced rhs agrees with the projected full rhs on the manifold") {
    // The centre rows of Q rhs_full(lift(X)) equal reduced_rhs(X) at eps = 0.
    const auto p = critical({1, 1}, 60, 120);
    const auto sys = build_reduced_system(p, SuspendedParam::alpha);
    const auto x = oracle::paired_state(sys, 1e-3, 9);
    const auto full = rhs_full(lift(sys, x, 0.0), p);
    const auto proj_full = centre_coordinates(sys, full);
    const auto red = reduced_rhs(sys, x, 0.0);
    for (std::size_t j = 0; j < sys.a(); ++j) CHECK(std::abs(proj_full[j] - red[j]) <= 1e-13);
}

TEST_CASE("manifold tangency") {
    const auto sys0 = build_reduced_system(critical({1, 1}, 60, 120), SuspendedParam::alpha);
    const std::vector<cplx> zero(sys0.a());
    CHECK(manifold_residual(sys0, zero, 0.0) == 0.0);

    // first derivatives at the origin vanish
    const double h = 1e-5;
    for (std::size_t j = 0; j < sys0.a(); ++j) {
        std::vector<cplx> xp(sys0.a()), xm(sys0.a());
        xp[j] = h;
        xm[j] = -h;
        const double d = (manifold_residual(sys0, xp, 0.0) - manifold_residual(sys0, xm, 0.0)) / (2 * h);
        CHECK(std::abs(d) <= 1e-10);
    }

    auto x = oracle::paired_state(sys0, 1e-3, 11);
    double eps = 1e-2;
    double prev = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double r = manifold_residual(rebind_epsilon(sys0, eps), x, eps);
        if (i > 0) CHECK(std::log2(prev / r) >= 2.5);
        prev = r;
        eps *= 0.5;
        for (auto& v : x) v *= 0.5;
    }
}

TEST_CASE("linear-only centre set: residual drops at least fourfold when eps halves") {
    const auto p = critical({0, 1}, 200, 400);
    const auto sys = build_reduced_system(p, SuspendedParam::alpha);
    const std::vector<cplx> x{cplx(1e-3, 0), cplx(1e-3, 0)};
    double prev = manifold_residual(rebind_epsilon(sys, 0.2), x, 0.2);
    for (double eps : {0.1, 0.05, 0.025}) {
        const double r = manifold_residual(rebind_epsilon(sys, eps), x, eps);
        CHECK(prev / r >= 4.0);
        prev = r;
    }
}
