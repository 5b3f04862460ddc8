#include <doctest.h>

#include "hwcm/errors.hpp"
#include "hwcm/linear/eigen.hpp"
#include "hwcm/linear/stability.hpp"

#include <random>
#include <sstream>

using namespace hwcm;

namespace {

PhysParams reference_params(double alpha) {
    PhysParams p;
    p.alpha = alpha;
    p.kappa = 1.5;
    p.beta_phi = p.beta_rho = 1e-3;
    p.p = 1;
    p.n = 16;
    return p;
}

PhysParams random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> logu(-3.0, 3.0);
    PhysParams p;
    p.alpha = std::pow(10.0, logu(rng));
    p.kappa = std::pow(10.0, logu(rng));
    p.beta_phi = std::pow(10.0, logu(rng) - 3.0);
    p.beta_rho = std::pow(10.0, logu(rng) - 3.0);
    p.p = rng() % 2 ? 1 : 2;
    p.n = 8;
    return p;
}

} // namespace

TEST_CASE("mode blocks") {
    auto p = reference_params(1.0);
    const auto b = mode_blocks({0, 1}, p);
    CHECK(b.a == cplx(-1.001, 0.0));
    CHECK(b.b == cplx(1.0, 0.0));
    CHECK(b.c == cplx(1.0, -1.5));
    CHECK(b.d == cplx(-1.001, 0.0));
    CHECK(mode_blocks({0, 0}, p).b.real() == doctest::Approx(1.0 / 2048));
    p.kappa = 0.0;
    for (int ky = -16; ky < 16; ++ky) CHECK(mode_blocks({3, ky}, p).c.imag() == 0.0);
}

TEST_CASE("eigenvalues at the reference critical points") {
    const auto [l1, l1m] = eigenvalues({0, 1}, reference_params(281.2475));
    CHECK(std::abs(l1.real()) < 1e-4);
    CHECK(std::abs(l1.imag()) == doctest::Approx(0.75).epsilon(1e-4));
    const auto l2 = eigenvalues({-1, -1}, reference_params(83.326665)).first;
    CHECK(std::abs(l2.real()) < 1e-4);
    CHECK(l2.imag() == doctest::Approx(0.5).epsilon(1e-4));

    auto p = reference_params(1e-3);
    const auto [hp, hm] = eigenvalues({15, 15}, p);
    const double target = -1e-3 * 450.0;
    CHECK(hp.real() == doctest::Approx(target).epsilon(0.05));
    CHECK(hm.real() == doctest::Approx(target).epsilon(0.05));
    (void)l1m;
}

TEST_CASE("eigen identities over random positive parameters") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_params(rng);
        for (int kx = -p.n; kx < p.n; ++kx) {
            for (int ky = -p.n; ky < p.n; ++ky) {
                const ModeIndex k{kx, ky};
                const auto es = mode_eigensystem(k, p);
                const auto& b = es.blocks;
                const cplx tr = b.a + b.d, det = b.a * b.d - b.c * b.b;
                const double scale = std::abs(b.a) + std::abs(b.d) + 1e-300;
                CHECK(std::abs(es.lambda_plus + es.lambda_minus - tr) <= 1e-12 * scale);
                CHECK(std::abs(es.lambda_plus * es.lambda_minus - det) <=
                      1e-12 * (std::abs(b.a * b.d) + std::abs(b.c * b.b)));
                CHECK(es.lambda_minus.real() < 0.0);
                CHECK(es.lambda_minus.real() <= es.lambda_plus.real());
                CHECK(std::abs(es.lambda_plus - b.a) > 1e-14 * std::abs(b.a));
                CHECK(std::abs(es.lambda_minus - b.a) > 1e-14 * std::abs(b.a));
                const auto L = b.matrix();
                for (Branch br : {Branch::plus, Branch::minus}) {
                    Eigen::Vector2cd v(es.u(br), 1.0);
                    const double res = (L * v - es.lambda(br) * v).norm();
                    CHECK(res <= 1e-10 * L.norm() * v.norm());
                }
            }
        }
        CHECK(std::abs(eigenvalues({0, 0}, p).first) <= 1e-14);
    }
}

TEST_CASE("eigenvectors") {
    auto p = reference_params(5.0);
    p.kappa = 0.0;
    for (int kx = 1; kx < 5; ++kx) {
        CHECK(eigenvector({kx, 0}, Branch::plus, p).first.imag() == 0.0);
        CHECK(eigenvector({kx, 0}, Branch::minus, p).first.imag() == 0.0);
    }
    const auto u = eigenvector({0, 1}, Branch::plus, reference_params(281.2475)).first;
    CHECK(std::isfinite(std::abs(u)));
    CHECK(std::abs(u) > 0.0);
}

TEST_CASE("max growth rate") {
    const auto g300 = max_growth_rate(reference_params(300.0));
    CHECK(g300.re < 0.0);
    const auto g200 = max_growth_rate(reference_params(200.0));
    CHECK(g200.re > 0.0);
    CHECK(g200.mode.kx == 0);
    CHECK(std::abs(g200.mode.ky) == 1);
    const auto ser = max_growth_rate(reference_params(83.0), Execution::serial);
    const auto par = max_growth_rate(reference_params(83.0), Execution::parallel);
    CHECK(ser.re == par.re);
    CHECK(ser.mode == par.mode);

    auto p = reference_params(1.0);
    p.kappa = 0.0;
    for (double a : {1e-4, 1e-2, 1.0, 10.0, 300.0, 1e4}) {
        p.alpha = a;
        CHECK(max_growth_rate(p).re < 0.0);
    }
}

TEST_CASE("critical alpha bisection") {
    const auto p = reference_params(1.0);
    const double a = critical_alpha({0, 1}, p, 200.0, 400.0);
    CHECK(a == doctest::Approx(281.2475).epsilon(0).scale(1).epsilon(1e-3 / 281.2475));
    auto q = p;
    q.alpha = a;
    CHECK(std::abs(growth_rate({0, 1}, q)) < 1e-9);
    CHECK(std::abs(critical_alpha({1, 1}, p, 60.0, 120.0) - 83.326665) < 1e-4);
    CHECK_THROWS_AS(critical_alpha({0, 1}, p, 300.0, 400.0), BracketError);
    CHECK_THROWS_AS(critical_alpha({0, 1}, p, 400.0, 300.0), DomainError);
}

TEST_CASE("stability scan") {
    auto p = reference_params(1.0);
    CHECK_THROWS_AS(stability_scan(p, {}), DomainError);
    CHECK(stability_scan(p, {10.0}).size() == 1);

    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i) grid.push_back(std::pow(10.0, -10.0 + 0.1 * i));
    for (int i = 1; i <= 399; ++i) grid.push_back(1.0 + i);
    const auto rows = stability_scan(p, grid);
    const auto roots = sign_changes(rows);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] < 1e-3);
    CHECK(std::abs(roots[1] - 281.2475) < 1.0);

    std::ostringstream os;
    write_scan_csv(os, {rows[0]});
    CHECK(os.str().rfind("alpha,max_re_lambda,argmax_kx,argmax_ky\n", 0) == 0);
}
