#include <doctest.h>

#include "hwcm/errors.hpp"
#include "hwcm/spectral/field_io.hpp"
#include "hwcm/spectral/kernels.hpp"
#include "hwcm/spectral/nonlinear.hpp"
#include "hwcm/spectral/rhs.hpp"
#include "hwcm/spectral/sine.hpp"
#include "oracles.hpp"

#include <numbers>
#include <random>
#include <sstream>

using namespace hwcm;

TEST_CASE("k2_plus") {
    CHECK(k2_plus({0, 0}, 16) == 2048.0);
    CHECK(k2_plus({1, 0}, 16) == 1.0);
    CHECK(k2_plus({3, 4}, 16) == 25.0);
    CHECK(k2_plus({-16, 16}, 16) == 512.0);
    CHECK_THROWS_AS(k2_plus({17, 0}, 16), DomainError);
    CHECK_THROWS_AS(k2_plus({0, -17}, 16), DomainError);
}

TEST_CASE("params validation") {
    PhysParams p;
    CHECK_NOTHROW(p.validate());
    p.p = 3;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = PhysParams{};
    p.alpha = 0.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = PhysParams{};
    p.beta_rho = -1.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
}

TEST_CASE("field storage follows FFT wraparound") {
    SpectralField f(4);
    CHECK(f.size() == 64);
    CHECK(f.index({0, 0}) == 0);
    CHECK(f.index({0, -1}) == 7);
    CHECK(f.index({-1, 0}) == 56);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(f.index(f.mode_at(i)) == i);
    CHECK_THROWS_AS(f.at({4, 0}), DomainError);
    CHECK(f.get_or_zero({9, 9}) == cplx{});
    CHECK_THROWS_AS(SpectralField(4) += SpectralField(8), DomainError);
}

TEST_CASE("enforce_hermitian") {
    const auto sym = oracle::random_hermitian(8, 7, 1.0, 3);
    CHECK(enforce_hermitian(sym) == sym);

    SpectralField anti(8);
    anti[{1, 2}] = {1.0, 0.5};
    anti[{-1, -2}] = -std::conj(anti[{1, 2}]);
    CHECK(enforce_hermitian(anti).max_abs() == 0.0);

    const auto r = oracle::random_field(8, 1.0, 5);
    const auto o = enforce_hermitian(r);
    CHECK(enforce_hermitian(o) == o);
    CHECK(hermitian_defect(o) == 0.0);
    CHECK(o[ModeIndex{0, 0}] == cplx{});
    CHECK(o[ModeIndex{-8, 3}] == cplx{});
}

TEST_CASE("direct bracket matches brute-force oracle and serial reference") {
    for (int n : {4, 8}) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const auto f = oracle::random_field(n, 1.0, seed);
            const auto g = oracle::random_field(n, 1.0, seed + 100);
            const auto ref = oracle::brute_bracket(f, g);
            const auto ser = poisson_bracket_direct(f, g, Execution::serial);
            const auto par = poisson_bracket_direct(f, g, Execution::parallel);
            CHECK(oracle::max_diff(ser, ref) <= 1e-12 * std::max(1.0, ref.max_abs()));
            CHECK(ser == par);
        }
    }
    CHECK_THROWS_AS(poisson_bracket_direct(SpectralField(4), SpectralField(8)), DomainError);
}

TEST_CASE("bracket antisymmetry") {
    const auto f = oracle::random_field(8, 1.0, 11);
    const auto g = oracle::random_field(8, 1.0, 12);
    CHECK(poisson_bracket_direct(f, f).max_abs() <= 1e-12);
    const auto fg = poisson_bracket_direct(f, g);
    const auto gf = poisson_bracket_direct(g, f);
    CHECK((fg + gf).max_abs() <= 1e-12 * fg.max_abs());
}

TEST_CASE("bracket of real fields matches pointwise derivatives") {
    // [f, g] on the grid with f = sin(x) cos(2y), g = cos(3x + y).
    const int n = 8;
    SpectralField f(n), g(n);
    const cplx h{0.0, 0.25};
    // sin x cos 2y = (e^{ix}-e^{-ix})/(2i) * (e^{2iy}+e^{-2iy})/2
    f[{1, 2}] = -h;
    f[{1, -2}] = -h;
    f[{-1, 2}] = h;
    f[{-1, -2}] = h;
    g[{3, 1}] = 0.5;
    g[{-3, -1}] = 0.5;
    const auto b = poisson_bracket_direct(f, g);
    for (double x : {0.3, 1.7}) {
        for (double y : {-0.4, 2.2}) {
            const double fx = std::cos(x) * std::cos(2 * y);
            const double fy = -2.0 * std::sin(x) * std::sin(2 * y);
            const double gx = -3.0 * std::sin(3 * x + y);
            const double gy = -std::sin(3 * x + y);
            const cplx v = oracle::evaluate(b, x, y);
            CHECK(v.real() == doctest::Approx(fx * gy - fy * gx).epsilon(1e-12));
            CHECK(std::abs(v.imag()) < 1e-12);
        }
    }
}

TEST_CASE("nonlinear terms: vorticity weight and bilinearity") {
    const int n = 4;
    StateVector s(oracle::random_field(n, 1.0, 21), oracle::random_field(n, 1.0, 22));
    const auto nl = nonlinear_terms(s);
    CHECK(oracle::max_diff(nl.vorticity, oracle::brute_bracket(s.phi, s.phi, true)) <= 1e-10);
    CHECK(oracle::max_diff(nl.density, oracle::brute_bracket(s.phi, s.rho)) <= 1e-12);

    StateVector s2 = s;
    s2.phi *= 2.5;
    const auto nl2 = nonlinear_terms(StateVector(s2.phi, s.rho));
    CHECK(oracle::max_diff(nl2.density, 2.5 * nl.density) <= 1e-12 * nl.density.max_abs() * 2.5);
}

TEST_CASE("one-dimensional states have no nonlinearity") {
    const int n = 8;
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int axis = 0; axis < 2; ++axis) {
        StateVector s(n);
        for (int j = 1; j < n; ++j) {
            const ModeIndex k = axis == 0 ? ModeIndex{0, j} : ModeIndex{j, 0};
            const cplx a{u(rng), u(rng)}, b{u(rng), u(rng)};
            s.phi[k] = a;
            s.phi[-k] = std::conj(a);
            s.rho[k] = b;
            s.rho[-k] = std::conj(b);
        }
        const auto nl = nonlinear_terms(s);
        CHECK(nl.vorticity.max_abs() == 0.0);
        CHECK(nl.density.max_abs() == 0.0);
        const auto nf = nonlinear_terms_fft(s, true);
        CHECK(nf.vorticity.max_abs() < 1e-12);
    }
}

TEST_CASE("FFT path agrees with direct sums inside the dealias-safe region") {
    for (int n : {4, 8, 16}) {
        const int c = dealias_cutoff(n);
        StateVector s(oracle::random_hermitian(n, c, 1.0, 31 + n),
                      oracle::random_hermitian(n, c, 1.0, 41 + n));
        const auto direct = nonlinear_terms(s);
        const auto fft = nonlinear_terms_fft(s, true);
        double worst = 0.0;
        for (std::size_t i = 0; i < s.phi.size(); ++i) {
            const ModeIndex k = s.phi.mode_at(i);
            if (!dealias_keep(k, n)) {
                CHECK(fft.vorticity.data()[i] == cplx{});
                continue;
            }
            worst = std::max(worst, std::abs(fft.vorticity.data()[i] - direct.vorticity.data()[i]) /
                                        direct.vorticity.max_abs());
            worst = std::max(worst, std::abs(fft.density.data()[i] - direct.density.data()[i]) /
                                        direct.density.max_abs());
        }
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("dealias cutoff never keeps an aliased product") {
    for (int n = 1; n <= 64; ++n) {
        const int c = dealias_cutoff(n);
        CHECK(3 * c < 2 * n);
        CHECK(3 * (c + 1) >= 2 * n);
    }
    CHECK(dealias_cutoff(16) == 10);
}

TEST_CASE("Hermitian closure of the nonlinear maps") {
    const int n = 8;
    StateVector s(oracle::random_hermitian(n, 7, 1.0, 51), oracle::random_hermitian(n, 7, 1.0, 52));
    const auto nl = nonlinear_terms(s);
    CHECK(hermitian_defect(nl.vorticity) <= 1e-12 * nl.vorticity.max_abs());
    CHECK(hermitian_defect(nl.density) <= 1e-12 * nl.density.max_abs());
    const auto nf = nonlinear_terms_fft(s, true);
    CHECK(hermitian_defect(nf.vorticity) <= 1e-12 * nf.vorticity.max_abs());
    PhysParams p;
    p.n = n;
    p.kappa = 1.5;
    const auto r = rhs_full(s, p);
    CHECK(hermitian_defect(r.phi) <= 1e-12 * r.phi.max_abs());
    CHECK(hermitian_defect(r.rho) <= 1e-12 * r.rho.max_abs());
}

TEST_CASE("rhs_full recombination") {
    const int n = 8;
    PhysParams p;
    p.n = n;
    p.alpha = 3.0;
    p.kappa = 1.5;
    CHECK(rhs_full(StateVector(n), p).max_abs() == 0.0);

    StateVector s(oracle::random_hermitian(n, 4, 0.01, 61), oracle::random_hermitian(n, 4, 0.01, 62));
    s.phi[ModeIndex{0, 0}] = 0.3; // ignored
    const auto r = rhs_full(s, p);
    CHECK(r.phi[ModeIndex{0, 0}] == cplx{});
    CHECK(r.rho[ModeIndex{0, 0}] == cplx{});
    const auto lin = apply_linear(s, p);
    const auto nl = nonlinear_terms(s);
    for (std::size_t i = 1; i < s.phi.size(); ++i) {
        const ModeIndex k = s.phi.mode_at(i);
        const cplx want_phi = -nl.vorticity.data()[i] / k2_plus(k, n);
        CHECK(std::abs(r.phi.data()[i] - lin.phi.data()[i] - want_phi) <= 1e-14);
        CHECK(std::abs(r.rho.data()[i] - lin.rho.data()[i] + nl.density.data()[i]) <= 1e-14);
    }

    StateVector y(n);
    y.phi[{0, 1}] = y.rho[{0, 1}] = {0.2, 0.1};
    y.phi[{0, -1}] = y.rho[{0, -1}] = {0.2, -0.1};
    CHECK(rhs_full(y, p) == apply_linear(y, p));
}

TEST_CASE("physical transforms round trip") {
    const auto f = oracle::random_field(8, 1.0, 71);
    const auto g = from_physical(to_physical(f), 8);
    CHECK(oracle::max_diff(f, g) < 1e-14);
    const auto phys = to_physical(f);
    const double x = 2 * std::numbers::pi * 3 / 16, y = 2 * std::numbers::pi * 5 / 16;
    CHECK(std::abs(phys[3 * 16 + 5] - oracle::evaluate(f, x, y)) < 1e-11);
}

TEST_CASE("sine embedding: odd in x, vanishes on x = 0 and x = pi") {
    const int n = 8, m = 16;
    CHECK(sin_embed(make_half_field(n)).max_abs() == 0.0);

    // single sine mode sin(x)
    auto h = make_half_field(n);
    for (int a = 1; a < n; ++a)
        for (int b = 0; b < m; ++b) h(a, b) = std::sin(2 * std::numbers::pi * a / m);
    const auto s = sin_embed(h);
    CHECK(s[ModeIndex{1, 0}].real() == doctest::Approx(0.0).scale(1.0));
    CHECK(s[ModeIndex{1, 0}].imag() == doctest::Approx(-0.5));
    CHECK(std::abs(s[ModeIndex{1, 0}] + s[ModeIndex{-1, 0}]) < 1e-15);
    CHECK(s.max_abs() == doctest::Approx(0.5));

    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-1, 1);
    for (auto& v : h.values) v = u(rng);
    const auto r = sin_embed(h);
    CHECK(odd_x_defect(r) == 0.0);
    CHECK(hermitian_defect(r) < 1e-15);
    for (double y : {0.0, 0.7, -2.1}) {
        CHECK(std::abs(oracle::evaluate(r, 0.0, y)) < 1e-12);
        CHECK(std::abs(oracle::evaluate(r, std::numbers::pi, y)) < 1e-12);
        CHECK(std::abs(oracle::evaluate(r, 0.9, y) + oracle::evaluate(r, -0.9, y)) < 1e-12);
    }
    for (int ky = -n; ky < n; ++ky) CHECK(r[ModeIndex{0, ky}] == cplx{});
}

TEST_CASE("binary and CSV field export") {
    const auto f = oracle::random_field(4, 1.0, 81);
    std::stringstream ss;
    write_field_binary(ss, f);
    CHECK(ss.str().size() == 16 + 64 * 16);
    CHECK(ss.str().substr(0, 4) == "HWSF");
    CHECK(read_field_binary(ss) == f);

    std::stringstream bad("XXXX0000");
    CHECK_THROWS(read_field_binary(bad));

    std::ostringstream csv;
    write_field_csv(csv, f);
    const auto text = csv.str();
    CHECK(text.rfind("kx,ky,re,im\n-4,-4,", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 65);
}
