#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hecke/errors.hpp"
#include "hecke/gaussian_series.hpp"
#include "hecke/oracles.hpp"
#include "hecke/quasiperiods.hpp"

using namespace hecke;
using namespace std::complex_literals;
using std::numbers::pi;

namespace
{

constexpr double tol = 1e-12;

ErrorKind kind_of(auto &&fn)
{
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("expected hecke::Error");
    return ErrorKind::ParseError;
}

std::vector<cplx> grid(const Lattice &lat, int n)
{
    std::vector<cplx> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.push_back((i + 0.137) / n * lat.omega1() + (j + 0.071) / n * lat.omega2());
    return out;
}

std::vector<Lattice> lattices()
{
    return {make_lattice(1.0, 1i), make_lattice(1.0, std::polar(1.0, pi / 3)), make_lattice(1.0, 0.3 + 1.2i),
            make_lattice(1.0 + 0.5i, -0.4 + 1.3i)};
}

} // namespace

TEST_CASE("Z vanishes on half-lattice points")
{
    auto sq = make_lattice(1.0, 1i);
    CHECK(std::abs(zee(sq, 0.5, tol).value) <= 1e-12);
    CHECK(std::abs(zee(sq, 0.5 + 0.5i, tol).value) <= 1e-12);
    for (const auto &lat : lattices())
        for (cplx h : {lat.omega1() / 2.0, lat.omega2() / 2.0, (lat.omega1() + lat.omega2()) / 2.0})
            CHECK(std::abs(zee(lat, h, tol).value) <= 1e-12);
}

TEST_CASE("Z against the theta oracle")
{
    // Independent route: eta1 from theta Taylor coefficients, eta2 from Legendre.
    for (cplx tau : {cplx(0, 1), cplx(0.3, 1.2), cplx(-0.45, 0.8)}) {
        auto lat = tau_lattice(tau);
        cplx e1 = oracles::eta1_theta(tau);
        cplx e2 = e1 * tau - 2i * pi;
        for (cplx x : grid(lat, 4)) {
            auto c = real_coords(lat, x);
            cplx expect = oracles::zeta_theta_oracle(tau, x) - c.x1 * e1 - c.x2 * e2;
            CHECK(std::abs(zee(lat, x, tol).value - expect) <= 1e-10);
        }
    }
}

TEST_CASE("Z is odd and periodic")
{
    for (const auto &lat : lattices())
        for (cplx x : grid(lat, 3)) {
            cplx z = zee(lat, x, tol).value;
            CHECK(std::abs(zee(lat, -x, tol).value + z) <= 1e-11);
            for (cplx w : {lat.omega1(), lat.omega2(), lat.omega1() + lat.omega2()})
                CHECK(std::abs(zee(lat, x + w, tol).value - z) <= 1e-11);
        }
}

TEST_CASE("dbar Z with the four-point central difference")
{
    const double h = 1e-4;
    for (const auto &lat : lattices())
        for (cplx x : {0.5 * lat.omega1() + 0.4 * lat.omega2(), 0.45 * (lat.omega1() + lat.omega2())}) {
            auto Z = [&](cplx p) { return zee(lat, p, tol).value; };
            cplx dx = (Z(x + h) - Z(x - h)) / (2 * h);
            cplx dy = (Z(x + 1i * h) - Z(x - 1i * h)) / (2i * h);
            cplx dbar = (dx - dy) / 2.0;
            CHECK(std::abs(dbar + pi / lat.area()) <= 1e-5);
        }
}

TEST_CASE("wp: parity, oracle, derivative of zeta")
{
    auto sq = make_lattice(1.0, 1i);
    cplx x = 0.3 + 0.2i;
    cplx w = wp(sq, x, tol).value;
    CHECK(std::abs(w - oracles::wp_theta_oracle(1i, x)) <= 1e-9);
    CHECK(std::abs(w - cplx(3.37210367373582013, -5.99141860045564240)) <= 1e-10);

    auto lt = tau_lattice(0.3 + 1.2i);
    CHECK(std::abs(wp(lt, 0.37 + 0.21i, tol).value - cplx(3.10459161331328535, -3.37865624198997319)) <= 1e-10);

    for (const auto &lat : lattices()) {
        auto pts = grid(lat, 5);
        pts.resize(20);
        for (cplx p : pts) {
            cplx v = wp(lat, p, tol).value;
            CHECK(std::abs(wp(lat, -p, tol).value - v) <= 1e-10 * (1 + std::abs(v)));
        }
    }

    // Holomorphic derivative from real and imaginary steps.
    const double h = 1e-4;
    for (const auto &lat : lattices()) {
        cplx p = 0.31 * lat.omega1() + 0.22 * lat.omega2();
        auto Zf = [&](cplx q) { return zeta(lat, q, tol).value; };
        cplx dx = (Zf(p + h) - Zf(p - h)) / (2 * h);
        cplx dy = (Zf(p + 1i * h) - Zf(p - 1i * h)) / (2i * h);
        cplx d = (dx + dy) / 2.0;
        CHECK(std::abs(-d - wp(lat, p, tol).value) <= 1e-5);
    }
}

TEST_CASE("wp prime: half-period zeros, oddness, cubic identity")
{
    auto sq = make_lattice(1.0, 1i);
    CHECK(std::abs(wp_prime(sq, 0.3 + 0.2i, tol).value - cplx(12.8227904536157075, 45.8388881783222703)) <= 1e-9);

    for (const auto &lat : lattices()) {
        auto ev = oracles::eisenstein(lat.tau());
        cplx s2 = std::pow(lat.omega1(), 4), s3 = std::pow(lat.omega1(), 6);
        cplx g2 = ev.g2 / s2, g3 = ev.g3 / s3;
        for (cplx h : {lat.omega1() / 2.0, lat.omega2() / 2.0, (lat.omega1() + lat.omega2()) / 2.0})
            CHECK(std::abs(wp_prime(lat, h, tol).value) <= 1e-10);
        auto pts = grid(lat, 5);
        pts.resize(20);
        for (cplx p : pts) {
            cplx d = wp_prime(lat, p, tol).value;
            CHECK(std::abs(wp_prime(lat, -p, tol).value + d) <= 1e-10 * (1 + std::abs(d)));
        }
        pts.resize(10);
        for (cplx p : pts) {
            cplx P = wp(lat, p, tol).value, d = wp_prime(lat, p, tol).value;
            cplx cubic = d * d - (4.0 * P * P * P - g2 * P - g3);
            CHECK(std::abs(cubic) <= 1e-7 * (1 + std::pow(std::abs(P), 3)));
        }
    }
}

TEST_CASE("Kronecker F from the Gaussian series")
{
    cplx tau = 0.3 + 1.2i, x = 0.2 + 0.3i, y = 0.1 + 0.4i;
    cplx F = kronecker_F(tau, x, y, tol).value;
    CHECK(std::abs(F - oracles::F_theta(tau, x, y)) <= 1e-10);
    CHECK(std::abs(F - oracles::F_qseries(tau, x, y)) <= 1e-10);
    CHECK(std::abs(F - cplx(-1.04961319279325111, -0.209423842471082254)) <= 1e-10);

    // Away from the q-series strip the theta quotient is the only reference.
    for (auto [p, q] : {std::pair<cplx, cplx>{0.2 - 0.5i, 0.7 + 0.1i}, {1.3 + 2.1i, -0.4 - 0.3i}}) {
        cplx v = kronecker_F(tau, p, q, tol).value;
        CHECK(std::abs(v - oracles::F_theta(tau, p, q)) <= 1e-10 * (1 + std::abs(v)));
        CHECK(std::abs(v - kronecker_F(tau, q, p, tol).value) <= 1e-11 * (1 + std::abs(v)));
        CHECK(std::abs(kronecker_F(tau, p, -p, tol).value) <= 1e-11);
    }

    cplx small = 1e-3;
    CHECK(std::abs(small * kronecker_F(tau, small, y, tol).value - 1.0 / (2i * pi)) <= 5e-3);

    CHECK(kind_of([&] { kronecker_F(-1i, x, y, tol); }) == ErrorKind::BadModulus);
    CHECK(kind_of([&] { kronecker_F(tau, x, tau, tol); }) == ErrorKind::TooCloseToPole);
}

TEST_CASE("first-moment identity residual")
{
    auto sq = make_lattice(1.0, 1i);
    CHECK(remark1_residual(sq, 0.0, tol).value == cplx(0.0, 0.0));
    CHECK(std::abs(remark1_residual(sq, 0.37 + 0.21i, tol).value) <= 1e-12);
    CHECK(std::abs(remark1_residual(make_lattice(1.0, 0.3 + 1.2i), 0.5, tol).value) <= 1e-12);
    for (const auto &lat : lattices())
        for (cplx x : grid(lat, 2))
            CHECK(std::abs(remark1_residual(lat, x, tol).value) <= 1e-12);
}

TEST_CASE("homogeneity of zeta, wp, wp prime")
{
    for (const auto &lat : lattices())
        for (cplx lam : {cplx(2.0), cplx(1.0, 1.0)}) {
            auto scaled = make_lattice(lam * lat.omega1(), lam * lat.omega2());
            cplx x = 0.31 * lat.omega1() + 0.22 * lat.omega2();
            cplx z = zeta(lat, x, tol).value, P = wp(lat, x, tol).value, d = wp_prime(lat, x, tol).value;
            CHECK(std::abs(zeta(scaled, lam * x, tol).value - z / lam) <= 1e-9 * (1 + std::abs(z)));
            CHECK(std::abs(wp(scaled, lam * x, tol).value - P / (lam * lam)) <= 1e-9 * (1 + std::abs(P)));
            CHECK(std::abs(wp_prime(scaled, lam * x, tol).value - d / (lam * lam * lam)) <= 1e-9 * (1 + std::abs(d)));
        }
}

TEST_CASE("error estimates bound the change when tol halves")
{
    auto lat = make_lattice(1.0, 0.3 + 1.2i);
    cplx x = 0.37 + 0.21i;
    for (double t : {1e-4, 1e-6, 1e-8, 1e-10}) {
        for (auto f : {&zee, &wp_prime}) {
            auto coarse = f(lat, x, t), fine = f(lat, x, t / 2);
            CHECK(coarse.abs_error_estimate >= 0.0);
            CHECK(coarse.abs_error_estimate <= t);
            CHECK(coarse.terms_used >= 1);
            CHECK(coarse.radius > 0.0);
            CHECK(std::abs(coarse.value - fine.value) <= coarse.abs_error_estimate);
        }
        auto coarse = kronecker_F(lat.tau(), 0.2 + 0.3i, 0.1 + 0.4i, t);
        auto fine = kronecker_F(lat.tau(), 0.2 + 0.3i, 0.1 + 0.4i, t / 2);
        CHECK(std::abs(coarse.value - fine.value) <= coarse.abs_error_estimate);
    }
}

TEST_CASE("argument checks")
{
    auto sq = make_lattice(1.0, 1i);
    CHECK(kind_of([&] { zee(sq, 0.0, tol); }) == ErrorKind::TooCloseToPole);
    CHECK(kind_of([&] { wp(sq, 1.0 + 1e-12i, tol); }) == ErrorKind::TooCloseToPole);
    CHECK(kind_of([&] { wp_prime(sq, -1i, tol); }) == ErrorKind::TooCloseToPole);
    CHECK_THROWS_AS(zee(sq, 0.3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(zee(sq, 0.3, 2.0), std::invalid_argument);
}
