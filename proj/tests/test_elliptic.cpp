#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "helastica/elliptic.hpp"
#include "helastica/quadrature.hpp"
#include "oracles.hpp"

using helastica::EllipticModulus;
using helastica::complete_E;
using helastica::complete_K;
using helastica::incomplete_F;
using helastica::jacobi;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("modulus domain is enforced") {
    CHECK_THROWS_AS(EllipticModulus(-0.1), std::domain_error);
    CHECK_THROWS_AS(EllipticModulus(1.0), std::domain_error);
    CHECK_THROWS_AS(EllipticModulus(1.5), std::domain_error);
    CHECK_NOTHROW(EllipticModulus(0.0));
    CHECK_NOTHROW(EllipticModulus(0.999999));
}

TEST_CASE("complete K: trivial value, divergence, quadrature oracle") {
    CHECK(complete_K(EllipticModulus(0.0)) == Catch::Approx(kPi / 2).epsilon(1e-15));
    CHECK(complete_K(EllipticModulus(0.999999)) > 7.0);

    // frozen from the quadrature oracle at p = 1/sqrt(2)
    const double p = 1.0 / std::sqrt(2.0);
    const double want = oracle::K_quadrature(p);
    CHECK(want == Catch::Approx(1.854074677301372).margin(1e-12));
    CHECK(complete_K(EllipticModulus(p)) == Catch::Approx(want).margin(1e-10));

    double prev = complete_K(EllipticModulus(0.0));
    for (double q = 0.05; q < 1.0 - 1e-9; q += 0.05) {
        const double cur = complete_K(EllipticModulus(q));
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("complete E: trivial value, quadrature oracle, derivative identity") {
    CHECK(complete_E(EllipticModulus(0.0)) == Catch::Approx(kPi / 2).epsilon(1e-15));
    CHECK(complete_E(EllipticModulus(0.9)) ==
          Catch::Approx(oracle::E_quadrature(0.9)).margin(1e-10));

    // dE/dp = (E - K)/p against central differences
    for (double p : {0.2, 0.5, 0.8, 0.95}) {
        const double h = 1e-6;
        const double dE = (complete_E(EllipticModulus(p + h)) - complete_E(EllipticModulus(p - h))) /
                          (2.0 * h);
        const double want =
            (complete_E(EllipticModulus(p)) - complete_K(EllipticModulus(p))) / p;
        CHECK(dE == Catch::Approx(want).margin(1e-6));
    }
}

TEST_CASE("E(p)/sqrt(2-p^2) is decreasing with the stated bounds") {
    const double hi = kPi / (2.0 * std::sqrt(2.0));
    double prev = hi;  // limit value at p -> 0
    for (int i = 1; i <= 1000; ++i) {
        const double p = i / 1001.0;
        const double f = complete_E(EllipticModulus(p)) / std::sqrt(2.0 - p * p);
        CHECK(f < prev);
        CHECK(f > 1.0);
        CHECK(f < hi);
        prev = f;
    }
}

TEST_CASE("jacobi: trig degeneration at p = 0") {
    for (double x : {-3.1, -0.5, 0.0, 0.7, 2.9, 12.0}) {
        const auto j = jacobi(x, EllipticModulus(0.0));
        CHECK(j.sn == Catch::Approx(std::sin(x)).margin(1e-15));
        CHECK(j.cn == Catch::Approx(std::cos(x)).margin(1e-15));
        CHECK(j.dn == Catch::Approx(1.0).margin(1e-15));
        CHECK(j.am == Catch::Approx(x).margin(1e-15));
    }
}

TEST_CASE("jacobi at quarter period: am = pi/2, sn = 1, cn = 0, dn = sqrt(1-p^2)") {
    for (double p : {0.1, 0.5, 0.9, 0.99}) {
        const EllipticModulus mod(p);
        const auto j = jacobi(complete_K(mod), mod);
        CHECK(j.am == Catch::Approx(kPi / 2).margin(1e-12));
        CHECK(j.sn == Catch::Approx(1.0).margin(1e-12));
        CHECK(j.cn == Catch::Approx(0.0).margin(1e-12));
        CHECK(j.dn == Catch::Approx(std::sqrt(1.0 - p * p)).margin(1e-12));
    }
}

TEST_CASE("algebraic identities at 10^4 random (x, p)") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ux(-20.0, 20.0), up(0.0, 0.995);
    for (int i = 0; i < 10000; ++i) {
        const double x = ux(rng);
        const double p = up(rng);
        const auto j = jacobi(x, EllipticModulus(p));
        REQUIRE(std::fabs(j.sn * j.sn + j.cn * j.cn - 1.0) < 1e-11);
        REQUIRE(std::fabs(j.dn * j.dn + p * p * j.sn * j.sn - 1.0) < 1e-11);
        REQUIRE(j.dn >= std::sqrt(1.0 - p * p) - 1e-12);
    }
}

TEST_CASE("periodicity table at integer shifts |l| <= 5") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ux(-5.0, 5.0), up(0.05, 0.98);
    for (int i = 0; i < 200; ++i) {
        const double x = ux(rng);
        const EllipticModulus mod(up(rng));
        const double K = complete_K(mod);
        const auto j0 = jacobi(x, mod);
        for (int l = -5; l <= 5; ++l) {
            const auto j2 = jacobi(x + 2.0 * l * K, mod);
            const auto j4 = jacobi(x + 4.0 * l * K, mod);
            REQUIRE(std::fabs(j2.dn - j0.dn) < 1e-9);
            REQUIRE(std::fabs(j4.cn - j0.cn) < 1e-9);
            REQUIRE(std::fabs(j4.sn - j0.sn) < 1e-9);
            REQUIRE(std::fabs(j2.am - (l * kPi + j0.am)) < 1e-9);
        }
    }
    // am(l K, p) = l pi/2
    const EllipticModulus mod(0.8);
    const double K = complete_K(mod);
    for (int l = -4; l <= 4; ++l)
        CHECK(jacobi(l * K, mod).am == Catch::Approx(l * kPi / 2).margin(1e-12));
}

TEST_CASE("derivatives of sn, cn, dn, am against finite differences") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> ux(-6.0, 6.0), up(0.05, 0.97);
    const double h = 1e-5;
    for (int i = 0; i < 500; ++i) {
        const double x = ux(rng);
        const double p = up(rng);
        const EllipticModulus mod(p);
        const auto j = jacobi(x, mod);
        const auto jp = jacobi(x + h, mod);
        const auto jm = jacobi(x - h, mod);
        CHECK(std::fabs((jp.sn - jm.sn) / (2 * h) - j.cn * j.dn) < 1e-7);
        CHECK(std::fabs((jp.cn - jm.cn) / (2 * h) - (-j.sn * j.dn)) < 1e-7);
        CHECK(std::fabs((jp.dn - jm.dn) / (2 * h) - (-p * p * j.cn * j.sn)) < 1e-7);
        CHECK(std::fabs((jp.am - jm.am) / (2 * h) - j.dn) < 1e-7);
    }
}

TEST_CASE("int_0^K dn^2 = E on a grid of moduli") {
    for (double p = 0.1; p <= 0.951; p += 0.05) {
        const EllipticModulus mod(p);
        const double K = complete_K(mod);
        const double val = helastica::integrate_periodic(
            [&](double s) {
                const double dn = jacobi(s, mod).dn;
                return dn * dn;
            },
            0.0, K, 1e-13);
        CHECK(val == Catch::Approx(complete_E(mod)).margin(1e-9));
    }
}

TEST_CASE("incomplete F: special values, oracle, round trip with am") {
    const EllipticModulus m8(0.8);
    CHECK(incomplete_F(0.0, m8) == 0.0);
    CHECK(incomplete_F(kPi / 2, m8) == Catch::Approx(complete_K(m8)).margin(1e-12));
    CHECK(incomplete_F(1.0, m8) == Catch::Approx(oracle::F_quadrature(1.0, 0.8)).margin(1e-10));

    std::mt19937 rng(37);
    std::uniform_real_distribution<double> ux(-8.0, 8.0), up(0.05, 0.97);
    for (int i = 0; i < 300; ++i) {
        const double x = ux(rng);
        const EllipticModulus mod(up(rng));
        CHECK(std::fabs(incomplete_F(jacobi(x, mod).am, mod) - x) < 1e-10);
    }
}
