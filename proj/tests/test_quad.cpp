#include <doctest.h>

#include <cmath>

#include "core/error.hpp"
#include "core/quad.hpp"
#include "core/specfun.hpp"

using namespace softedge;

TEST_CASE("basic adaptive integration") {
    CHECK(integrate([](double s) { return s; }, 0.0, 1.0) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(integrate([](double t) { return airy_ai(t); }, 0.0, 40.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    // int of the Hermite psi_0 (standard normal density) over the real line
    Family her = Family::hermite();
    CHECK(integrate([&](double x) { return wave_psi_chi(her, 0, x).psi; }, -40.0, 40.0) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
}

TEST_CASE("non-convergence carries the best estimate") {
    QuadSpec hard;
    hard.max_depth = 3;
    hard.abs_tol = 1e-15;
    hard.rel_tol = 1e-16;
    try {
        (void)integrate([](double x) { return std::sin(200.0 * x * x); }, 0.0, 3.0, hard);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(std::isfinite(e.best_estimate()));
    }
}

TEST_CASE("L2 inner products reproduce orthonormality") {
    for (const Family& fam : {Family::hermite(), Family::laguerre(0.5)}) {
        for (int n = 0; n <= 5; ++n)
            for (int m = n; m <= 5; ++m) {
                double v = inner_product(InnerKind::l2, fam, WaveRole::phi, n, WaveRole::phi, m);
                CHECK(std::fabs(v - (n == m ? 1.0 : 0.0)) <= 1e-9);
            }
    }
}

TEST_CASE("chi and psi are bi-orthonormal") {
    for (const Family& fam : {Family::hermite(), Family::laguerre(0.5)}) {
        for (int n = 0; n <= 5; ++n)
            for (int m = 0; m <= 5; ++m) {
                double v = inner_product(InnerKind::l2, fam, WaveRole::chi, n, WaveRole::psi, m);
                CHECK(std::fabs(v - (n == m ? 1.0 : 0.0)) <= 1e-9);
            }
    }
}

TEST_CASE("plus-minus-one pairings") {
    for (const Family& fam : {Family::hermite(), Family::laguerre(3.0)}) {
        CHECK(inner_product(InnerKind::l2, fam, WaveRole::psi, 2, WaveRole::eps_psi_sharp, 3) ==
              doctest::Approx(-1.0).epsilon(1e-8));
        CHECK(std::fabs(inner_product(InnerKind::l2, fam, WaveRole::psi, 1,
                                      WaveRole::eps_psi_sharp, 2)) <= 1e-8);
        CHECK(inner_product(InnerKind::l2, fam, WaveRole::psi, 3, WaveRole::eps_psi_sharp, 2) ==
              doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("skew-orthonormal systems produce the canonical pairing matrix") {
    // U^{(1)} = psi_0, chi_0', psi_2, chi_2', ...; U^{(4)} = eps psi_1, chi_1, ...
    const int n = 3;
    for (const Family& fam : {Family::hermite(), Family::laguerre(0.5)}) {
        for (int jj = 0; jj < 2 * n; ++jj)
            for (int kk = 0; kk < 2 * n; ++kk) {
                double expect = (kk == jj + 1 && jj % 2 == 0)   ? 1.0
                                : (jj == kk + 1 && kk % 2 == 0) ? -1.0
                                                                : 0.0;
                WaveRole r1f = jj % 2 == 0 ? WaveRole::psi : WaveRole::chi_prime;
                WaveRole r1g = kk % 2 == 0 ? WaveRole::psi : WaveRole::chi_prime;
                double v1 = inner_product(InnerKind::skew1, fam, r1f, 2 * (jj / 2), r1g,
                                          2 * (kk / 2));
                CHECK(v1 == doctest::Approx(expect).epsilon(1e-8));

                WaveRole r4f = jj % 2 == 0 ? WaveRole::eps_psi : WaveRole::chi;
                WaveRole r4g = kk % 2 == 0 ? WaveRole::eps_psi : WaveRole::chi;
                double v4 = inner_product(InnerKind::skew4, fam, r4f, 2 * (jj / 2) + 1, r4g,
                                          2 * (kk / 2) + 1);
                CHECK(v4 == doctest::Approx(expect).epsilon(1e-8));
            }
    }
}

TEST_CASE("skew4 reduces to the one-sided derivative form when f(0) = 0") {
    // chi_1 vanishes at the Laguerre origin, so <f,g>_4 = <f',g>_2
    Family fam = Family::laguerre(0.5);
    double sym = inner_product(InnerKind::skew4, fam, WaveRole::chi, 1, WaveRole::eps_psi, 3);
    double oneside =
        inner_product(InnerKind::l2, fam, WaveRole::chi_prime, 1, WaveRole::eps_psi, 3);
    CHECK(sym == doctest::Approx(oneside).epsilon(1e-9));
}

TEST_CASE("mass of the level densities") {
    CHECK(mass_check(EnsembleSpec(2, 5)) == doctest::Approx(5.0).epsilon(1e-8));
    CHECK(mass_check(EnsembleSpec(1, 1)) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(mass_check(EnsembleSpec(4, 3, 8.5)) == doctest::Approx(3.0).epsilon(1e-8));
}

TEST_CASE("mass with an integrable origin singularity") {
    // q = p - n < 0 makes rho ~ x^q near 0; handled by the end-panel substitution
    CHECK(mass_check(EnsembleSpec(2, 3, 2.5)) == doctest::Approx(3.0).epsilon(1e-8));
    CHECK(mass_check(EnsembleSpec(1, 2, 1.75)) == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("quadrature spec guards") {
    QuadSpec bad;
    bad.max_depth = 61;
    CHECK_THROWS_AS((void)integrate([](double) { return 1.0; }, 0.0, 1.0, bad), Error);
    CHECK_THROWS_AS((void)integrate([](double) { return 1.0; }, 1.0, 0.0), Error);
}
