#include "core/validate.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "core/densities.hpp"
#include "core/expansions.hpp"
#include "core/polyalg.hpp"
#include "core/quad.hpp"
#include "core/specfun.hpp"

namespace softedge {

namespace {

struct Suite {
    std::vector<CheckResult> results;

    void tol_check(const std::string& name, double measure, double threshold,
                   const std::string& detail = "") {
        results.push_back({name, measure <= threshold, measure, threshold, detail});
    }
    void exact_check(const std::string& name, bool ok, const std::string& detail = "") {
        results.push_back({name, ok, ok ? 0.0 : 1.0, 0.0, detail});
    }
    void run_guarded(const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            results.push_back({name, false, HUGE_VAL, 0.0, std::string("exception: ") + e.what()});
        }
    }
};

double max_abs(std::initializer_list<double> xs) {
    double m = 0.0;
    for (double x : xs) m = std::max(m, std::fabs(x));
    return m;
}

void airy_checks(Suite& s) {
    // ODE residual |Ai'' - x Ai|, second derivative by the 5-point central stencil
    double worst = 0.0;
    const double d = 4e-3;
    for (int i = 0; i < 50; ++i) {
        double x = -5.0 + 10.0 * i / 49.0;
        double second = (-airy_ai(x + 2 * d) + 16.0 * airy_ai(x + d) - 30.0 * airy_ai(x) +
                         16.0 * airy_ai(x - d) - airy_ai(x - 2 * d)) /
                        (12.0 * d * d);
        worst = std::max(worst, std::fabs(second - x * airy_ai(x)));
    }
    s.tol_check("airy-ode-residual", worst, 1e-8);

    worst = 0.0;
    const double d2 = 1e-6;
    for (int i = 0; i < 50; ++i) {
        double x = -8.0 + 12.0 * i / 49.0;
        double fd = (airy_int(x + d2, 0) - airy_int(x - d2, 0)) / (2.0 * d2);
        worst = std::max(worst, std::fabs(fd - airy_ai(x)));
    }
    s.tol_check("airy-antideriv-derivative", worst, 1e-8);

    bool mono = true;
    double prev = airy_int(0.0, 0);
    for (int i = 1; i <= 50; ++i) {
        double v = airy_int(10.0 * i / 50.0, 0);
        if (v < prev) mono = false;
        prev = v;
    }
    s.exact_check("airy-antideriv-monotone", mono, "AI_0 nondecreasing on [0, 10]");
}

void gamma_checks(Suite& s) {
    double worst = 0.0;
    for (double nu : {1.0, 2.5, 10.0, 100.0})
        worst = std::max(worst,
                         std::fabs(0.5 * gamma_nu(nu) * gamma_nu(nu - 1.0) - std::sqrt(2.0 / nu)));
    s.tol_check("gamma-nu-functional-equation", worst, 1e-13);
}

void structure_relation(Suite& s) {
    double worst = 0.0;
    const double d = 1e-5;
    for (const Family& fam :
         {Family::hermite(), Family::laguerre(0.5), Family::laguerre(3.0)}) {
        for (int n = 0; n <= 6; ++n) {
            for (int i = 0; i < 20; ++i) {
                double x = fam.is_laguerre() ? 0.4 + 14.0 * i / 19.0 : -4.0 + 8.0 * i / 19.0;
                double lhs = (wave_psi_chi(fam, n, x + d).chi - wave_psi_chi(fam, n, x - d).chi) /
                             (2.0 * d);
                double rhs = 2.0 * (wave_psi_chi(fam, n - 1, x).psi -
                                    wave_psi_chi(fam, n + 1, x).psi);
                worst = std::max(worst, std::fabs(lhs - rhs));
            }
        }
    }
    s.tol_check("structure-relation", worst, 1e-7);
}

void orthonormality(Suite& s) {
    double worst = 0.0;
    for (const Family& fam : {Family::hermite(), Family::laguerre(0.5)}) {
        for (int n = 0; n <= 4; ++n)
            for (int m = n; m <= 4; ++m) {
                double v = inner_product(InnerKind::l2, fam, WaveRole::phi, n, WaveRole::phi, m);
                worst = std::max(worst, std::fabs(v - (n == m ? 1.0 : 0.0)));
            }
    }
    s.tol_check("l2-orthonormality", worst, 1e-9);
}

void psi_integral_parity(Suite& s) {
    // int psi_n = eps psi#_n at +infinity; evaluate far beyond the edge
    double worst = 0.0;
    for (const Family& fam : {Family::hermite(), Family::laguerre(1.5)}) {
        for (int n = 0; n <= 7; ++n) {
            ScalingParams sp = fam.is_laguerre() ? scaling_params(n + 1.0, n + 1.0 + fam.q)
                                                 : scaling_params(n + 1.0, std::nullopt);
            double v = eps_psi_sharp(fam, n, sp.mu + 16.0 * sp.sigma);
            worst = std::max(worst, std::fabs(v - (n % 2 == 0 ? 1.0 : 0.0)));
        }
    }
    s.tol_check("psi-integral-parity", worst, 1e-9);
}

void skew_orthonormality(Suite& s) {
    double worst = 0.0;
    for (const Family& fam : {Family::hermite(), Family::laguerre(0.5)}) {
        const int n = 2;
        for (int jj = 0; jj < 2 * n; ++jj)
            for (int kk = 0; kk < 2 * n; ++kk) {
                auto role = [&](int idx, WaveRole& r, int& wi, bool beta4) {
                    if (beta4) {
                        r = idx % 2 == 0 ? WaveRole::eps_psi : WaveRole::chi;
                        wi = 2 * (idx / 2) + 1;
                    } else {
                        r = idx % 2 == 0 ? WaveRole::psi : WaveRole::chi_prime;
                        wi = 2 * (idx / 2);
                    }
                };
                double expect = (kk == jj + 1 && jj % 2 == 0)   ? 1.0
                                : (jj == kk + 1 && kk % 2 == 0) ? -1.0
                                                                : 0.0;
                WaveRole fr, gr;
                int fn, gn;
                role(jj, fr, fn, false);
                role(kk, gr, gn, false);
                double v1 = inner_product(InnerKind::skew1, fam, fr, fn, gr, gn);
                role(jj, fr, fn, true);
                role(kk, gr, gn, true);
                double v4 = inner_product(InnerKind::skew4, fam, fr, fn, gr, gn);
                worst = std::max(worst, max_abs({v1 - expect, v4 - expect}));
            }
    }
    s.tol_check("skew-orthonormality", worst, 1e-8);
}

void plus_minus_one(Suite& s) {
    double worst = 0.0;
    for (const Family& fam : {Family::hermite(), Family::laguerre(3.0)}) {
        for (int n = 0; n <= 3; ++n) {
            double up = inner_product(InnerKind::l2, fam, WaveRole::psi, n,
                                      WaveRole::eps_psi_sharp, n + 1);
            double dn = inner_product(InnerKind::l2, fam, WaveRole::psi, n,
                                      WaveRole::eps_psi_sharp, n - 1);
            worst = std::max(worst, std::fabs(up - (n % 2 == 0 ? -1.0 : 0.0)));
            worst = std::max(worst, std::fabs(dn - (n % 2 == 1 ? 1.0 : 0.0)));
        }
    }
    s.tol_check("plus-minus-one-integrals", worst, 1e-8);
}

void mass_and_duality(Suite& s) {
    double worst = 0.0;
    for (int beta : {1, 2, 4})
        for (int n : {1, 3}) {
            worst = std::max(worst, std::fabs(mass_check(EnsembleSpec(beta, n)) - n));
            worst = std::max(worst, std::fabs(mass_check(EnsembleSpec(beta, n, n + 5.5)) - n));
        }
    s.tol_check("mass-conservation", worst, 1e-8);

    worst = 0.0;
    {
        const int n = 2;
        const double p = 5.5;
        EnsembleSpec e1(1, 2 * n + 1, 2 * p + 1), e4(4, n, p);
        Family fam = wave_family(e4);
        EnsembleSpec g1(1, 2 * n + 1), g4(4, n);
        for (int i = 0; i < 10; ++i) {
            double x = 1.0 + 14.0 * i / 9.0;
            worst = std::max(worst, std::fabs(rho_exact(e1, x) - 2.0 * rho_exact(e4, x) -
                                              wave_psi_chi(fam, 2 * n, x).psi));
            double xg = -4.0 + 8.0 * i / 9.0;
            worst = std::max(
                worst, std::fabs(rho_exact(g1, xg) - 2.0 * rho_exact(g4, xg) -
                                 wave_psi_chi(Family::hermite(), 2 * n, xg).psi));
        }
    }
    s.tol_check("orthogonal-symplectic-duality", worst, 1e-10);

    worst = 0.0;
    for (int n : {5, 6}) {
        EnsembleSpec g(1, n), l(1, n, n + 3.5);
        EnsembleSpec g4(4, n), l4(4, n, n + 3.5);
        for (int i = 0; i < 20; ++i) {
            double xg = -4.0 + 8.0 * i / 19.0, xl = 0.5 + 24.0 * i / 19.0;
            worst = std::max(worst, max_abs({rho_exact(g, xg) - rho_exact_altform(g, xg),
                                             rho_exact(l, xl) - rho_exact_altform(l, xl),
                                             rho_exact(g4, xg) - rho_exact_altform(g4, xg),
                                             rho_exact(l4, xl) - rho_exact_altform(l4, xl)}));
        }
    }
    s.tol_check("even-odd-unification", worst, 1e-10);

    worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
        EnsembleSpec g(2, n);
        for (int i = 0; i < 10; ++i) {
            double x = 0.3 + 3.0 * i / 9.0;
            worst = std::max(worst, std::fabs(rho_exact(g, x) - rho_exact(g, -x)));
        }
    }
    s.tol_check("gaussian-evenness", worst, 1e-12);
}

void table_identities(Suite& s) {
    bool ok = true;
    std::string detail;
    for (int j = 0; j <= 2 && ok; ++j)
        for (auto kind : {Family::Kind::hermite, Family::Kind::laguerre}) {
            if (!(omega_coeff(1, j, kind).coeffs == omega_coeff(4, j, kind).coeffs)) {
                ok = false;
                detail = "beta 1 vs 4 mismatch";
            }
            if (omega_coeff(1, j, kind).nu != 1 || omega_coeff(4, j, kind).nu != 0) {
                ok = false;
                detail = "nu tags wrong";
            }
        }
    for (int beta : {1, 2, 4})
        for (int j = 0; j <= 2 && ok; ++j)
            if (!(omega_coeff(beta, j, Family::Kind::laguerre).coeffs.at_tau_zero() ==
                  omega_coeff(beta, j, Family::Kind::hermite).coeffs)) {
                ok = false;
                detail = "tau=0 specialization mismatch at beta " + std::to_string(beta) +
                         " j " + std::to_string(j);
            }
    // omega_{beta,0} = omega_{2,0} + (1/2) Ai AI_nu
    for (int beta : {1, 4}) {
        AiryQuad diff = omega_coeff(beta, 0, Family::Kind::laguerre).coeffs -
                        omega_coeff(2, 0, Family::Kind::laguerre).coeffs;
        AiryQuad want;
        want.ai_int = BiPoly{{1, 2, 0, 0}};
        if (!(diff == want)) {
            ok = false;
            detail = "leading-order AI relation broken";
        }
    }
    for (int k = 1; k <= 2 && ok; ++k) {
        auto lag_s = wave_series_table(k, Family::Kind::laguerre);
        auto her_s = wave_series_table(k, Family::Kind::hermite);
        auto lag_a = wave_antideriv_table(k, Family::Kind::laguerre);
        auto her_a = wave_antideriv_table(k, Family::Kind::hermite);
        if (!(lag_s.first.at_tau_zero() == her_s.first) ||
            !(lag_s.second.at_tau_zero() == her_s.second) ||
            !(lag_a.first.at_tau_zero() == her_a.first) ||
            !(lag_a.second.at_tau_zero() == her_a.second)) {
            ok = false;
            detail = "wave tables tau=0 mismatch at k " + std::to_string(k);
        }
    }
    s.exact_check("exact-table-identities", ok, detail);
}

void reconstruction_roundtrip(Suite& s) {
    bool ok = true;
    std::string detail;
    struct Case {
        int beta, j;
    };
    for (Case c : {Case{2, 1}, Case{1, 1}, Case{1, 2}, Case{4, 1}, Case{4, 2}}) {
        AiryCombo omega = omega_coeff(c.beta, c.j, Family::Kind::laguerre);
        AiryCombo omega0 = omega_coeff(c.beta, 0, Family::Kind::laguerre);
        try {
            auto P = reconstruct_P(c.beta, c.j, omega, omega0);
            const auto& ref = reference_gen_poly(c.beta, c.j);
            for (size_t i = 0; i < P.size(); ++i)
                if (!(P[i] == ref[i])) ok = false;
            if (!(omega_from_P(c.beta, c.j, P).coeffs == omega.coeffs)) ok = false;
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
    }
    s.exact_check("reconstruction-roundtrip", ok, detail);
}

void laguerre_gaussian_limit(Suite& s) {
    double worst = 0.0;
    EnsembleSpec lag(2, 6, 1e6), gau(2, 6);
    for (double sv : {-2.0, 0.0, 2.0})
        worst = std::max(worst, std::fabs(rho_rescaled(lag, sv) - rho_rescaled(gau, sv)));
    s.tol_check("laguerre-to-gaussian-limit", worst, 5e-3);
}

void eps_limits(Suite& s) {
    // The Laguerre remainder decays slower in x; push its sample point further out.
    double worst = 0.0;
    for (const Family& fam : {Family::hermite(), Family::laguerre(2.0)}) {
        double mult = fam.is_laguerre() ? 16.0 : 10.0;
        for (int n : {6, 7}) {
            ScalingParams sp = fam.is_laguerre() ? scaling_params(n + 0.5, n + 0.5 + fam.q)
                                                 : scaling_params(n + 0.5, std::nullopt);
            double x = sp.mu + mult * sp.sigma;
            worst = std::max(worst,
                             std::fabs(eps_psi_sharp(fam, n, x) - (n % 2 == 0 ? 1.0 : 0.0)));
        }
    }
    s.tol_check("eps-psi-sharp-limit", worst, 1e-10);
}

void quad_self_consistency(Suite& s) {
    EnsembleSpec e(1, 3, 8.5);
    QuadSpec a, b;
    b.abs_tol = a.abs_tol * 0.5;
    b.rel_tol = a.rel_tol * 0.5;
    double d = std::fabs(mass_check(e, a) - mass_check(e, b));
    s.tol_check("quadrature-self-consistency", d, 1e-9);
}

}  // namespace

std::vector<CheckResult> run_validation() {
    Suite s;
    s.run_guarded("airy", [&] { airy_checks(s); });
    s.run_guarded("gamma", [&] { gamma_checks(s); });
    s.run_guarded("structure", [&] { structure_relation(s); });
    s.run_guarded("orthonormality", [&] { orthonormality(s); });
    s.run_guarded("psi-parity", [&] { psi_integral_parity(s); });
    s.run_guarded("skew", [&] { skew_orthonormality(s); });
    s.run_guarded("plus-minus-one", [&] { plus_minus_one(s); });
    s.run_guarded("mass-duality", [&] { mass_and_duality(s); });
    s.run_guarded("tables", [&] { table_identities(s); });
    s.run_guarded("reconstruction", [&] { reconstruction_roundtrip(s); });
    s.run_guarded("laguerre-limit", [&] { laguerre_gaussian_limit(s); });
    s.run_guarded("eps-limits", [&] { eps_limits(s); });
    s.run_guarded("quad", [&] { quad_self_consistency(s); });
    return s.results;
}

}  // namespace softedge
