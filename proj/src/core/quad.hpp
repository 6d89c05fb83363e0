#pragma once

#include <functional>

#include "core/densities.hpp"
#include "core/wavefns.hpp"

namespace softedge {

struct QuadSpec {
    double abs_tol = 1e-11;
    double rel_tol = 1e-12;
    int max_depth = 50;                    // <= 60
    double truncation_threshold = 1e-16;   // relative tail cutoff for induced domains
};

// Adaptive bisection with a nested 7/15-point Gauss-Kronrod rule per panel.
// Throws ConvergenceError (carrying the best estimate) if a panel still fails
// its budget at max_depth.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadSpec& spec = {});

// int_0^hi f where f(x) ~ x^alpha * (smooth) near 0 with -1 < alpha < 0.
// The end panel is regularized by the substitution x = u^k.
double integrate_power_endpoint(const std::function<double(double)>& f, double hi, double alpha,
                                const QuadSpec& spec = {});

enum class InnerKind { l2, skew1, skew4 };

// Members of the wave-function systems entering the inner products.
enum class WaveRole { phi, psi, chi, psi_sharp, eps_psi, eps_psi_sharp, chi_prime };

// <f, g>_2 = int f g;  <f, g>_1 = <f, eps g>_2;  <f, g>_4 = (<f', g>_2 - <f, g'>_2)/2.
// The eps images and derivatives are supplied analytically through the structure
// relation, never by numerical differentiation.
double inner_product(InnerKind kind, const Family& fam, WaveRole f_role, int f_index,
                     WaveRole g_role, int g_index, const QuadSpec& spec = {});

// int_Omega rho for the given ensemble; equals n within quadrature accuracy.
double mass_check(const EnsembleSpec& spec, const QuadSpec& qspec = {});

}  // namespace softedge
