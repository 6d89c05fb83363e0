#pragma once

namespace softedge {

// Airy function Ai(x).
// Absolute error <= 1e-12 on [-10, 10], relative error <= 1e-10 for x > 10.
double airy_ai(double x);

// Derivative Ai'(x), absolute error <= 1e-12 on [-10, 10].
double airy_ai_prime(double x);

// Antiderivative AI_nu(x) = nu - int_x^inf Ai(t) dt, nu in {0, 1}.
// AI_1(x) = 1 + AI_0(x) by construction. Absolute error <= 1e-11 on [-10, 10].
double airy_int(double x, int nu);

// erf(x / sqrt(2)) = 2*Phi(x) - 1, the symmetric Gaussian cumulative.
double gauss_cdf_sym(double x);

// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double reg_lower_gamma(double a, double x);

// log Gamma for positive arguments (thin wrapper, kept for one call site style)
double log_gamma(double x);

}  // namespace softedge
