#pragma once

#include "core/error.hpp"

namespace softedge {

// Wave-function family. Laguerre carries the hidden parameter q > -1 that pins
// the second index of every wave function to n + q; Hermite has no q.
struct Family {
    enum class Kind { hermite, laguerre };
    Kind kind = Kind::hermite;
    double q = 0.0;

    static Family hermite() { return {Kind::hermite, 0.0}; }
    static Family laguerre(double q);
    bool is_laguerre() const { return kind == Kind::laguerre; }
};

// gamma_nu = sqrt(2 Gamma((nu+1)/2) / Gamma(nu/2 + 1)), nu > -1.
double gamma_nu(double nu);
double log_gamma_nu(double nu);

// Orthonormal wave function phi_n (Hermite) or phi_{n, n+q} (Laguerre).
double wave_phi(const Family& fam, int n, double x);

// The bi-orthonormal pair: Hermite chi = gamma_n phi, psi = phi / gamma_n;
// Laguerre chi = gamma_n gamma_{n+q} sqrt(x/2) phi, psi = phi / (gamma_n gamma_{n+q} sqrt(x/2)).
struct PsiChi {
    double psi;
    double chi;
};
PsiChi wave_psi_chi(const Family& fam, int n, double x);

// eps(psi_sharp_n), the antiderivative of 2 psi_n with the symmetric integration
// constant; computed by the exact recursion eps psi#_{n+1} = eps psi#_{n-1} - chi_n
// from the closed-form base cases. O(n) per point.
double eps_psi_sharp(const Family& fam, int n, double x);

// Psi#_n = eps psi#_n - [n even]; vanishes at +infinity.
double big_psi_sharp(const Family& fam, int n, double x);

// sum_{j < count} phi_j(x)^2 in a single recurrence pass (the beta = 2 kernel
// diagonal). Overflow-safe for the full supported index range.
double phi_square_sum(const Family& fam, int count, double x);

}  // namespace softedge
