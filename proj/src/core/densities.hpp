#pragma once

#include <optional>

#include "core/scaling.hpp"
#include "core/wavefns.hpp"

namespace softedge {

// A Gaussian or Laguerre ensemble of dimension n at beta in {1, 2, 4}.
//
// Index resolution (the hidden-parameter rule): the wave functions entering the
// density formulas carry q = p - n for beta = 1, 2 and q = 2(p - n) for beta = 4,
// with the beta = 4 density expressed through the shadow unitary ensemble of
// dimension 2n + 1 (alternate form: 2n). Gaussian ensembles have no q.
//
//   beta = 2:  rho = sum_{j<n} phi_j^2
//   beta = 1:  rho = rho_{2,n} + psi_{n-1} (1 + Psi#_n)
//              alt: rho_{2,n-1} + psi_{n-1} (1 + Psi#_{n-2})
//   beta = 4:  rho = [rho_{2,2n+1} + psi_{2n} Psi#_{2n+1}] / 2
//              alt: [rho_{2,2n} + psi_{2n} Psi#_{2n-1}] / 2
//
// rho integrates to n for every beta (the beta = 4 doubling convention lives in
// rho_rescaled, which returns sigma * 2 rho_4).
struct EnsembleSpec {
    int beta;
    int n;
    std::optional<double> p;  // absent = Gaussian

    EnsembleSpec(int beta, int n, std::optional<double> p = std::nullopt);
    bool is_laguerre() const { return p.has_value(); }
};

// Wave-function family resolved by the hidden-parameter rule above.
Family wave_family(const EnsembleSpec& spec);

double rho_exact(const EnsembleSpec& spec, double x);

// Mathematically equal second form; kept as a cross-validation surface.
double rho_exact_altform(const EnsembleSpec& spec, double x);

// sigma_{n'} rho(mu_{n'} + sigma_{n'} s) for beta = 1, 2 and
// sigma_{n'} 2 rho_4(mu_{n'} + sigma_{n'} s) for beta = 4.
double rho_rescaled(const EnsembleSpec& spec, double s);

// Scaling parameters at the shifted indices (n', p') of the spec.
ScalingParams edge_scaling(const EnsembleSpec& spec);

}  // namespace softedge
