#pragma once

#include <optional>
#include <utility>

#include "core/airyexpr.hpp"
#include "core/densities.hpp"
#include "core/tables.hpp"

namespace softedge {

// One expansion term omega_{beta,j}: a quadratic Airy combination with exact
// polynomial coefficients and the antiderivative offset tag nu = [beta == 1].
struct AiryCombo {
    AiryQuad coeffs;
    int nu = 0;
};

// The exact table entry; Gaussian tables are the Laguerre tables at tau = 0.
AiryCombo omega_coeff(int beta, int j, Family::Kind family);

// Numeric evaluation sum coeffs(label)(s,tau) * basis(label)(s) with the
// antiderivative AI_nu fixed by combo.nu. Requires tau in [0, 1].
double eval_omega(const AiryCombo& combo, double s, double tau);

// Truncated density expansion sum_{j<=m} omega_{beta,j}(s; tau_{n'}) h_{n'}^j,
// approximating rho_rescaled to O(h^{m+1}).
double expansion_density(const EnsembleSpec& spec, double s, int m);

enum class WaveExpKind { series, antideriv };  // psi# series vs its antiderivative

// Coefficient pair of order k (series: p_k, q_k; antideriv: P_k, Q_k).
std::pair<BiPoly, BiPoly> wave_coeff(WaveExpKind kind, int k, Family::Kind family);

// Truncated wave expansion centered at n + 1/2 (Hermite) or (n + 1/2, p + 1/2):
//   series:    Ai(s) + sum_k (p_k Ai + q_k Ai') h^k   ~ sigma psi#_n(mu + sigma s)
//   antideriv: AI_0(s) + sum_k (P_k Ai + Q_k Ai') h^k ~ Psi#_n(mu + sigma s)
double expansion_wave(Family::Kind kind, int n, std::optional<double> p, double s, int m,
                      WaveExpKind which);

// Scaling parameters at the wave-expansion center (n + 1/2, p + 1/2).
ScalingParams wave_expansion_scaling(Family::Kind kind, int n, std::optional<double> p);

}  // namespace softedge
