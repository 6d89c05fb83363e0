#pragma once

#include <vector>

#include "core/airyexpr.hpp"
#include "core/wavefns.hpp"

namespace softedge {

// Exact rational coefficient tables of the built-in expansions, j (resp. k) up
// to 2. Single source of truth; tests and the reconstruction verdicts compare
// against these.

// Density expansion term omega_{beta,j} as a quadratic Airy expression
// (the AI-offset tag lives in expansions::omega_coeff).
const AiryQuad& density_table(int beta, int j, Family::Kind family);

// Wave-function expansion coefficient pairs:
//   series k: (p_k, q_k) multiplying (Ai, Ai') in the psi# expansion
//   antideriv k: (P_k, Q_k) in the integrated expansion
std::pair<BiPoly, BiPoly> wave_series_table(int k, Family::Kind family);
std::pair<BiPoly, BiPoly> wave_antideriv_table(int k, Family::Kind family);

// Generating-function polynomials P_{beta,j,k}, k = 1..2j, at the Laguerre
// level (Gaussian versions follow by tau = 0). beta = 4 shares beta = 1.
const std::vector<BiPoly>& reference_gen_poly(int beta, int j);

}  // namespace softedge
