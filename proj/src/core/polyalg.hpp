#pragma once

#include <vector>

#include "core/expansions.hpp"

namespace softedge {

// omega_{beta,j} rebuilt from the generating-function polynomials through
//   omega_j = dP_1 * omega_0 + sum_{k=1}^{2j} (P_k + dP_{k+1}) d^k omega_0
// with P_{2j+1} = 0 and the omega_0 derivative chain computed symbolically.
// P must have length 2j.
AiryCombo omega_from_P(int beta, int j, const std::vector<BiPoly>& P);

// Inverse direction: the unique exact (P_1, ..., P_2j) with
// omega_from_P(beta, j, P) = omega, obtained by exact linear elimination over
// the unknown polynomial coefficients, ordered P_{2j}, ..., P_1. The
// overdetermined equations must hold exactly, otherwise Errc::inconsistent_system.
// beta = 2 supports j = 1 only (three equations cannot pin four unknowns).
std::vector<BiPoly> reconstruct_P(int beta, int j, const AiryCombo& omega,
                                  const AiryCombo& omega0);

}  // namespace softedge
