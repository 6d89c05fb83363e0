#pragma once

#include <optional>

namespace softedge {

// Soft-edge scaling and expansion parameters.
//   Gaussian:  mu = sqrt(2n), sigma = 2^{-1/2} n^{-1/6}, h = n^{-2/3}/4, tau = 0
//   Laguerre:  mu = (sqrt(n)+sqrt(p))^2,
//              sigma = (sqrt(n)+sqrt(p)) (1/sqrt(n)+1/sqrt(p))^{1/3},
//              tau = 4 / ((sqrt(n)+sqrt(p)) (1/sqrt(n)+1/sqrt(p))),
//              h = sigma/(tau mu) = (1/sqrt(n)+1/sqrt(p))^{4/3}/4
struct ScalingParams {
    double mu;
    double sigma;
    double h;
    double tau;  // 0 for Gaussian, in (0, 1] for Laguerre
};

// Accepts non-integer effective indices (the half-integer shifted ones).
ScalingParams scaling_params(double n_eff, std::optional<double> p_eff);

// The beta-dependent index shift:
//   beta=1 -> (n - 1/2, p - 1/2); beta=2 -> (n, p); beta=4 -> (2n + 1/2, 2p + 1/2)
struct ShiftedIndex {
    double n_eff;
    std::optional<double> p_eff;
};
ShiftedIndex shifted_index(int beta, int n, std::optional<double> p);

}  // namespace softedge
