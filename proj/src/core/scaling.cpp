#include "core/scaling.hpp"

#include <cmath>

#include "core/error.hpp"

namespace softedge {

ScalingParams scaling_params(double n_eff, std::optional<double> p_eff) {
    if (!(n_eff > 0)) throw Error(Errc::domain, "scaling_params: n_eff must be positive");
    if (!p_eff) {
        double mu = std::sqrt(2.0 * n_eff);
        double sigma = std::pow(n_eff, -1.0 / 6.0) / std::sqrt(2.0);
        double h = 0.25 * std::pow(n_eff, -2.0 / 3.0);
        return {mu, sigma, h, 0.0};
    }
    if (!(*p_eff > 0)) throw Error(Errc::domain, "scaling_params: p_eff must be positive");
    double rn = std::sqrt(n_eff), rp = std::sqrt(*p_eff);
    double a = rn + rp, b = 1.0 / rn + 1.0 / rp;
    double mu = a * a;
    double sigma = a * std::cbrt(b);
    double tau = 4.0 / (a * b);
    double h = 0.25 * std::pow(b, 4.0 / 3.0);
    return {mu, sigma, h, tau};
}

ShiftedIndex shifted_index(int beta, int n, std::optional<double> p) {
    switch (beta) {
        case 1:
            return {n - 0.5, p ? std::optional<double>(*p - 0.5) : std::nullopt};
        case 2:
            return {(double)n, p};
        case 4:
            return {2.0 * n + 0.5, p ? std::optional<double>(2.0 * *p + 0.5) : std::nullopt};
        default:
            throw Error(Errc::invalid, "shifted_index: beta must be 1, 2 or 4");
    }
}

}  // namespace softedge
