#include "core/densities.hpp"

#include <cmath>

#include "core/error.hpp"

namespace softedge {

namespace {

void check_domain(const EnsembleSpec& spec, double x) {
    if (!std::isfinite(x)) throw Error(Errc::domain, "density argument must be finite");
    if (spec.is_laguerre() && !(x > 0)) throw Error(Errc::domain, "laguerre density needs x > 0");
}

}  // namespace

EnsembleSpec::EnsembleSpec(int beta_, int n_, std::optional<double> p_) : beta(beta_), n(n_), p(p_) {
    if (beta != 1 && beta != 2 && beta != 4) throw Error(Errc::invalid, "beta must be 1, 2 or 4");
    if (n < 1) throw Error(Errc::invalid, "dimension n must be >= 1");
    if (p) {
        double q = beta == 4 ? 2.0 * (*p - n) : *p - n;
        if (!(q > -1.0))
            throw Error(Errc::invalid, beta == 4 ? "laguerre beta=4 requires p > n - 1/2"
                                                 : "laguerre requires p > n - 1");
    }
}

Family wave_family(const EnsembleSpec& spec) {
    if (!spec.is_laguerre()) return Family::hermite();
    return Family::laguerre(spec.beta == 4 ? 2.0 * (*spec.p - spec.n) : *spec.p - spec.n);
}

double rho_exact(const EnsembleSpec& spec, double x) {
    check_domain(spec, x);
    Family fam = wave_family(spec);
    switch (spec.beta) {
        case 2:
            return phi_square_sum(fam, spec.n, x);
        case 1: {
            double psi = wave_psi_chi(fam, spec.n - 1, x).psi;
            return phi_square_sum(fam, spec.n, x) + psi * (1.0 + big_psi_sharp(fam, spec.n, x));
        }
        default: {  // beta = 4
            double psi = wave_psi_chi(fam, 2 * spec.n, x).psi;
            return 0.5 * (phi_square_sum(fam, 2 * spec.n + 1, x) +
                          psi * big_psi_sharp(fam, 2 * spec.n + 1, x));
        }
    }
}

double rho_exact_altform(const EnsembleSpec& spec, double x) {
    check_domain(spec, x);
    Family fam = wave_family(spec);
    switch (spec.beta) {
        case 2:
            return phi_square_sum(fam, spec.n, x);
        case 1: {
            double psi = wave_psi_chi(fam, spec.n - 1, x).psi;
            return phi_square_sum(fam, spec.n - 1, x) + psi * (1.0 + big_psi_sharp(fam, spec.n - 2, x));
        }
        default: {
            double psi = wave_psi_chi(fam, 2 * spec.n, x).psi;
            return 0.5 *
                   (phi_square_sum(fam, 2 * spec.n, x) + psi * big_psi_sharp(fam, 2 * spec.n - 1, x));
        }
    }
}

ScalingParams edge_scaling(const EnsembleSpec& spec) {
    ShiftedIndex si = shifted_index(spec.beta, spec.n, spec.p);
    return scaling_params(si.n_eff, si.p_eff);
}

double rho_rescaled(const EnsembleSpec& spec, double s) {
    ScalingParams sp = edge_scaling(spec);
    double x = sp.mu + sp.sigma * s;
    if (spec.is_laguerre() && !(x > 0))
        throw Error(Errc::domain, "rescaled point left the laguerre domain");
    double rho = rho_exact(spec, x);
    return spec.beta == 4 ? 2.0 * sp.sigma * rho : sp.sigma * rho;
}

}  // namespace softedge
