#include "core/expansions.hpp"

#include <cmath>

#include "core/error.hpp"
#include "core/specfun.hpp"

namespace softedge {

AiryCombo omega_coeff(int beta, int j, Family::Kind family) {
    return {density_table(beta, j, family), beta == 1 ? 1 : 0};
}

double eval_omega(const AiryCombo& combo, double s, double tau) {
    if (!(tau >= 0.0 && tau <= 1.0))
        throw Error(Errc::domain, "eval_omega: tau must lie in [0, 1]");
    double ai = airy_ai(s), aip = airy_ai_prime(s), aint = airy_int(s, combo.nu);
    const AiryQuad& c = combo.coeffs;
    return c.ai2.eval(s, tau) * ai * ai + c.aip2.eval(s, tau) * aip * aip +
           c.ai_aip.eval(s, tau) * ai * aip + c.ai_int.eval(s, tau) * ai * aint +
           c.aip_int.eval(s, tau) * aip * aint;
}

double expansion_density(const EnsembleSpec& spec, double s, int m) {
    if (m < 0 || m > 2)
        throw Error(Errc::unsupported_order, "expansion_density: truncation order m <= 2");
    Family::Kind kind = spec.is_laguerre() ? Family::Kind::laguerre : Family::Kind::hermite;
    ScalingParams sp = edge_scaling(spec);
    double sum = 0.0, hj = 1.0;
    for (int j = 0; j <= m; ++j) {
        sum += eval_omega(omega_coeff(spec.beta, j, kind), s, sp.tau) * hj;
        hj *= sp.h;
    }
    return sum;
}

std::pair<BiPoly, BiPoly> wave_coeff(WaveExpKind kind, int k, Family::Kind family) {
    return kind == WaveExpKind::series ? wave_series_table(k, family)
                                       : wave_antideriv_table(k, family);
}

ScalingParams wave_expansion_scaling(Family::Kind kind, int n, std::optional<double> p) {
    if (kind == Family::Kind::laguerre) {
        if (!p) throw Error(Errc::invalid, "laguerre wave expansion needs p");
        return scaling_params(n + 0.5, *p + 0.5);
    }
    return scaling_params(n + 0.5, std::nullopt);
}

double expansion_wave(Family::Kind kind, int n, std::optional<double> p, double s, int m,
                      WaveExpKind which) {
    if (m < 0 || m > 2)
        throw Error(Errc::unsupported_order, "expansion_wave: truncation order m <= 2");
    ScalingParams sp = wave_expansion_scaling(kind, n, p);
    double ai = airy_ai(s), aip = airy_ai_prime(s);
    double sum = which == WaveExpKind::series ? ai : airy_int(s, 0);
    double hk = sp.h;
    for (int k = 1; k <= m; ++k) {
        auto [pc, qc] = wave_coeff(which, k, kind);
        sum += (pc.eval(s, sp.tau) * ai + qc.eval(s, sp.tau) * aip) * hk;
        hk *= sp.h;
    }
    return sum;
}

}  // namespace softedge
