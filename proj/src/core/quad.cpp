#include "core/quad.hpp"

#include <cmath>

#include "core/error.hpp"

namespace softedge {

namespace {

// 7/15 Gauss-Kronrod nodes and weights (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    double value;
    double err;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = f(c);
    double resg = kWg[3] * fc;
    double resk = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        double dx = h * kXgk[j];
        double f1 = f(c - dx), f2 = f(c + dx);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    return {resk * h, std::fabs((resk - resg) * h)};
}

struct AdaptState {
    const std::function<double(double)>& f;
    double budget;    // absolute error budget per unit length
    int max_depth;
    bool failed = false;
    double worst = 0.0;
};

double adapt(AdaptState& st, double a, double b, int depth) {
    PanelResult r = gk15(st.f, a, b);
    if (r.err <= st.budget * (b - a) || r.value == 0.0) return r.value;
    if (depth >= st.max_depth) {
        st.failed = true;
        st.worst = std::max(st.worst, r.err);
        return r.value;
    }
    double m = 0.5 * (a + b);
    return adapt(st, a, m, depth + 1) + adapt(st, m, b, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadSpec& spec) {
    if (!(lo < hi)) {
        if (lo == hi) return 0.0;
        throw Error(Errc::domain, "integrate: lo must be <= hi");
    }
    if (spec.max_depth > 60) throw Error(Errc::invalid, "integrate: max_depth <= 60");
    PanelResult whole = gk15(f, lo, hi);
    double scale = std::max(std::fabs(whole.value), 1e-300);
    double tol = std::max(spec.abs_tol, spec.rel_tol * scale);
    AdaptState st{f, tol / (hi - lo), spec.max_depth, false, 0.0};
    double v = adapt(st, lo, hi, 0);
    if (st.failed)
        throw ConvergenceError("integrate: tolerance not met at max_depth", v);
    return v;
}

double integrate_power_endpoint(const std::function<double(double)>& f, double hi, double alpha,
                                const QuadSpec& spec) {
    if (!(alpha > -1.0)) throw Error(Errc::domain, "integrate_power_endpoint: needs alpha > -1");
    // integer powers are analytic; steep fractional ones refine fast enough as is
    bool integral_power = alpha == std::floor(alpha);
    if (integral_power || alpha >= 3.0) return integrate(f, 0.0, hi, spec);
    double delta = std::min(1.0, 0.125 * hi);
    // x = u^k turns x^alpha dx into k u^{k(1+alpha)-1} du; k(1+alpha) >= 5 keeps
    // enough derivatives bounded for the Kronrod rule to converge geometrically
    int k = std::max(2, (int)std::ceil(5.0 / (1.0 + alpha)));
    auto sub = [&](double u) {
        if (u <= 0.0) return 0.0;
        double x = std::pow(u, k);
        return f(x) * k * std::pow(u, k - 1);
    };
    double left = integrate(sub, 0.0, std::pow(delta, 1.0 / k), spec);
    return left + integrate(f, delta, hi, spec);
}

namespace {

double eval_role(const Family& fam, WaveRole role, int n, double x) {
    switch (role) {
        case WaveRole::phi:
            return wave_phi(fam, n, x);
        case WaveRole::psi:
            return wave_psi_chi(fam, n, x).psi;
        case WaveRole::chi:
            return wave_psi_chi(fam, n, x).chi;
        case WaveRole::psi_sharp:
            return 2.0 * wave_psi_chi(fam, n, x).psi;
        case WaveRole::eps_psi:
            return 0.5 * eps_psi_sharp(fam, n, x);
        case WaveRole::eps_psi_sharp:
            return eps_psi_sharp(fam, n, x);
        case WaveRole::chi_prime:
            // structure relation: chi_n' = psi#_{n-1} - psi#_{n+1}
            return 2.0 * (wave_psi_chi(fam, n - 1, x).psi - wave_psi_chi(fam, n + 1, x).psi);
    }
    throw Error(Errc::internal, "eval_role: unreachable");
}

// eps image of a role, where it stays inside the role set
void eps_of(WaveRole role, WaveRole& out, double& scale) {
    switch (role) {
        case WaveRole::psi:
            out = WaveRole::eps_psi_sharp;
            scale = 0.5;
            return;
        case WaveRole::psi_sharp:
            out = WaveRole::eps_psi_sharp;
            scale = 1.0;
            return;
        case WaveRole::chi_prime:
            out = WaveRole::chi;  // eps(chi') = chi
            scale = 1.0;
            return;
        default:
            throw Error(Errc::invalid, "skew1 inner product: eps image not available for role");
    }
}

void deriv_of(WaveRole role, WaveRole& out, double& scale) {
    switch (role) {
        case WaveRole::eps_psi:
            out = WaveRole::psi;
            scale = 1.0;
            return;
        case WaveRole::eps_psi_sharp:
            out = WaveRole::psi_sharp;
            scale = 1.0;
            return;
        case WaveRole::chi:
            out = WaveRole::chi_prime;
            scale = 1.0;
            return;
        default:
            throw Error(Errc::invalid, "skew4 inner product: derivative not available for role");
    }
}

// power of x at the laguerre origin, used to route singular integrands
double origin_exponent(const Family& fam, WaveRole role) {
    if (!fam.is_laguerre()) return 0.0;
    switch (role) {
        case WaveRole::phi:
            return 0.5 * fam.q;
        case WaveRole::psi:
        case WaveRole::psi_sharp:
        case WaveRole::chi_prime:
            return 0.5 * (fam.q - 1.0);
        case WaveRole::chi:
            return 0.5 * (fam.q + 1.0);
        default:
            return 0.0;  // eps images are bounded
    }
}

// Edge padding in units of sigma: the integrands decay at least like Ai(s),
// so s* with exp(-(2/3) s*^{3/2} * 2) < threshold truncates the tail below it.
double tail_padding(const QuadSpec& spec) {
    double t = std::min(spec.truncation_threshold, 1e-8);
    return std::max(12.0, std::pow(-1.5 * std::log(t), 2.0 / 3.0));
}

double l2_product(const Family& fam, WaveRole fr, int fn, WaveRole gr, int gn,
                  const QuadSpec& spec) {
    int top = std::max(std::max(fn, gn), 1) + 3;
    auto f = [&](double x) { return eval_role(fam, fr, fn, x) * eval_role(fam, gr, gn, x); };
    if (fam.is_laguerre()) {
        ScalingParams sp = scaling_params(top, top + fam.q);
        double hi = sp.mu + tail_padding(spec) * sp.sigma;
        double alpha = origin_exponent(fam, fr) + origin_exponent(fam, gr);
        return integrate_power_endpoint(f, hi, alpha, spec);
    }
    ScalingParams sp = scaling_params(top, std::nullopt);
    double hi = sp.mu + tail_padding(spec) * sp.sigma;
    return integrate(f, -hi, hi, spec);
}

}  // namespace

double inner_product(InnerKind kind, const Family& fam, WaveRole fr, int fn, WaveRole gr, int gn,
                     const QuadSpec& spec) {
    switch (kind) {
        case InnerKind::l2:
            return l2_product(fam, fr, fn, gr, gn, spec);
        case InnerKind::skew1: {
            WaveRole ge;
            double scale;
            eps_of(gr, ge, scale);
            return scale * l2_product(fam, fr, fn, ge, gn, spec);
        }
        case InnerKind::skew4: {
            WaveRole fd, gd;
            double fs, gs;
            deriv_of(fr, fd, fs);
            deriv_of(gr, gd, gs);
            return 0.5 * (fs * l2_product(fam, fd, fn, gr, gn, spec) -
                          gs * l2_product(fam, fr, fn, gd, gn, spec));
        }
    }
    throw Error(Errc::internal, "inner_product: unreachable");
}

double mass_check(const EnsembleSpec& spec, const QuadSpec& qspec) {
    int top = spec.beta == 4 ? 2 * spec.n + 1 : spec.n;
    auto f = [&](double x) { return rho_exact(spec, x); };
    if (spec.is_laguerre()) {
        Family fam = wave_family(spec);
        ScalingParams sp = scaling_params(top, top + fam.q);
        double hi = sp.mu + tail_padding(qspec) * sp.sigma;
        double alpha = fam.q;
        if (spec.beta != 2) alpha = std::min(fam.q, 0.5 * (fam.q - 1.0));
        auto g = [&](double x) { return x > 0.0 ? rho_exact(spec, x) : 0.0; };
        return integrate_power_endpoint(g, hi, alpha, qspec);
    }
    ScalingParams sp = scaling_params(top, std::nullopt);
    double hi = sp.mu + tail_padding(qspec) * sp.sigma;
    return integrate(f, -hi, hi, qspec);
}

}  // namespace softedge
