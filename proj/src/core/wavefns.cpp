#include "core/wavefns.hpp"

#include <cmath>

#include "core/specfun.hpp"

namespace softedge {

namespace {

constexpr int kMaxIndex = 10000;
constexpr double kMaxQ = 1e6;
constexpr double kLogQuarterPi = -0.28618247146235004;  // log(pi^{-1/4})

void check_index(int n) {
    if (n < -1) throw Error(Errc::invalid, "wave index must be >= -1");
    if (n > kMaxIndex) throw Error(Errc::capability, "wave index beyond supported range (10^4)");
}

double scaled_to_double(double m, double loge) {
    if (m == 0.0) return 0.0;
    if (loge > -690.0 && loge < 690.0) return m * std::exp(loge);
    double r = std::exp(loge + std::log(std::fabs(m)));
    return m < 0 ? -r : r;
}

// Forward three-term recurrence for phi_0 .. phi_{nmax} at fixed x, with joint
// rescaling of the running pair so intermediate magnitudes never leave the
// double range. sink(j, m, loge) receives each value as m * e^loge.
template <class Sink>
void phi_walk(const Family& fam, int nmax, double x, Sink&& sink) {
    double loge, v;
    if (fam.kind == Family::Kind::hermite) {
        loge = -0.5 * x * x + kLogQuarterPi;
        v = 1.0;
    } else {
        if (x < 0) throw Error(Errc::domain, "laguerre wave function needs x >= 0");
        if (x == 0.0) {
            if (fam.q < 0) throw Error(Errc::domain, "laguerre wave function diverges at x = 0 for q < 0");
            if (fam.q > 0) {
                for (int j = 0; j <= nmax; ++j) sink(j, 0.0, 0.0);
                return;
            }
            loge = 0.0;  // q = 0: phi_0(0) = 1
        } else {
            loge = 0.5 * fam.q * std::log(x) - 0.5 * x - 0.5 * std::lgamma(fam.q + 1.0);
        }
        v = 1.0;
    }
    sink(0, v, loge);
    double vprev = 0.0;
    const double q = fam.q;
    for (int j = 0; j < nmax; ++j) {
        double vnext;
        if (fam.kind == Family::Kind::hermite) {
            vnext = (x * v - std::sqrt(0.5 * j) * vprev) / std::sqrt(0.5 * (j + 1));
        } else {
            vnext = ((x - (2.0 * j + q + 1.0)) * v - std::sqrt(j * (j + q)) * vprev) /
                    std::sqrt((j + 1.0) * (j + 1.0 + q));
        }
        vprev = v;
        v = vnext;
        sink(j + 1, v, loge);
        double mag = std::max(std::fabs(v), std::fabs(vprev));
        if (mag > 0x1p400) {
            v *= 0x1p-400;
            vprev *= 0x1p-400;
            loge += 400.0 * 0.69314718055994531;
        } else if (mag > 0.0 && mag < 0x1p-400) {
            v *= 0x1p400;
            vprev *= 0x1p400;
            loge -= 400.0 * 0.69314718055994531;
        }
    }
}

void check_x(const Family& fam, double x) {
    if (!std::isfinite(x)) throw Error(Errc::domain, "wave function argument must be finite");
    if (fam.is_laguerre() && x < 0) throw Error(Errc::domain, "laguerre wave function needs x >= 0");
}

}  // namespace

Family Family::laguerre(double q) {
    if (!(q > -1.0)) throw Error(Errc::invalid, "laguerre family requires q > -1");
    if (q > kMaxQ) throw Error(Errc::capability, "laguerre q beyond supported range (10^6)");
    return {Kind::laguerre, q};
}

double log_gamma_nu(double nu) {
    if (!(nu > -1.0)) throw Error(Errc::domain, "gamma_nu requires nu > -1");
    return 0.5 * (0.69314718055994531 + log_gamma(0.5 * (nu + 1.0)) - log_gamma(0.5 * nu + 1.0));
}

double gamma_nu(double nu) { return std::exp(log_gamma_nu(nu)); }

double wave_phi(const Family& fam, int n, double x) {
    check_index(n);
    check_x(fam, x);
    if (n == -1) return 0.0;
    double rm = 0.0, rl = 0.0;
    phi_walk(fam, n, x, [&](int j, double m, double loge) {
        if (j == n) {
            rm = m;
            rl = loge;
        }
    });
    return scaled_to_double(rm, rl);
}

PsiChi wave_psi_chi(const Family& fam, int n, double x) {
    check_index(n);
    check_x(fam, x);
    if (n == -1) return {0.0, 0.0};
    if (fam.is_laguerre() && x == 0.0)
        throw Error(Errc::domain, "psi_{n} has a (x/2)^{-1/2} factor; x = 0 not allowed");
    double rm = 0.0, rl = 0.0;
    phi_walk(fam, n, x, [&](int j, double m, double loge) {
        if (j == n) {
            rm = m;
            rl = loge;
        }
    });
    double lg = log_gamma_nu(n);
    if (fam.is_laguerre()) lg += log_gamma_nu(n + fam.q) + 0.5 * std::log(0.5 * x);
    return {scaled_to_double(rm, rl - lg), scaled_to_double(rm, rl + lg)};
}

double eps_psi_sharp(const Family& fam, int n, double x) {
    check_index(n);
    check_x(fam, x);
    if (n == -1) return 0.0;
    double base;
    if (fam.kind == Family::Kind::hermite)
        base = gauss_cdf_sym(x);
    else
        base = 2.0 * reg_lower_gamma(0.5 * (fam.q + 1.0), 0.5 * x) - 1.0;
    if (n == 0) return base;
    // chi_j(0) = 0 for every q > -1, so the recursion sum vanishes at the origin
    if (fam.is_laguerre() && x == 0.0) return n % 2 == 0 ? base : 0.0;

    // eps psi#_n = [n even] * eps psi#_0 - sum of chi_j over j < n of opposite parity
    double half = fam.is_laguerre() ? 0.5 * std::log(0.5 * x) : 0.0;
    double sum = 0.0;
    phi_walk(fam, n - 1, x, [&](int j, double m, double loge) {
        if ((n - 1 - j) % 2 != 0) return;
        double lg = log_gamma_nu(j);
        if (fam.is_laguerre()) lg += log_gamma_nu(j + fam.q) + half;
        sum += scaled_to_double(m, loge + lg);
    });
    return (n % 2 == 0 ? base : 0.0) - sum;
}

double big_psi_sharp(const Family& fam, int n, double x) {
    double v = eps_psi_sharp(fam, n, x);
    return (n >= 0 && n % 2 == 0) ? v - 1.0 : v;
}

double phi_square_sum(const Family& fam, int count, double x) {
    if (count <= 0) return 0.0;
    check_index(count - 1);
    check_x(fam, x);
    if (fam.is_laguerre() && x == 0.0 && fam.q < 0)
        throw Error(Errc::domain, "phi_square_sum diverges at x = 0 for q < 0");
    double sm = 0.0, sl = 0.0;  // running sum = sm * e^sl
    bool first = true;
    phi_walk(fam, count - 1, x, [&](int, double m, double loge) {
        if (m == 0.0) return;
        double tm = m * m, tl = 2.0 * loge;
        if (first) {
            sm = tm;
            sl = tl;
            first = false;
        } else if (tl > sl) {
            double shift = sl - tl;
            sm = tm + (shift < -700.0 ? 0.0 : sm * std::exp(shift));
            sl = tl;
        } else {
            double shift = tl - sl;
            if (shift >= -700.0) sm += tm * std::exp(shift);
        }
    });
    return first ? 0.0 : scaled_to_double(sm, sl);
}

}  // namespace softedge
