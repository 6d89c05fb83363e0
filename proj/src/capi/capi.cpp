#include "softedge.h"

#include <cstring>
#include <limits>
#include <string>

#include <json.hpp>

#include "core/densities.hpp"
#include "core/error.hpp"
#include "core/expansions.hpp"
#include "core/polyalg.hpp"
#include "core/quad.hpp"
#include "core/specfun.hpp"
#include "core/validate.hpp"

using nlohmann::json;

struct softedge_ensemble {
    softedge::EnsembleSpec spec;
};

namespace {

thread_local std::string g_last_error;

softedge_status status_of(const softedge::Error& e) {
    using softedge::Errc;
    switch (e.code()) {
        case Errc::domain: return SOFTEDGE_ERR_DOMAIN;
        case Errc::invalid: return SOFTEDGE_ERR_INVALID;
        case Errc::unsupported_order: return SOFTEDGE_ERR_UNSUPPORTED_ORDER;
        case Errc::capability: return SOFTEDGE_ERR_CAPABILITY;
        case Errc::no_convergence: return SOFTEDGE_ERR_NO_CONVERGENCE;
        case Errc::inconsistent_system: return SOFTEDGE_ERR_INCONSISTENT;
        case Errc::internal: return SOFTEDGE_ERR_INTERNAL;
    }
    return SOFTEDGE_ERR_INTERNAL;
}

template <class F>
softedge_status guard(F&& f) {
    try {
        f();
        g_last_error.clear();
        return SOFTEDGE_OK;
    } catch (const softedge::Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SOFTEDGE_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

json tables_to_json() {
    using softedge::Family;
    json density = json::array();
    for (int beta : {1, 2, 4})
        for (int j = 0; j <= 2; ++j)
            for (auto kind : {Family::Kind::hermite, Family::Kind::laguerre}) {
                softedge::AiryCombo combo = softedge::omega_coeff(beta, j, kind);
                const char* labels[5] = {"Ai^2", "Aip^2", "Ai*Aip", "Ai*AI", "Aip*AI"};
                const softedge::BiPoly* coeffs[5] = {&combo.coeffs.ai2, &combo.coeffs.aip2,
                                                     &combo.coeffs.ai_aip, &combo.coeffs.ai_int,
                                                     &combo.coeffs.aip_int};
                for (int t = 0; t < 5; ++t) {
                    if (coeffs[t]->is_zero()) continue;
                    density.push_back({{"beta", beta},
                                       {"j", j},
                                       {"family", kind == Family::Kind::hermite ? "gaussian"
                                                                                : "laguerre"},
                                       {"term", labels[t]},
                                       {"nu", combo.nu},
                                       {"coefficient", coeffs[t]->to_string()}});
                }
            }
    json wave = json::array();
    for (auto kind : {Family::Kind::hermite, Family::Kind::laguerre})
        for (int k = 1; k <= 2; ++k) {
            auto ser = softedge::wave_series_table(k, kind);
            auto anti = softedge::wave_antideriv_table(k, kind);
            const char* fam = kind == Family::Kind::hermite ? "hermite" : "laguerre";
            wave.push_back({{"kind", "series"}, {"k", k}, {"family", fam},
                            {"term", "Ai"}, {"coefficient", ser.first.to_string()}});
            wave.push_back({{"kind", "series"}, {"k", k}, {"family", fam},
                            {"term", "Aip"}, {"coefficient", ser.second.to_string()}});
            wave.push_back({{"kind", "antideriv"}, {"k", k}, {"family", fam},
                            {"term", "Ai"}, {"coefficient", anti.first.to_string()}});
            wave.push_back({{"kind", "antideriv"}, {"k", k}, {"family", fam},
                            {"term", "Aip"}, {"coefficient", anti.second.to_string()}});
        }
    return json{{"density", density}, {"wave", wave}};
}

}  // namespace

extern "C" {

softedge_status softedge_ensemble_create_gaussian(int beta, int n, softedge_ensemble** out) {
    if (!out) return SOFTEDGE_ERR_INVALID;
    *out = nullptr;
    return guard([&] { *out = new softedge_ensemble{softedge::EnsembleSpec(beta, n)}; });
}

softedge_status softedge_ensemble_create_laguerre(int beta, int n, double p,
                                                  softedge_ensemble** out) {
    if (!out) return SOFTEDGE_ERR_INVALID;
    *out = nullptr;
    return guard([&] { *out = new softedge_ensemble{softedge::EnsembleSpec(beta, n, p)}; });
}

void softedge_ensemble_free(softedge_ensemble* e) { delete e; }

softedge_status softedge_density(const softedge_ensemble* e, double x, double* out) {
    if (!e || !out) return SOFTEDGE_ERR_INVALID;
    return guard([&] { *out = softedge::rho_exact(e->spec, x); });
}

softedge_status softedge_density_rescaled(const softedge_ensemble* e, double s, double* out) {
    if (!e || !out) return SOFTEDGE_ERR_INVALID;
    return guard([&] { *out = softedge::rho_rescaled(e->spec, s); });
}

softedge_status softedge_expansion_density(const softedge_ensemble* e, double s, int m,
                                           double* out) {
    if (!e || !out) return SOFTEDGE_ERR_INVALID;
    return guard([&] { *out = softedge::expansion_density(e->spec, s, m); });
}

softedge_status softedge_scaling(const softedge_ensemble* e, double out[6]) {
    if (!e || !out) return SOFTEDGE_ERR_INVALID;
    return guard([&] {
        softedge::ShiftedIndex si = softedge::shifted_index(e->spec.beta, e->spec.n, e->spec.p);
        softedge::ScalingParams sp = softedge::scaling_params(si.n_eff, si.p_eff);
        out[0] = sp.mu;
        out[1] = sp.sigma;
        out[2] = sp.h;
        out[3] = sp.tau;
        out[4] = si.n_eff;
        out[5] = si.p_eff ? *si.p_eff : std::numeric_limits<double>::quiet_NaN();
    });
}

softedge_status softedge_mass(const softedge_ensemble* e, double* out) {
    if (!e || !out) return SOFTEDGE_ERR_INVALID;
    return guard([&] { *out = softedge::mass_check(e->spec); });
}

double softedge_airy_ai(double x) { return softedge::airy_ai(x); }
double softedge_airy_ai_prime(double x) { return softedge::airy_ai_prime(x); }
double softedge_airy_int(double x, int nu) { return softedge::airy_int(x, nu); }

softedge_status softedge_reconstruct_text(int beta, int j, int* match, char** out) {
    if (!out) return SOFTEDGE_ERR_INVALID;
    *out = nullptr;
    return guard([&] {
        using softedge::Family;
        softedge::AiryCombo omega = softedge::omega_coeff(beta, j, Family::Kind::laguerre);
        softedge::AiryCombo omega0 = softedge::omega_coeff(beta, 0, Family::Kind::laguerre);
        auto P = softedge::reconstruct_P(beta, j, omega, omega0);
        const auto& ref = softedge::reference_gen_poly(beta, j);
        bool ok = P.size() == ref.size();
        std::string text;
        for (size_t i = 0; i < P.size(); ++i) {
            ok = ok && P[i] == ref[i];
            text += "P" + std::to_string(i + 1) + " = " + P[i].to_string() + "\n";
        }
        if (match) *match = ok ? 1 : 0;
        *out = dup_string(text);
    });
}

softedge_status softedge_tables_json(char** out) {
    if (!out) return SOFTEDGE_ERR_INVALID;
    *out = nullptr;
    return guard([&] { *out = dup_string(tables_to_json().dump(2)); });
}

softedge_status softedge_validate_json(int* n_failures, char** out) {
    if (!out) return SOFTEDGE_ERR_INVALID;
    *out = nullptr;
    return guard([&] {
        auto results = softedge::run_validation();
        json jr = json::array();
        json failures = json::array();
        int bad = 0;
        for (const auto& r : results) {
            jr.push_back({{"name", r.name},
                          {"passed", r.passed},
                          {"measure", r.measure},
                          {"threshold", r.threshold},
                          {"detail", r.detail}});
            if (!r.passed) {
                ++bad;
                failures.push_back(r.name);
            }
        }
        json doc{{"command", "validate"},
                 {"params", json::object()},
                 {"results", jr},
                 {"failures", failures}};
        if (n_failures) *n_failures = bad;
        *out = dup_string(doc.dump(2));
    });
}

void softedge_free_string(char* s) { delete[] s; }

const char* softedge_status_name(softedge_status s) {
    switch (s) {
        case SOFTEDGE_OK: return "ok";
        case SOFTEDGE_ERR_DOMAIN: return "domain";
        case SOFTEDGE_ERR_INVALID: return "invalid";
        case SOFTEDGE_ERR_UNSUPPORTED_ORDER: return "unsupported-order";
        case SOFTEDGE_ERR_CAPABILITY: return "capability";
        case SOFTEDGE_ERR_NO_CONVERGENCE: return "no-convergence";
        case SOFTEDGE_ERR_INCONSISTENT: return "inconsistent-system";
        case SOFTEDGE_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* softedge_last_error_message(void) { return g_last_error.c_str(); }

}  // extern "C"
