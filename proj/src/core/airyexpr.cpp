#include "core/airyexpr.hpp"

#include "core/error.hpp"

namespace softedge {

void AiryLinear::insert(const Key& key, const BiPoly& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void AiryLinear::add(int k, int ai_factor, const BiPoly& coeff) {
    if (k < 0 || (ai_factor != 0 && ai_factor != 1))
        throw Error(Errc::invalid, "AiryLinear: bad monomial");
    insert({k, ai_factor}, coeff);
}

const BiPoly AiryLinear::coeff(int k, int ai_factor) const {
    auto it = terms_.find({k, ai_factor});
    return it == terms_.end() ? BiPoly{} : it->second;
}

AiryLinear operator+(const AiryLinear& a, const AiryLinear& b) {
    AiryLinear r = a;
    for (const auto& [k, c] : b.terms_) r.insert(k, c);
    return r;
}

AiryLinear operator-(const AiryLinear& a, const AiryLinear& b) {
    AiryLinear r = a;
    for (const auto& [k, c] : b.terms_) r.insert(k, -c);
    return r;
}

AiryLinear AiryLinear::scaled(const BiPoly& p) const {
    AiryLinear r;
    for (const auto& [k, c] : terms_) r.insert(k, c * p);
    return r;
}

AiryLinear airy_reduce(const AiryLinear& e) {
    AiryLinear cur = e;
    while (true) {
        // highest derivative order present
        int kmax = 0;
        for (const auto& [key, c] : cur.terms()) kmax = std::max(kmax, key.first);
        if (kmax <= 1) return cur;
        AiryLinear next;
        for (const auto& [key, c] : cur.terms()) {
            auto [k, a] = key;
            if (k < 2) {
                next.add(k, a, c);
            } else {
                next.add(k - 2, a, c.mul_s_power(1));
                if (k >= 3) next.add(k - 3, a, c * Rational(k - 2));
            }
        }
        cur = next;
    }
}

std::map<int, BiPoly> airy_raise(const AiryLinear& e) {
    for (const auto& [key, c] : e.terms())
        if (key.second != 0) throw Error(Errc::invalid, "airy_raise: AI factor not allowed");
    AiryLinear cur = e;
    while (true) {
        bool has_s = false;
        for (const auto& [key, c] : cur.terms())
            if (c.max_deg_s() > 0) has_s = true;
        if (!has_s) break;
        AiryLinear next;
        for (const auto& [key, c] : cur.terms()) {
            auto [k, a] = key;
            if (a != 0) throw Error(Errc::invalid, "airy_raise: AI factor not allowed");
            for (const auto& [deg, coef] : c.terms()) {
                auto [ds, dt] = deg;
                if (ds == 0) {
                    BiPoly keep;
                    keep.add_term(0, dt, coef);
                    next.add(k, 0, keep);
                } else {
                    // peel one power of s:  s^ds Ai^{(k)} = s^{ds-1}(Ai^{(k+2)} - k Ai^{(k-1)})
                    BiPoly rest;
                    rest.add_term(ds - 1, dt, coef);
                    next.add(k + 2, 0, rest);
                    if (k >= 1) next.add(k - 1, 0, rest * Rational(-k));
                }
            }
        }
        cur = next;
    }
    std::map<int, BiPoly> out;
    for (const auto& [key, c] : cur.terms()) out[key.first] = c;
    return out;
}

std::pair<BiPoly, BiPoly> integrate_wave_term(const BiPoly& p, const BiPoly& q) {
    AiryLinear e;
    e.add(0, 0, p);
    e.add(1, 0, q);
    auto raised = airy_raise(e);
    auto it = raised.find(0);
    if (it != raised.end() && !it->second.is_zero())
        throw Error(Errc::inconsistent_system,
                    "integrate_wave_term: non-integrable term (bare Ai residual " +
                        it->second.to_string() + ")");
    AiryLinear integral;
    for (const auto& [k, c] : raised)
        if (k >= 1) integral.add(k - 1, 0, c);
    AiryLinear low = airy_reduce(integral);
    for (const auto& [key, c] : low.terms())
        if (key.second != 0) throw Error(Errc::internal, "integrate_wave_term: AI leaked");
    return {low.coeff(0, 0), low.coeff(1, 0)};
}

AiryQuad AiryQuad::diff() const {
    AiryQuad d;
    d.ai2 = ai2.diff_s() + ai_aip.mul_s_power(1) + ai_int;
    d.aip2 = aip2.diff_s() + ai_aip;
    d.ai_aip = ai_aip.diff_s() + ai2 * Rational(2) + aip2.mul_s_power(1) * Rational(2) + aip_int;
    d.ai_int = ai_int.diff_s() + aip_int.mul_s_power(1);
    d.aip_int = aip_int.diff_s() + ai_int;
    return d;
}

AiryQuad AiryQuad::scaled(const BiPoly& p) const {
    return {ai2 * p, aip2 * p, ai_aip * p, ai_int * p, aip_int * p};
}

AiryQuad operator+(const AiryQuad& a, const AiryQuad& b) {
    return {a.ai2 + b.ai2, a.aip2 + b.aip2, a.ai_aip + b.ai_aip, a.ai_int + b.ai_int,
            a.aip_int + b.aip_int};
}

AiryQuad operator-(const AiryQuad& a, const AiryQuad& b) {
    return {a.ai2 - b.ai2, a.aip2 - b.aip2, a.ai_aip - b.ai_aip, a.ai_int - b.ai_int,
            a.aip_int - b.aip_int};
}

bool AiryQuad::is_zero() const {
    return ai2.is_zero() && aip2.is_zero() && ai_aip.is_zero() && ai_int.is_zero() &&
           aip_int.is_zero();
}

AiryQuad AiryQuad::at_tau_zero() const {
    return {ai2.at_tau_zero(), aip2.at_tau_zero(), ai_aip.at_tau_zero(), ai_int.at_tau_zero(),
            aip_int.at_tau_zero()};
}

}  // namespace softedge
