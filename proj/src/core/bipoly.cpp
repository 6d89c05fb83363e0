#include "core/bipoly.hpp"

#include <cmath>

namespace softedge {

BiPoly::BiPoly(std::initializer_list<Term> terms) {
    for (const auto& t : terms) add_term(t.deg_s, t.deg_tau, Rational(t.num, t.den));
}

BiPoly BiPoly::constant(const Rational& c) {
    BiPoly p;
    p.add_term(0, 0, c);
    return p;
}

void BiPoly::add_term(int deg_s, int deg_tau, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(deg_s, deg_tau);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

BiPoly BiPoly::operator*(const Rational& c) const {
    BiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

BiPoly BiPoly::diff_s() const {
    BiPoly r;
    for (const auto& [k, c] : terms_)
        if (k.first > 0) r.add_term(k.first - 1, k.second, c * Rational(k.first));
    return r;
}

BiPoly BiPoly::at_tau_zero() const {
    BiPoly r;
    for (const auto& [k, c] : terms_)
        if (k.second == 0) r.terms_.emplace(k, c);
    return r;
}

BiPoly BiPoly::mul_s_power(int k) const {
    BiPoly r;
    for (const auto& [key, c] : terms_) r.terms_.emplace(std::make_pair(key.first + k, key.second), c);
    return r;
}

int BiPoly::max_deg_s() const {
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, k.first);
    return m;
}

int BiPoly::max_deg_tau() const {
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, k.second);
    return m;
}

double BiPoly::eval(double s, double tau) const {
    double r = 0.0;
    for (const auto& [k, c] : terms_)
        r += c.to_double() * std::pow(s, k.first) * std::pow(tau, k.second);
    return r;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // map iterates ascending (deg_s, deg_tau); canonical order is descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        bool neg = c.sign() < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        out += c.abs().to_string();
        if (k.first > 0) {
            out += "*s";
            if (k.first > 1) out += "^" + std::to_string(k.first);
        }
        if (k.second > 0) {
            out += "*tau";
            if (k.second > 1) out += "^" + std::to_string(k.second);
        }
    }
    return out;
}

}  // namespace softedge
