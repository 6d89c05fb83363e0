#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "core/rational.hpp"

namespace softedge {

// Sparse exact polynomial in Q[s, tau]. No zero coefficients are stored, so
// structural equality is mathematical equality.
class BiPoly {
public:
    struct Term {
        long long num;
        long long den;
        int deg_s;
        int deg_tau;
    };

    BiPoly() = default;
    BiPoly(std::initializer_list<Term> terms);
    static BiPoly constant(const Rational& c);

    void add_term(int deg_s, int deg_tau, const Rational& c);
    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly operator-() const;
    BiPoly operator*(const Rational& c) const;
    bool operator==(const BiPoly& b) const { return terms_ == b.terms_; }
    bool operator!=(const BiPoly& b) const { return !(*this == b); }

    BiPoly diff_s() const;            // d/ds, tau held constant
    BiPoly at_tau_zero() const;       // specialize tau = 0
    BiPoly mul_s_power(int k) const;  // multiply by s^k

    int max_deg_s() const;
    int max_deg_tau() const;

    double eval(double s, double tau) const;

    // Canonical text: terms sorted by (deg_s, deg_tau) descending, coefficients
    // rendered as n or n/d, e.g. "-2/5*s^2*tau + 1/10*s". Zero renders as "0".
    std::string to_string() const;

private:
    std::map<std::pair<int, int>, Rational> terms_;
};

}  // namespace softedge
