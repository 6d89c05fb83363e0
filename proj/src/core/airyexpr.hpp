#pragma once

#include <map>
#include <utility>
#include <vector>

#include "core/bipoly.hpp"

namespace softedge {

// Linear expressions sum c_{k,a}(s,tau) * Ai^{(k)} * AI^a  (a in {0,1}).
// Canonical form has derivative order k <= 1, enforced through the Airy
// equation Ai'' = s Ai.
class AiryLinear {
public:
    using Key = std::pair<int, int>;  // (derivative order k, AI factor 0/1)

    AiryLinear() = default;
    void add(int k, int ai_factor, const BiPoly& coeff);
    const std::map<Key, BiPoly>& terms() const { return terms_; }
    const BiPoly coeff(int k, int ai_factor) const;

    friend AiryLinear operator+(const AiryLinear& a, const AiryLinear& b);
    friend AiryLinear operator-(const AiryLinear& a, const AiryLinear& b);
    AiryLinear scaled(const BiPoly& p) const;
    bool operator==(const AiryLinear& b) const { return terms_ == b.terms_; }

private:
    std::map<Key, BiPoly> terms_;
    void insert(const Key& key, const BiPoly& coeff);
};

// Canonicalize: push every Ai^{(k)}, k >= 2, down to the {Ai, Ai'} basis via
// Ai^{(k)} = s Ai^{(k-2)} + (k-2) Ai^{(k-3)}.
AiryLinear airy_reduce(const AiryLinear& e);

// Inverse direction on a pure-Ai expression: absorb every power of s into
// higher derivatives via s^j Ai^{(k)} = s^{j-1} Ai^{(k+2)} - k s^{j-1} Ai^{(k-1)}.
// Returns the map k -> constant-in-s coefficient (still polynomial in tau).
std::map<int, BiPoly> airy_raise(const AiryLinear& e);

// Termwise antiderivative of p*Ai + q*Ai': raises to pure derivatives,
// integrates (Ai^{(k)} -> Ai^{(k-1)}), reduces back.  A correction term must
// have zero residual on the bare Ai slot (which would integrate to AI_0);
// a nonzero residual throws Errc::inconsistent_system.
std::pair<BiPoly, BiPoly> integrate_wave_term(const BiPoly& p, const BiPoly& q);

// Quadratic expressions in the 5-element basis
//   {Ai^2, Ai'^2, Ai Ai', Ai AI, Ai' AI}
// with BiPoly coefficients. AI^2 never arises in this calculus; the type cannot
// represent it, so unexpected algebra surfaces as a compile-time shape error.
struct AiryQuad {
    BiPoly ai2, aip2, ai_aip, ai_int, aip_int;

    AiryQuad diff() const;  // d/ds, using Ai'' = s Ai and AI' = Ai
    AiryQuad scaled(const BiPoly& p) const;
    friend AiryQuad operator+(const AiryQuad& a, const AiryQuad& b);
    friend AiryQuad operator-(const AiryQuad& a, const AiryQuad& b);
    bool operator==(const AiryQuad& b) const = default;
    bool is_zero() const;
    AiryQuad at_tau_zero() const;
};

}  // namespace softedge
