#include "support/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

using softedge::BigInt;
using softedge::Rational;

namespace {

constexpr unsigned kDigits = 50;  // fixed-point scale 10^50 for the constants

const BigInt& scale() {
    static const BigInt s = BigInt::pow10(kDigits);
    return s;
}

// arctan(1/m) * 10^kDigits by the alternating series, floor per term
BigInt atan_inv_fixed(long long m) {
    BigInt acc(0);
    BigInt mpow(m);
    BigInt m2((long long)m * m);
    for (int k = 0;; ++k) {
        BigInt term = scale() / (mpow * BigInt(2 * k + 1));
        if (term.is_zero()) break;
        acc = (k % 2 == 0) ? acc + term : acc - term;
        mpow = mpow * m2;
    }
    return acc;
}

BigInt pi_fixed() {
    return BigInt(16) * atan_inv_fixed(5) - BigInt(4) * atan_inv_fixed(239);
}

// Gamma(1/3) * 10^kDigits via 3 * int_0^R e^{-u^3} du at R = 5 (tail < e^-125):
// 3 * sum_k (-1)^k 5^{3k+1} / (k! (3k+1))
BigInt gamma_third_fixed() {
    BigInt acc(0);
    BigInt fact(1);       // k!
    BigInt pow5(5);       // 5^{3k+1}
    const BigInt p125(125);
    for (int k = 0;; ++k) {
        if (k > 0) {
            fact = fact * BigInt(k);
            pow5 = pow5 * p125;
        }
        BigInt term = (scale() * pow5) / (fact * BigInt(3 * k + 1));
        if (term.is_zero() && k > 130) break;
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return BigInt(3) * acc;
}

struct Consts {
    Rational pi, sqrt3, cbrt3, gamma13, gamma23, c1, c2;
    Consts() {
        pi = Rational(pi_fixed(), scale());
        sqrt3 = Rational(BigInt::isqrt(BigInt(3) * BigInt::pow10(2 * kDigits)), scale());
        cbrt3 = Rational(BigInt::icbrt(BigInt(3) * BigInt::pow10(3 * kDigits)), scale());
        gamma13 = Rational(gamma_third_fixed(), scale());
        gamma23 = Rational(2) * pi / (sqrt3 * gamma13);
        // Ai(0) = 3^{-2/3}/Gamma(2/3) = 3^{1/3}/(3 Gamma(2/3)),
        // -Ai'(0) = 3^{-1/3}/Gamma(1/3) = 3^{2/3}/(3 Gamma(1/3))
        c1 = cbrt3 / (Rational(3) * gamma23);
        c2 = cbrt3 * cbrt3 / (Rational(3) * gamma13);
    }
};

const Consts& consts() {
    static const Consts c;
    return c;
}

enum class Part { value, derivative, antiderivative };

// The Maclaurin series in fixed-point BigInt arithmetic with 2^kBits fractional
// bits. Operand sizes stay bounded (a few hundred bits), unlike fully reduced
// rationals whose denominators grow with every term. Each floor division loses
// at most one unit in the last place, amplified by at most the largest
// intermediate magnitude (~2^40), leaving the total error below 2^-200.
constexpr int kBits = 256;

const BigInt& fix_one() {
    static const BigInt v = BigInt::pow(BigInt(2), kBits);
    return v;
}

BigInt to_fixed(const Rational& r) { return r.num() * fix_one() / r.den(); }

Rational series(const Rational& x, Part part) {
    const BigInt a3 = x.num() * x.num() * x.num();
    const BigInt b3 = x.den() * x.den() * x.den();
    const BigInt fx = to_fixed(x);
    const BigInt fx2h = x.num() * x.num() * fix_one() / (x.den() * x.den() * BigInt(2));
    BigInt tf, tg;
    switch (part) {
        case Part::value:
            tf = fix_one();
            tg = fx;
            break;
        case Part::derivative:
            tf = fx2h;
            tg = fix_one();
            break;
        case Part::antiderivative:
            tf = fx;
            tg = fx2h;
            break;
    }
    BigInt sf = tf, sg = tg;
    const double x3mag = std::fabs(x.to_double());
    const double peak = 2.0 * x3mag * x3mag * x3mag;  // past here term ratios are < 1/2
    const BigInt tiny = BigInt::pow(BigInt(2), kBits - 176);
    for (int k = 0; k < 2000; ++k) {
        long long k3 = 3ll * k;
        switch (part) {
            case Part::value:
                tf = tf * a3 / (b3 * BigInt((k3 + 2) * (k3 + 3)));
                tg = tg * a3 / (b3 * BigInt((k3 + 3) * (k3 + 4)));
                break;
            case Part::derivative:
                tf = tf * a3 * BigInt(k + 2) / (b3 * BigInt((k + 1) * (k3 + 5) * (k3 + 6)));
                tg = tg * a3 / (b3 * BigInt((k3 + 1) * (k3 + 3)));
                break;
            case Part::antiderivative:
                tf = tf * a3 * BigInt(k3 + 1) / (b3 * BigInt((k3 + 2) * (k3 + 3) * (k3 + 4)));
                tg = tg * a3 * BigInt(k3 + 2) / (b3 * BigInt((k3 + 3) * (k3 + 4) * (k3 + 5)));
                break;
        }
        sf = sf + tf;
        sg = sg + tg;
        if ((double)(k3 + 2) * (k3 + 3) > peak && tf.abs() < tiny && tg.abs() < tiny) break;
    }
    static const BigInt c1f = to_fixed(consts().c1);
    static const BigInt c2f = to_fixed(consts().c2);
    BigInt num = c1f * sf - c2f * sg;  // scale 2^(2 kBits)
    BigInt den = fix_one() * fix_one();
    if (part == Part::antiderivative) num = num - den / BigInt(3);
    return Rational(num, den);
}

}  // namespace

Rational ai(const Rational& x) { return series(x, Part::value); }
Rational ai_prime(const Rational& x) { return series(x, Part::derivative); }
Rational ai_int0(const Rational& x) { return series(x, Part::antiderivative); }

Rational from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("oracle::from_double: non-finite");
    if (x == 0.0) return Rational(0);
    int e = 0;
    double m = std::frexp(x, &e);  // x = m * 2^e, |m| in [0.5, 1)
    long long mi = (long long)std::ldexp(m, 53);
    int shift = e - 53;
    Rational r(mi);
    if (shift > 0) return Rational(BigInt(mi) * BigInt::pow(BigInt(2), shift), BigInt(1));
    return Rational(BigInt(mi), BigInt::pow(BigInt(2), -shift));
}

const Rational& const_pi() { return consts().pi; }
const Rational& const_gamma_third() { return consts().gamma13; }
const Rational& const_ai_zero() { return consts().c1; }
const Rational& const_ai_prime_zero() {
    static const Rational v = -consts().c2;
    return v;
}

}  // namespace oracle
