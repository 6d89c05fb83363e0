#include "core/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace softedge {

Rational::Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

void Rational::normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

bool Rational::operator<(const Rational& b) const {
    return (num_ * b.den_).compare(b.num_ * den_) < 0;
}

Rational Rational::abs() const {
    Rational r = *this;
    r.num_ = r.num_.abs();
    return r;
}

Rational Rational::pow(const Rational& base, unsigned e) {
    return Rational(BigInt::pow(base.num_, e), BigInt::pow(base.den_, e));
}

double Rational::to_double() const {
    if (num_.is_zero()) return 0.0;
    long long en = 0, ed = 0;
    double mn = num_.mantissa_exp(en), md = den_.mantissa_exp(ed);
    long long e = en - ed;
    if (e > 2000) return num_.sign() < 0 ? -HUGE_VAL : HUGE_VAL;
    if (e < -2000) return num_.sign() < 0 ? -0.0 : 0.0;
    return std::ldexp(mn / md, (int)e);
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace softedge
