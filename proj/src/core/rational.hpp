#pragma once

#include <string>

#include "core/bigint.hpp"

namespace softedge {

// Exact rational with arbitrary-precision integer parts.
// Canonical form: gcd(num, den) = 1, den > 0, zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);
    Rational(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    bool operator==(const Rational& b) const { return num_ == b.num_ && den_ == b.den_; }
    bool operator!=(const Rational& b) const { return !(*this == b); }
    bool operator<(const Rational& b) const;

    Rational abs() const;
    static Rational pow(const Rational& base, unsigned e);

    double to_double() const;
    // "n" when den = 1, otherwise "n/d"
    std::string to_string() const;

private:
    BigInt num_, den_;
    void normalize();
};

}  // namespace softedge
