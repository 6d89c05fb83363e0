#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace softedge {

// Sign-magnitude arbitrary-precision integer, base 2^32 limbs (little-endian).
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b);  // truncated toward zero
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    // q = a/b truncated toward zero, r = a - q*b (r has the sign of a)
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    static BigInt gcd(BigInt a, BigInt b);  // nonnegative
    static BigInt pow(const BigInt& base, unsigned e);
    static BigInt pow10(unsigned e);

    // floor(sqrt(n)) and floor(cbrt(n)) for n >= 0, by integer Newton iteration
    static BigInt isqrt(const BigInt& n);
    static BigInt icbrt(const BigInt& n);

    int compare(const BigInt& b) const;  // -1, 0, +1
    bool operator==(const BigInt& b) const { return compare(b) == 0; }
    bool operator!=(const BigInt& b) const { return compare(b) != 0; }
    bool operator<(const BigInt& b) const { return compare(b) < 0; }
    bool operator<=(const BigInt& b) const { return compare(b) <= 0; }
    bool operator>(const BigInt& b) const { return compare(b) > 0; }
    bool operator>=(const BigInt& b) const { return compare(b) >= 0; }

    size_t bit_length() const;
    double to_double() const;
    // value ~= mant * 2^exp2 with |mant| in [0.5, 1); mant carries the top ~96 bits
    double mantissa_exp(long long& exp2) const;
    std::string to_string() const;

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;  // no leading (high) zero limbs

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace softedge
