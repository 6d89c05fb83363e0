#include "core/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace softedge {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long m = v > 0 ? (unsigned long long)v : 0ull - (unsigned long long)v;
    while (m) {
        mag_.push_back((uint32_t)(m & 0xffffffffu));
        m >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    const auto& hi = a.size() >= b.size() ? a : b;
    const auto& lo = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(hi.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        r[i] = (uint32_t)s;
        carry = s >> 32;
    }
    r[hi.size()] = (uint32_t)carry;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = (int64_t)a[i] - borrow - (i < b.size() ? (int64_t)b[i] : 0);
        if (d < 0) {
            d += (int64_t)kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = (uint32_t)d;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = r[i + j] + ai * b[j] + carry;
            r[i + j] = (uint32_t)cur;
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = r[k] + carry;
            r[k] = (uint32_t)cur;
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth algorithm D with 32-bit limbs.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) {
        q.clear();
        r = a;
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0], rem = 0;
        q.assign(a.size(), 0);
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = (uint32_t)(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        r.clear();
        if (rem) r.push_back((uint32_t)rem);
        return;
    }

    // Normalize so the divisor's top limb has its high bit set.
    int shift = 0;
    for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    size_t n = b.size(), m = a.size() - n;
    std::vector<uint32_t> u(a.size() + 1, 0), v(n, 0);
    for (size_t i = a.size(); i-- > 0;) {
        u[i] = a[i] << shift;
        if (shift && i > 0) u[i] |= (uint32_t)((uint64_t)a[i - 1] >> (32 - shift));
    }
    if (shift) u[a.size()] = (uint32_t)((uint64_t)a.back() >> (32 - shift));
    for (size_t i = n; i-- > 0;) {
        v[i] = b[i] << shift;
        if (shift && i > 0) v[i] |= (uint32_t)((uint64_t)b[i - 1] >> (32 - shift));
    }

    q.assign(m + 1, 0);
    uint64_t vtop = v[n - 1], vnext = v[n - 2];
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = ((uint64_t)u[j + n] << 32) | u[j + n - 1];
        uint64_t qhat = num / vtop, rhat = num % vtop;
        while (qhat >= kBase || qhat * vnext > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat >= kBase) break;
        }
        // u[j..j+n] -= qhat * v
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t t = (int64_t)u[i + j] - (int64_t)(uint32_t)p - borrow;
            if (t < 0) {
                t += (int64_t)kBase;
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = (uint32_t)t;
        }
        int64_t t = (int64_t)u[j + n] - (int64_t)carry - borrow;
        if (t < 0) {
            // qhat was one too large: add back
            t += (int64_t)kBase;
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = (uint64_t)u[i + j] + v[i] + c2;
                u[i + j] = (uint32_t)s;
                c2 = s >> 32;
            }
            t += (int64_t)c2;
        }
        u[j + n] = (uint32_t)t;
        q[j] = (uint32_t)qhat;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();

    r.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        r[i] = u[i] >> shift;
        if (shift && i + 1 < u.size()) r[i] |= (uint32_t)((uint64_t)u[i + 1] << (32 - shift));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int c = BigInt::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = a.sign_;
            r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
        } else {
            r.sign_ = b.sign_;
            r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
        }
    }
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q.mag_ = std::move(qm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.mag_ = std::move(rm);
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::pow(const BigInt& base, unsigned e) {
    BigInt r(1), b = base;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

BigInt BigInt::pow10(unsigned e) { return pow(BigInt(10), e); }

size_t BigInt::bit_length() const {
    if (mag_.empty()) return 0;
    uint32_t top = mag_.back();
    size_t bits = 0;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits + 32 * (mag_.size() - 1);
}

BigInt BigInt::isqrt(const BigInt& n) {
    if (n.sign_ < 0) throw std::domain_error("isqrt of negative");
    if (n.is_zero()) return BigInt();
    BigInt x(1);
    // start from a power of two above sqrt(n)
    size_t b = (n.bit_length() + 1) / 2 + 1;
    for (size_t i = 0; i < b; ++i) x = x + x;
    while (true) {
        BigInt y = (x + n / x) / BigInt(2);
        if (y >= x) break;
        x = y;
    }
    return x;
}

BigInt BigInt::icbrt(const BigInt& n) {
    if (n.sign_ < 0) throw std::domain_error("icbrt of negative");
    if (n.is_zero()) return BigInt();
    BigInt x(1);
    size_t b = n.bit_length() / 3 + 2;
    for (size_t i = 0; i < b; ++i) x = x + x;
    while (true) {
        BigInt y = (BigInt(2) * x + n / (x * x)) / BigInt(3);
        if (y >= x) break;
        x = y;
    }
    return x;
}

int BigInt::compare(const BigInt& b) const {
    if (sign_ != b.sign_) return sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(mag_, b.mag_);
    return sign_ >= 0 ? c : -c;
}

double BigInt::mantissa_exp(long long& exp2) const {
    if (mag_.empty()) {
        exp2 = 0;
        return 0.0;
    }
    double r = 0.0;
    size_t n = mag_.size();
    size_t take = std::min<size_t>(n, 3);
    for (size_t i = 0; i < take; ++i) r = r * 4294967296.0 + (double)mag_[n - 1 - i];
    int e = 0;
    r = std::frexp(r, &e);
    exp2 = (long long)e + 32ll * (long long)(n - take);
    return sign_ < 0 ? -r : r;
}

double BigInt::to_double() const {
    long long e = 0;
    double m = mantissa_exp(e);
    if (e > 3000) return sign_ < 0 ? -HUGE_VAL : (sign_ > 0 ? HUGE_VAL : 0.0);
    return std::ldexp(m, (int)e);
}

std::string BigInt::to_string() const {
    if (mag_.empty()) return "0";
    std::vector<uint32_t> cur = mag_;
    std::string digits;
    while (!cur.empty()) {
        uint64_t rem = 0;
        for (size_t i = cur.size(); i-- > 0;) {
            uint64_t v = (rem << 32) | cur[i];
            cur[i] = (uint32_t)(v / 1000000000u);
            rem = v % 1000000000u;
        }
        while (!cur.empty() && cur.back() == 0) cur.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(char('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::string out;
    if (sign_ < 0) out.push_back('-');
    out.append(digits.rbegin(), digits.rend());
    return out;
}

}  // namespace softedge
