#include <doctest.h>

#include <random>

#include "core/bigint.hpp"
#include "core/rational.hpp"

using softedge::BigInt;
using softedge::Rational;

namespace {
__int128 to_i128(long long v) { return (__int128)v; }

BigInt big_from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 m = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    BigInt lo((long long)(m & 0x7fffffffffffffffull));
    BigInt hi((long long)(m >> 63));
    BigInt r = hi * BigInt::pow(BigInt(2), 63) + lo;
    return neg ? -r : r;
}
}  // namespace

TEST_CASE("bigint arithmetic agrees with int128 on random operands") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 3000; ++iter) {
        long long a = (long long)rng() >> (rng() % 40);
        long long b = (long long)rng() >> (rng() % 40);
        CHECK(BigInt(a) + BigInt(b) == big_from_i128(to_i128(a) + b));
        CHECK(BigInt(a) - BigInt(b) == big_from_i128(to_i128(a) - b));
        CHECK(BigInt(a) * BigInt(b) == big_from_i128(to_i128(a) * b));
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(BigInt(a), BigInt(b), q, r);
            CHECK(q == big_from_i128(to_i128(a) / b));
            CHECK(r == big_from_i128(to_i128(a) % b));
        }
    }
}

TEST_CASE("bigint divmod reconstructs the dividend on wide operands") {
    std::mt19937_64 rng(999);
    for (int iter = 0; iter < 400; ++iter) {
        BigInt a(1), b(1);
        int la = 1 + (int)(rng() % 6), lb = 1 + (int)(rng() % 4);
        for (int i = 0; i < la; ++i) a = a * BigInt((long long)(rng() | 1));
        for (int i = 0; i < lb; ++i) b = b * BigInt((long long)(rng() | 1));
        if (rng() & 1) a = -a;
        if (rng() & 1) b = -b;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("bigint gcd, powers, roots and strings") {
    CHECK(BigInt::gcd(BigInt(12 * 35), BigInt(18 * 35)) == BigInt(6 * 35));
    CHECK(BigInt::pow(BigInt(2), 128).to_string() ==
          "340282366920938463463374607431768211456");

    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 60; ++iter) {
        BigInt n = BigInt((long long)(rng() >> 8)) * BigInt((long long)(rng() >> 8));
        BigInt s = BigInt::isqrt(n);
        CHECK(s * s <= n);
        CHECK((s + BigInt(1)) * (s + BigInt(1)) > n);
        BigInt c = BigInt::icbrt(n);
        CHECK(c * c * c <= n);
        CHECK((c + BigInt(1)) * (c + BigInt(1)) * (c + BigInt(1)) > n);
    }
}

TEST_CASE("rational canonical form and field identities") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).den() == BigInt(1));

    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 500; ++iter) {
        auto rnd = [&] {
            return Rational((long long)(rng() % 20001) - 10000, (long long)(rng() % 999) + 1);
        };
        Rational a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) - b == a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(Rational(-7, 2).to_string() == "-7/2");
    CHECK(Rational(5).to_string() == "5");
}
