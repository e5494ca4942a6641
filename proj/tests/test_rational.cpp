#include <doctest.h>

#include <cosgr/rational.hpp>

#include <random>

using namespace cosgr;

namespace {

BigInt from128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt r(0);
    BigInt base(1);
    while (m) {
        r = r + BigInt(static_cast<long long>(m & 0xffffffffull)) * base;
        base = base * BigInt(0x100000000ll);
        m >>= 32;
    }
    return neg ? -r : r;
}

std::string to_string128(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (m) {
        s.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
        m /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace

TEST_CASE("bigint small arithmetic") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK((BigInt(2) + BigInt(-5)).to_string() == "-3");
    CHECK((BigInt(1000000007) * BigInt(998244353)).to_string() == "998244359987710471");
    CHECK((BigInt(-17) / BigInt(5)).to_string() == "-3");
    CHECK((BigInt(-17) % BigInt(5)).to_string() == "-2");
    CHECK(BigInt::gcd(BigInt(48), BigInt(-36)).to_string() == "12");
    CHECK(BigInt::from_string("-123456789012345678901234567890").to_string() ==
          "-123456789012345678901234567890");
}

TEST_CASE("bigint arithmetic agrees with __int128 oracle") {
    std::mt19937_64 gen(20240817);
    auto draw = [&]() -> long long {
        // mixed magnitudes, including small values
        int shift = static_cast<int>(gen() % 62);
        long long v = static_cast<long long>(gen() >> shift);
        return (gen() & 1) ? -v : v;
    };
    for (int iter = 0; iter < 3000; ++iter) {
        long long a = draw(), b = draw();
        __int128 A = a, B = b;
        CHECK((BigInt(a) + BigInt(b)) == from128(A + B));
        CHECK((BigInt(a) - BigInt(b)) == from128(A - B));
        CHECK((BigInt(a) * BigInt(b)) == from128(A * B));
        CHECK((BigInt(a) * BigInt(b)).to_string() == to_string128(A * B));
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(BigInt(a), BigInt(b), q, r);
            CHECK(q == from128(A / B));
            CHECK(r == from128(A % B));
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("bigint multiword division round-trips") {
    std::mt19937_64 gen(7);
    for (int iter = 0; iter < 500; ++iter) {
        __int128 a = (static_cast<__int128>(gen()) << 40) ^ gen();
        __int128 b = (static_cast<__int128>(gen() % 1000000) + 1);
        if (gen() & 1) a = -a;
        if (gen() & 1) b = -b;
        BigInt A = from128(a), B = from128(b);
        BigInt q, r;
        BigInt::divmod(A, B, q, r);
        CHECK(q * B + r == A);
        CHECK(r.abs() < B.abs());
        // remainder carries the dividend's sign
        if (!r.is_zero()) CHECK(r.sign() == A.sign());
    }
}

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
    CHECK((Rational(3, 4) * Rational(2, 9)) == Rational(1, 6));
    CHECK((Rational(3, 4) / Rational(9, 2)) == Rational(1, 6));
    CHECK(Rational(7, 2).to_string() == "7/2");
    CHECK(Rational::from_string("-35/10") == Rational(-7, 2));
    CHECK(Rational::from_string("42") == Rational(42));
    CHECK(Rational(-7, 2) < Rational(-3, 1));
    CHECK(Rational(5, 3).floor().to_ll() == 1);
    CHECK(Rational(-5, 3).floor().to_ll() == -2);
    CHECK(Rational(-5, 3).ceil().to_ll() == -1);
    CHECK(Rational(-4, 2).is_integer());
    CHECK(Rational(-3, 2).is_half_integer());
    CHECK(!Rational(1, 3).is_half_integer());
    CHECK(Rational(1, 3).pow(-2) == Rational(9));
    CHECK(Rational(-1, 2).to_double() == doctest::Approx(-0.5));
}

TEST_CASE("rational field laws on random samples") {
    std::mt19937_64 gen(99);
    auto draw = [&]() {
        long long p = static_cast<long long>(gen() % 2001) - 1000;
        long long q = static_cast<long long>(gen() % 1000) + 1;
        return Rational(p, q);
    };
    for (int iter = 0; iter < 1500; ++iter) {
        Rational a = draw(), b = draw(), c = draw();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + (b + c) == (a + b) + c);
        CHECK(a * (b * c) == (a * b) * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("large magnitude round trips") {
    // 40! has 48 digits; exact division recovers the factors
    BigInt f(1);
    for (int k = 2; k <= 40; ++k) f = f * BigInt(k);
    CHECK(f.to_string() == "815915283247897734345611269596115894272000000000");
    BigInt q = f;
    for (int k = 40; k >= 2; --k) {
        BigInt rem;
        BigInt quo;
        BigInt::divmod(q, BigInt(k), quo, rem);
        CHECK(rem.is_zero());
        q = quo;
    }
    CHECK(q == BigInt(1));
    // rationals stay normalized through big cancellations
    Rational big(f, f * BigInt(7));
    CHECK(big == Rational(1, 7));
}

TEST_CASE("pochhammer and combinatorial helpers") {
    CHECK(pochhammer(Rational(1, 2), 0) == Rational(1));
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(1, 2) * Rational(3, 2) * Rational(5, 2));
    CHECK(factorial(6) == Rational(720));
    CHECK(binomial(8, 4) == Rational(70));
    CHECK(binomial(5, 7) == Rational(0));
}
