#pragma once

// Arbitrary-precision signed integers and exact rationals.
// Magnitudes in this project stay small (a few hundred bits), so the
// implementation favors simplicity: schoolbook multiplication and
// shift-subtract division.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace cosgr {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v < 0) { sign_ = -1; }
        else if (v > 0) { sign_ = 1; }
        unsigned long long m = (v < 0) ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
        while (m) { mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu)); m >>= 32; }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) { r.mag_ = sub_mag(a.mag_, b.mag_); r.sign_ = a.sign_; }
            else       { r.mag_ = sub_mag(b.mag_, a.mag_); r.sign_ = b.sign_; }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.sign_ = a.sign_ * b.sign_;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = r.mag_[i + j] +
                    static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            std::size_t k = i + b.mag_.size();
            while (carry) {
                std::uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        return r;
    }

    // Truncated quotient and remainder (C semantics: remainder has the
    // dividend's sign).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (cmp_mag(a.mag_, b.mag_) < 0) { q = BigInt(); r = a; return; }
        std::vector<std::uint32_t> qm(a.mag_.size(), 0), rm;
        for (std::size_t i = a.mag_.size(); i-- > 0;) {
            for (int bit = 31; bit >= 0; --bit) {
                shl1(rm);
                if ((a.mag_[i] >> bit) & 1u) {
                    if (rm.empty()) rm.push_back(1);
                    else rm[0] |= 1u;
                }
                if (cmp_mag(rm, b.mag_) >= 0) {
                    rm = sub_mag(rm, b.mag_);
                    qm[i] |= (1u << bit);
                }
            }
        }
        q.mag_ = std::move(qm); q.trim();
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.mag_ = std::move(rm); r.trim();
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a < b || a == b; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return b <= a; }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs(); b = b.abs();
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int shift = 0;
        while (a.even() && b.even()) { a.shr1(); b.shr1(); ++shift; }
        while (a.even()) a.shr1();
        while (!b.is_zero()) {
            while (b.even()) b.shr1();
            if (cmp_mag(a.mag_, b.mag_) > 0) std::swap(a, b);
            b = b - a;
            b.sign_ = b.mag_.empty() ? 0 : 1;
        }
        for (int i = 0; i < shift; ++i) a.shl1_self();
        return a;
    }

    double to_double() const {
        double v = 0;
        for (std::size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
        return sign_ < 0 ? -v : v;
    }

    long long to_ll() const {
        // callers must know the value fits
        unsigned long long v = 0;
        if (mag_.size() > 2) throw std::overflow_error("BigInt: does not fit in long long");
        for (std::size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
        if (sign_ >= 0) {
            if (v > 0x7fffffffffffffffull) throw std::overflow_error("BigInt: does not fit in long long");
            return static_cast<long long>(v);
        }
        if (v > 0x8000000000000000ull) throw std::overflow_error("BigInt: does not fit in long long");
        return -static_cast<long long>(v - 1) - 1;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            for (int k = 0; k < 9; ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        std::reverse(digits.begin(), digits.end());
        return sign_ < 0 ? "-" + digits : digits;
    }

    static BigInt from_string(const std::string& s) {
        BigInt r;
        std::size_t i = 0;
        int sg = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sg = -1;
            ++i;
        }
        if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r = r * BigInt(10) + BigInt(s[i] - '0');
        }
        if (!r.is_zero()) r.sign_ = sg * r.sign_;
        return r;
    }

private:
    int sign_ = 0;                    // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // little-endian, no leading zeros

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }
    bool even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }
    void shr1() {
        std::uint32_t carry = 0;
        for (std::size_t i = mag_.size(); i-- > 0;) {
            std::uint32_t cur = mag_[i];
            mag_[i] = (cur >> 1) | (carry << 31);
            carry = cur & 1u;
        }
        trim();
    }
    void shl1_self() { shl1(mag_); }

    static void shl1(std::vector<std::uint32_t>& m) {
        std::uint32_t carry = 0;
        for (auto& limb : m) {
            std::uint32_t nc = limb >> 31;
            limb = (limb << 1) | carry;
            carry = nc;
        }
        if (carry) m.push_back(carry);
    }
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) { cur += (1ll << 32); borrow = 1; }
            else borrow = 0;
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

// Exact rational number, always stored normalized: gcd(num, den) = 1, den > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(long long p, long long q) : num_(p), den_(q) { normalize(); }
    Rational(BigInt p, BigInt q) : num_(std::move(p)), den_(std::move(q)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

    // true when 2*this is an integer
    bool is_half_integer() const {
        return den_ == BigInt(1) || den_ == BigInt(2);
    }

    friend Rational operator-(const Rational& a) { return Rational::raw(-a.num_, a.den_); }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational pow(int e) const {
        if (e < 0) return (Rational(1) / *this).pow(-e);
        Rational r(1), base = *this;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    BigInt floor() const {
        BigInt q, r;
        BigInt::divmod(num_, den_, q, r);
        if (r.sign() < 0) q = q - BigInt(1);
        return q;
    }
    BigInt ceil() const { return -((-*this).floor()); }

    double to_double() const { return num_.to_double() / den_.to_double(); }

    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    // accepts "p" or "p/q"
    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt::from_string(s), BigInt(1));
        return Rational(BigInt::from_string(s.substr(0, slash)),
                        BigInt::from_string(s.substr(slash + 1)));
    }

private:
    BigInt num_, den_;

    static Rational raw(BigInt p, BigInt q) {
        Rational r;
        r.num_ = std::move(p);
        r.den_ = std::move(q);
        return r;
    }
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) { den_ = BigInt(1); return; }
        if (den_.sign() < 0) { num_ = -num_; den_ = -den_; }
        BigInt g = BigInt::gcd(num_, den_);
        if (!(g == BigInt(1))) { num_ = num_ / g; den_ = den_ / g; }
    }
};

inline Rational rat(long long p, long long q = 1) { return Rational(p, q); }

// rising factorial (v)(v+1)...(v+k-1)
inline Rational pochhammer(const Rational& v, int k) {
    Rational r(1);
    for (int t = 0; t < k; ++t) r *= v + Rational(t);
    return r;
}

inline Rational factorial(int n) {
    Rational r(1);
    for (int k = 2; k <= n; ++k) r *= Rational(k);
    return r;
}

inline Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (int t = 1; t <= k; ++t) r *= Rational(n - k + t, t);
    return r;
}

}  // namespace cosgr
