#pragma once

// Rational functions of one variable kept in fully factored form:
//     unit * prod_i (x - root_i)^mult_i
// with exact rational roots and integer multiplicities (negative = pole).
// Multiplication, division and argument shifts are closed and exact, and
// Laurent data at any exact point can be read off directly.

#include <map>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace cosgr {

class FactoredRational {
public:
    FactoredRational() : unit_(1) {}
    explicit FactoredRational(Rational constant) : unit_(std::move(constant)) {}

    static FactoredRational zero() { return FactoredRational(Rational(0)); }
    static FactoredRational one() { return FactoredRational(Rational(1)); }

    // (x - root)^mult
    static FactoredRational linear(const Rational& root, int mult = 1) {
        FactoredRational f;
        if (mult != 0) f.factors_[root] = mult;
        return f;
    }

    bool is_zero() const { return unit_.is_zero(); }
    const Rational& unit() const { return unit_; }
    const std::map<Rational, int>& factors() const { return factors_; }

    // multiplicity of (x - p); positive = zero, negative = pole, 0 = neither
    int multiplicity_at(const Rational& p) const {
        auto it = factors_.find(p);
        return it == factors_.end() ? 0 : it->second;
    }

    friend FactoredRational operator*(const FactoredRational& a, const FactoredRational& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        FactoredRational r;
        r.unit_ = a.unit_ * b.unit_;
        r.factors_ = a.factors_;
        for (const auto& [root, mult] : b.factors_) {
            int m = (r.factors_[root] += mult);
            if (m == 0) r.factors_.erase(root);
        }
        return r;
    }

    friend FactoredRational operator/(const FactoredRational& a, const FactoredRational& b) {
        if (b.is_zero()) throw std::domain_error("FactoredRational: division by zero function");
        return a * b.inverse();
    }

    FactoredRational inverse() const {
        if (is_zero()) throw std::domain_error("FactoredRational: inverse of zero");
        FactoredRational r;
        r.unit_ = Rational(1) / unit_;
        for (const auto& [root, mult] : factors_) r.factors_[root] = -mult;
        return r;
    }

    FactoredRational& operator*=(const FactoredRational& b) { *this = *this * b; return *this; }

    // f(x) -> f(x + delta); roots move by -delta
    FactoredRational shifted(const Rational& delta) const {
        if (is_zero()) return zero();
        FactoredRational r;
        r.unit_ = unit_;
        for (const auto& [root, mult] : factors_) r.factors_[root - delta] = mult;
        return r;
    }

    friend bool operator==(const FactoredRational& a, const FactoredRational& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.unit_ == b.unit_ && a.factors_ == b.factors_;
    }
    friend bool operator!=(const FactoredRational& a, const FactoredRational& b) { return !(a == b); }

    // exact value; p must not be a root or pole
    Rational evaluate(const Rational& p) const {
        if (is_zero()) return Rational(0);
        Rational v = unit_;
        for (const auto& [root, mult] : factors_) {
            if (root == p) {
                if (mult > 0) return Rational(0);
                throw std::domain_error("FactoredRational: evaluation at a pole");
            }
            v *= (p - root).pow(mult);
        }
        return v;
    }

    // order of vanishing at p (negative for a pole); zero function has no order
    int order_at(const Rational& p) const {
        if (is_zero()) throw std::domain_error("FactoredRational: order of the zero function");
        return multiplicity_at(p);
    }

    // leading Laurent coefficient at p: lim (x-p)^{-order} f(x)
    Rational laurent_leading(const Rational& p) const {
        if (is_zero()) return Rational(0);
        Rational v = unit_;
        for (const auto& [root, mult] : factors_) {
            if (root == p) continue;
            v *= (p - root).pow(mult);
        }
        return v;
    }

    std::string to_string(const std::string& var = "v") const {
        if (is_zero()) return "0";
        std::string s = unit_.to_string();
        for (const auto& [root, mult] : factors_) {
            std::string f = "(" + var;
            if (root.sign() > 0) f += "-" + root.to_string();
            else if (root.sign() < 0) f += "+" + (-root).to_string();
            f += ")";
            if (mult != 1) f += "^" + std::to_string(mult);
            s += "*" + f;
        }
        return s;
    }

private:
    Rational unit_;                    // zero only for the zero function
    std::map<Rational, int> factors_;  // root -> nonzero multiplicity
};

}  // namespace cosgr
