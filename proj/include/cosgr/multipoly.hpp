#pragma once

// Exact multivariate polynomials over Rational with a fixed number of
// variables.  Terms are kept in graded-lex order so printed/serialized
// forms are reproducible.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace cosgr {

struct GradedLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

class MultiPoly {
public:
    using TermMap = std::map<std::vector<int>, Rational, GradedLexLess>;

    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c) {
        MultiPoly p(nvars);
        if (!c.is_zero()) p.terms_[std::vector<int>(nvars, 0)] = c;
        return p;
    }
    static MultiPoly variable(int nvars, int index, int power = 1) {
        if (index < 0 || index >= nvars) throw std::invalid_argument("MultiPoly: variable index");
        MultiPoly p(nvars);
        std::vector<int> e(nvars, 0);
        e[index] = power;
        p.terms_[std::move(e)] = Rational(1);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (int x : e) t += x;
            if (t > d) d = t;
        }
        return d;
    }

    void add_term(const std::vector<int>& exps, const Rational& c) {
        if (static_cast<int>(exps.size()) != nvars_)
            throw std::invalid_argument("MultiPoly: exponent arity mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_[exps] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        check_arity(a, b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        check_arity(a, b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a) { return MultiPoly(a.nvars_) - a; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        check_arity(a, b);
        MultiPoly r(a.nvars_);
        std::vector<int> e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (int v = 0; v < a.nvars_; ++v) e[v] = ea[v] + eb[v];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    friend MultiPoly operator*(const Rational& s, const MultiPoly& a) {
        MultiPoly r(a.nvars_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = s * c;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& b) { *this = *this + b; return *this; }
    MultiPoly& operator-=(const MultiPoly& b) { *this = *this - b; return *this; }
    MultiPoly& operator*=(const MultiPoly& b) { *this = *this * b; return *this; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("MultiPoly: negative power");
        MultiPoly r = constant(nvars_, Rational(1));
        MultiPoly base = *this;
        while (e) {
            if (e & 1) r *= base;
            if (e >>= 1) base *= base;
        }
        return r;
    }

    Rational evaluate(const std::vector<Rational>& vals) const {
        if (static_cast<int>(vals.size()) != nvars_)
            throw std::invalid_argument("MultiPoly: evaluation arity mismatch");
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (int v = 0; v < nvars_; ++v)
                if (e[v]) t *= vals[v].pow(e[v]);
            acc += t;
        }
        return acc;
    }

    double evaluate_double(const std::vector<double>& vals) const {
        double acc = 0;
        for (const auto& [e, c] : terms_) {
            double t = c.to_double();
            for (int v = 0; v < nvars_; ++v)
                for (int k = 0; k < e[v]; ++k) t *= vals[v];
            acc += t;
        }
        return acc;
    }

    MultiPoly derivative(int var) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            std::vector<int> e2 = e;
            e2[var] -= 1;
            r.add_term(e2, c * Rational(e[var]));
        }
        return r;
    }

    // substitute exact values for a subset of variables (nullopt = keep)
    MultiPoly substitute(const std::vector<std::optional<Rational>>& vals) const {
        if (static_cast<int>(vals.size()) != nvars_)
            throw std::invalid_argument("MultiPoly: substitution arity mismatch");
        MultiPoly r(nvars_);
        std::vector<int> e2(nvars_);
        for (const auto& [e, c] : terms_) {
            Rational coef = c;
            for (int v = 0; v < nvars_; ++v) {
                if (vals[v]) {
                    coef *= vals[v]->pow(e[v]);
                    e2[v] = 0;
                } else {
                    e2[v] = e[v];
                }
            }
            r.add_term(e2, coef);
        }
        return r;
    }

    // relabel variables: new var index = offset + old index, in a wider ring
    MultiPoly embed(int new_nvars, int offset) const {
        if (offset < 0 || offset + nvars_ > new_nvars)
            throw std::invalid_argument("MultiPoly: embed out of range");
        MultiPoly r(new_nvars);
        for (const auto& [e, c] : terms_) {
            std::vector<int> e2(new_nvars, 0);
            for (int v = 0; v < nvars_; ++v) e2[offset + v] = e[v];
            r.terms_[std::move(e2)] = c;
        }
        return r;
    }

    // apply var -> sign[var] * x_{perm[var]}
    MultiPoly relabel_signed(const std::vector<int>& perm, const std::vector<int>& sign) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            std::vector<int> e2(nvars_, 0);
            Rational coef = c;
            for (int v = 0; v < nvars_; ++v) {
                e2[perm[v]] += e[v];
                if (sign[v] < 0 && (e[v] & 1)) coef = -coef;
            }
            r.add_term(e2, coef);
        }
        return r;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            std::string t = c.to_string();
            for (int v = 0; v < nvars_; ++v) {
                if (!e[v]) continue;
                t += "*" + names[v];
                if (e[v] > 1) t += "^" + std::to_string(e[v]);
            }
            s += t;
        }
        return s;
    }

private:
    int nvars_;
    TermMap terms_;

    static void check_arity(const MultiPoly& a, const MultiPoly& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiPoly: arity mismatch");
    }
};

}  // namespace cosgr
