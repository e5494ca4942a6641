#pragma once

// Dense matrices over Rational, sized for the small representation spaces
// used here (dimensions up to a few hundred).

#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace cosgr {

class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
        check_same(a, b);
        RatMatrix r = a;
        for (std::size_t t = 0; t < r.data_.size(); ++t) r.data_[t] += b.data_[t];
        return r;
    }
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
        check_same(a, b);
        RatMatrix r = a;
        for (std::size_t t = 0; t < r.data_.size(); ++t) r.data_[t] -= b.data_[t];
        return r;
    }
    friend RatMatrix operator*(const Rational& s, const RatMatrix& a) {
        RatMatrix r = a;
        for (auto& x : r.data_) x *= s;
        return r;
    }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: shape mismatch");
        RatMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rational& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const Rational& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }
    RatMatrix& operator+=(const RatMatrix& b) { *this = *this + b; return *this; }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    // true iff M == s * I
    bool is_scalar(const Rational& s) const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != (i == j ? s : Rational(0))) return false;
        return true;
    }

    std::vector<std::vector<double>> to_double() const {
        std::vector<std::vector<double>> m(rows_, std::vector<double>(cols_));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m[i][j] = at(i, j).to_double();
        return m;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("RatMatrix: apply shape");
        std::vector<Rational> out(rows_, Rational(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
        return out;
    }

private:
    int rows_, cols_;
    std::vector<Rational> data_;

    static void check_same(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("RatMatrix: shape mismatch");
    }
};

}  // namespace cosgr
