#pragma once

// Minimal dense double-precision linear algebra for the sampled-function
// machinery: cyclic Jacobi eigensolver for symmetric matrices, modified
// Gram-Schmidt orthonormalization, Haar orthogonal sampling, and small
// determinants.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "random.hpp"

namespace cosgr {

using DVec = std::vector<double>;
using DMat = std::vector<std::vector<double>>;  // row-major

inline DMat dmat_zero(int r, int c) { return DMat(r, DVec(c, 0.0)); }

inline DMat dmat_identity(int n) {
    DMat m = dmat_zero(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = 1.0;
    return m;
}

inline DMat dmat_mul(const DMat& a, const DMat& b) {
    int n = static_cast<int>(a.size());
    int inner = static_cast<int>(b.size());
    int m = static_cast<int>(b[0].size());
    DMat c = dmat_zero(n, m);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < inner; ++k) {
            double aik = a[i][k];
            if (aik == 0.0) continue;
            for (int j = 0; j < m; ++j) c[i][j] += aik * b[k][j];
        }
    return c;
}

inline DMat dmat_transpose(const DMat& a) {
    DMat t = dmat_zero(static_cast<int>(a[0].size()), static_cast<int>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline DVec dmat_apply(const DMat& a, const DVec& v) {
    DVec r(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

inline double dvec_dot(const DVec& a, const DVec& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double dvec_norm(const DVec& a) { return std::sqrt(dvec_dot(a, a)); }

// Cyclic Jacobi for symmetric matrices.  Returns eigenvalues; V's columns
// are the corresponding orthonormal eigenvectors (V[i][k] = i-th coordinate
// of the k-th eigenvector).
inline DVec jacobi_eigensymmetric(DMat a, DMat& V, int max_sweeps = 64, double tol = 1e-14) {
    int n = static_cast<int>(a.size());
    V = dmat_identity(n);
    if (n == 0) return {};
    double scale = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = std::max(scale, std::fabs(a[i][j]));
    if (scale == 0) scale = 1;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off = std::max(off, std::fabs(a[i][j]));
        if (off < tol * scale) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = V[k][p], vkq = V[k][q];
                    V[k][p] = c * vkp - s * vkq;
                    V[k][q] = s * vkp + c * vkq;
                }
            }
    }
    DVec evals(n);
    for (int i = 0; i < n; ++i) evals[i] = a[i][i];
    return evals;
}

// In-place modified Gram-Schmidt on the columns of an n x k matrix stored
// column-major as vector of columns.  Positive diagonal convention, so
// Gaussian input yields Haar-distributed frames.
inline void orthonormalize_columns(std::vector<DVec>& cols) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (std::size_t t = 0; t < j; ++t) {
            double proj = dvec_dot(cols[t], cols[j]);
            for (std::size_t i = 0; i < cols[j].size(); ++i) cols[j][i] -= proj * cols[t][i];
        }
        double nor = dvec_norm(cols[j]);
        if (nor < 1e-300) throw std::runtime_error("orthonormalize_columns: rank deficient");
        for (auto& x : cols[j]) x /= nor;
    }
}

inline DMat haar_orthogonal(int n, Rng& rng) {
    std::vector<DVec> cols(n, DVec(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) cols[j][i] = rng.normal();
    orthonormalize_columns(cols);
    DMat q = dmat_zero(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) q[i][j] = cols[j][i];
    return q;
}

// determinant by partial-pivot elimination; sizes here are tiny
inline double small_det(DMat a) {
    int n = static_cast<int>(a.size());
    double det = 1.0;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int rr = c + 1; rr < n; ++rr)
            if (std::fabs(a[rr][c]) > std::fabs(a[piv][c])) piv = rr;
        if (std::fabs(a[piv][c]) < 1e-300) return 0.0;
        if (piv != c) { std::swap(a[piv], a[c]); det = -det; }
        det *= a[c][c];
        for (int rr = c + 1; rr < n; ++rr) {
            double f = a[rr][c] / a[c][c];
            for (int cc = c; cc < n; ++cc) a[rr][cc] -= f * a[c][cc];
        }
    }
    return det;
}

}  // namespace cosgr
