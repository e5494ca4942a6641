#pragma once

// Symmetric-function side of the invariant-operator calculus: elementary and
// complete symmetric polynomials, the triangular change-of-basis matrices
// they generate, the Harish-Chandra images gamma(V_d) of the Pfaffian-square
// invariants, and the expansion of the pole-free step operator D-hat_nu in
// the V_k basis.
//
// Variable layout: polynomials in z live in r variables z_1..z_r; the D-hat
// identity lives in 1+r variables (nu, z_1..z_r).

#include <stdexcept>
#include <vector>

#include "multipoly.hpp"
#include "spectral.hpp"
#include "weights.hpp"

namespace cosgr {

// e_k of the variables listed in `vars` (indices into an nvars-ring)
inline MultiPoly elem_sym(int nvars, int k, const std::vector<int>& vars) {
    if (k < 0) throw std::invalid_argument("elem_sym: k < 0");
    // products over strictly increasing index tuples
    MultiPoly acc(nvars);
    if (k == 0) return MultiPoly::constant(nvars, Rational(1));
    if (k > static_cast<int>(vars.size())) return acc;
    std::vector<int> idx(k);
    std::vector<int> e(nvars, 0);
    auto emit = [&]() {
        std::fill(e.begin(), e.end(), 0);
        for (int t : idx) e[vars[t]] += 1;
        acc.add_term(e, Rational(1));
    };
    // iterate combinations
    for (int t = 0; t < k; ++t) idx[t] = t;
    while (true) {
        emit();
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == static_cast<int>(vars.size()) - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int t = pos + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
    return acc;
}

// h_k of the variables listed in `vars`
inline MultiPoly comp_sym(int nvars, int k, const std::vector<int>& vars) {
    if (k < 0) throw std::invalid_argument("comp_sym: k < 0");
    MultiPoly acc(nvars);
    if (k == 0) return MultiPoly::constant(nvars, Rational(1));
    if (vars.empty()) return acc;
    // multisets as non-decreasing index tuples
    std::vector<int> idx(k, 0);
    std::vector<int> e(nvars, 0);
    while (true) {
        std::fill(e.begin(), e.end(), 0);
        for (int t : idx) e[vars[t]] += 1;
        acc.add_term(e, Rational(1));
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == static_cast<int>(vars.size()) - 1) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int t = pos + 1; t < k; ++t) idx[t] = idx[pos];
    }
    return acc;
}

// e_k / h_k evaluated at an explicit tuple of rationals
inline Rational elem_sym_at(int k, const std::vector<Rational>& xs) {
    if (k < 0) return Rational(0);
    if (k == 0) return Rational(1);
    if (k > static_cast<int>(xs.size())) return Rational(0);
    // dp over prefix products
    std::vector<Rational> dp(k + 1, Rational(0));
    dp[0] = Rational(1);
    for (const auto& x : xs)
        for (int j = k; j >= 1; --j) dp[j] += dp[j - 1] * x;
    return dp[k];
}

inline Rational comp_sym_at(int k, const std::vector<Rational>& xs) {
    if (k < 0) return Rational(0);
    if (k == 0) return Rational(1);
    if (xs.empty()) return Rational(0);
    std::vector<Rational> dp(k + 1, Rational(0));
    dp[0] = Rational(1);
    for (const auto& x : xs)
        for (int j = 1; j <= k; ++j) dp[j] += dp[j - 1] * x;
    return dp[k];
}

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

// (r+1)x(r+1) upper-triangular matrices over Q[x_1..x_r]:
//   a_ij = e_{j-i}(x_{i+1},...,x_r),  b_ij = (-1)^{j-i} h_{j-i}(x_j,...,x_r).
struct ABMatrices {
    PolyMatrix a, b;
};

inline ABMatrices ab_matrices(int r) {
    if (r < 1) throw std::invalid_argument("ab_matrices: r >= 1 required");
    auto var_range = [&](int from) {  // 1-based from..r
        std::vector<int> v;
        for (int t = from; t <= r; ++t) v.push_back(t - 1);
        return v;
    };
    ABMatrices m;
    m.a.assign(r + 1, std::vector<MultiPoly>(r + 1, MultiPoly(r)));
    m.b.assign(r + 1, std::vector<MultiPoly>(r + 1, MultiPoly(r)));
    for (int i = 0; i <= r; ++i) {
        for (int j = i; j <= r; ++j) {
            m.a[i][j] = elem_sym(r, j - i, var_range(i + 1));
            MultiPoly h = comp_sym(r, j - i, var_range(j));
            m.b[i][j] = ((j - i) % 2 ? Rational(-1) : Rational(1)) * h;
        }
    }
    return m;
}

inline PolyMatrix poly_mat_mul(const PolyMatrix& A, const PolyMatrix& B) {
    std::size_t n = A.size();
    int nv = A[0][0].nvars();
    PolyMatrix C(n, std::vector<MultiPoly>(n, MultiPoly(nv)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (A[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!B[k][j].is_zero()) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

inline bool poly_mat_is_identity(const PolyMatrix& M) {
    int nv = M[0][0].nvars();
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < M.size(); ++j) {
            const MultiPoly want = (i == j) ? MultiPoly::constant(nv, Rational(1)) : MultiPoly(nv);
            if (M[i][j] != want) return false;
        }
    return true;
}

// a_kd / b_kd with x_j = rho_j^2
inline Rational a_coeff_rho(int n, int r, int k, int d) {
    auto rho = rho_vector(n, r);
    std::vector<Rational> xs;
    for (int j = k + 1; j <= r; ++j) xs.push_back(rho[j - 1] * rho[j - 1]);
    return elem_sym_at(d - k, xs);
}

inline Rational b_coeff_rho(int n, int r, int k, int d) {
    auto rho = rho_vector(n, r);
    std::vector<Rational> xs;
    for (int j = d; j <= r; ++j) xs.push_back(rho[j - 1] * rho[j - 1]);
    Rational h = comp_sym_at(d - k, xs);
    return ((d - k) % 2 ? -h : h);
}

// Harish-Chandra image of the d-th Pfaffian-square invariant, as a
// polynomial in z_1..z_r:
//   gamma(V_d) = sum_k (-1)^{d-k} h_{d-k}(rho_d^2..rho_r^2) e_k(z_1^2..z_r^2)
inline MultiPoly gamma_Vd(int n, int r, int d) {
    if (d < 1 || d > r || 2 * r > n)
        throw std::invalid_argument("gamma_Vd: need 1 <= d <= r <= n/2");
    std::vector<int> all;
    for (int v = 0; v < r; ++v) all.push_back(v);
    MultiPoly acc(r);
    for (int k = 0; k <= d; ++k) {
        Rational coef = b_coeff_rho(n, r, k, d);
        if (coef.is_zero()) continue;
        // e_k(z^2): elementary symmetric in the squared variables
        MultiPoly ek = elem_sym(r, k, all);
        MultiPoly ek_sq(r);
        for (const auto& [e, c] : ek.terms()) {
            std::vector<int> e2(e);
            for (auto& x : e2) x *= 2;
            ek_sq.add_term(e2, c);
        }
        acc += coef * ek_sq;
    }
    return acc;
}

inline MultiPoly gamma_V0(int r) { return MultiPoly::constant(r, Rational(1)); }

// e_d(z_1^2,...,z_r^2) as a polynomial in z
inline MultiPoly elem_sym_squares(int r, int d) {
    std::vector<int> all;
    for (int v = 0; v < r; ++v) all.push_back(v);
    MultiPoly ed = elem_sym(r, d, all);
    MultiPoly out(r);
    for (const auto& [e, c] : ed.terms()) {
        std::vector<int> e2(e);
        for (auto& x : e2) x *= 2;
        out.add_term(e2, c);
    }
    return out;
}

// Exact identity behind the eigenvalue statement for E_d = sum_k a_kd(rho^2) V_k:
//   sum_k a_kd(rho^2) gamma(V_k) == e_d(z^2)  in Q[z].
inline void check_Ed_identity(int n, int r, int d) {
    if (d < 1 || d > r) throw std::invalid_argument("check_Ed_identity: 1 <= d <= r");
    MultiPoly lhs = a_coeff_rho(n, r, 0, d) * gamma_V0(r);
    for (int k = 1; k <= d; ++k) lhs += a_coeff_rho(n, r, k, d) * gamma_Vd(n, r, k);
    if (lhs != elem_sym_squares(r, d))
        throw falsification_error("E_d identity failed for n=" + std::to_string(n) +
                                  " r=" + std::to_string(r) + " d=" + std::to_string(d));
}

// c_k(nu) = prod_{j=k+1..r} (j + 2nu + 1)(j - (2nu + n + 1)), univariate in nu
inline std::vector<MultiPoly> dhat_coefficients(int n, int r) {
    if (r < 1 || 2 * r > n) throw std::invalid_argument("dhat_coefficients: need 1 <= r <= n/2");
    MultiPoly nu = MultiPoly::variable(1, 0);
    std::vector<MultiPoly> cs(r + 1, MultiPoly::constant(1, Rational(1)));
    for (int k = 0; k <= r; ++k) {
        MultiPoly prod = MultiPoly::constant(1, Rational(1));
        for (int j = k + 1; j <= r; ++j) {
            MultiPoly f1 = Rational(2) * nu + MultiPoly::constant(1, Rational(j + 1));
            MultiPoly f2 = MultiPoly::constant(1, Rational(j - n - 1)) - Rational(2) * nu;
            prod *= f1 * f2;
        }
        cs[k] = prod;
    }
    return cs;
}

// Exact polynomial identity in (nu, z_1..z_r):
//   (-1/4)^r sum_k c_k(nu) gamma(V_k)(z) == (-1/4)^r prod_j (z_j^2 + lambda),
// lambda = -(2nu + n/2 + 1)^2.  Throws on failure.
inline void check_dhat_identity(int n, int r) {
    if (r < 1 || 2 * r > n) throw std::invalid_argument("check_dhat_identity: need 1 <= r <= n/2");
    const int nv = 1 + r;  // nu, z_1..z_r
    auto cs = dhat_coefficients(n, r);
    MultiPoly lhs(nv);
    lhs += cs[0].embed(nv, 0);  // gamma(V_0) = 1
    for (int k = 1; k <= r; ++k)
        lhs += cs[k].embed(nv, 0) * gamma_Vd(n, r, k).embed(nv, 1);

    MultiPoly nu = MultiPoly::variable(nv, 0);
    MultiPoly shift = Rational(2) * nu + MultiPoly::constant(nv, Rational(n, 2) + Rational(1));
    MultiPoly lambda = -(shift * shift);
    MultiPoly rhs = MultiPoly::constant(nv, Rational(1));
    for (int j = 1; j <= r; ++j) {
        MultiPoly zj = MultiPoly::variable(nv, j);
        rhs *= zj * zj + lambda;
    }
    Rational scale = Rational(-1, 4).pow(r);
    if (scale * lhs != scale * rhs)
        throw falsification_error("D-hat expansion identity failed for n=" + std::to_string(n) +
                                  " r=" + std::to_string(r));
}

// evaluate a polynomial in z_1..z_r at z = m + rho
inline Rational hc_eigenvalue(const MultiPoly& poly, const Signature& sig, const HighestWeight& m) {
    if (poly.nvars() != sig.r) throw std::invalid_argument("hc_eigenvalue: poly must have r variables");
    return poly.evaluate(mu_tilde(sig, m));
}

// fingerprint (e_1(mu~^2), ..., e_r(mu~^2)) of a component label
inline std::vector<Rational> weight_fingerprint(const Signature& sig, const HighestWeight& m) {
    auto mt = mu_tilde(sig, m);
    std::vector<Rational> sq;
    for (const auto& z : mt) sq.push_back(z * z);
    std::vector<Rational> fp;
    for (int d = 1; d <= sig.r; ++d) fp.push_back(elem_sym_at(d, sq));
    return fp;
}

}  // namespace cosgr
