#pragma once

// The skew basis elements X_ij = E_ij - E_ji acting on exterior powers of
// the standard representation, Pfaffians of principal minors of (X_ij) with
// entries multiplied inside the enveloping algebra, and the invariant
// elements V_d = (-1)^d sum_{|I|=2d} Pf(X_I)^2 realized as exact matrices.
//
// Pfaffian convention: the 1/k!-normalized sum over pair-ordered
// permutations collapses to one term per perfect matching (the k! orderings
// of a matching share sign and product because disjoint X_ij commute), so we
// enumerate each matching once.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "ratmatrix.hpp"
#include "weights.hpp"

namespace cosgr {

// Basis of wedge^k R^n: sorted k-subsets of {1..n} in lexicographic order.
struct WedgeSpace {
    int n = 0, k = 0;
    std::vector<std::vector<int>> basis;
    std::map<std::vector<int>, int> index;

    WedgeSpace(int n_, int k_) : n(n_), k(k_) {
        if (k < 0 || k > n) throw std::invalid_argument("WedgeSpace: need 0 <= k <= n");
        std::vector<int> cur(k);
        for (int t = 0; t < k; ++t) cur[t] = t + 1;
        while (true) {
            index[cur] = static_cast<int>(basis.size());
            basis.push_back(cur);
            int pos = k - 1;
            while (pos >= 0 && cur[pos] == n - k + pos + 1) --pos;
            if (pos < 0) break;
            ++cur[pos];
            for (int t = pos + 1; t < k; ++t) cur[t] = cur[t - 1] + 1;
        }
    }
    int dim() const { return static_cast<int>(basis.size()); }
};

// sparse element of wedge^k
struct ExteriorVector {
    std::map<std::vector<int>, Rational> comps;

    void add(const std::vector<int>& subset, const Rational& c) {
        if (c.is_zero()) return;
        auto it = comps.find(subset);
        if (it == comps.end()) comps[subset] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) comps.erase(it);
        }
    }
};

// insert value m into slot t of a sorted tuple, tracking the wedge sign;
// returns false if m collides with another slot
inline bool wedge_replace(std::vector<int> subset, int slot, int m, int& sign_out,
                          std::vector<int>& out) {
    subset[slot] = m;
    int sign = 1;
    // bubble the changed slot into sorted position
    int t = slot;
    while (t > 0 && subset[t] < subset[t - 1]) {
        std::swap(subset[t], subset[t - 1]);
        sign = -sign;
        --t;
    }
    while (t + 1 < static_cast<int>(subset.size()) && subset[t] > subset[t + 1]) {
        std::swap(subset[t], subset[t + 1]);
        sign = -sign;
        ++t;
    }
    for (std::size_t s = 0; s + 1 < subset.size(); ++s)
        if (subset[s] == subset[s + 1]) return false;
    sign_out = sign;
    out = std::move(subset);
    return true;
}

// X_ij acting as a derivation on a single wedge basis element
inline ExteriorVector act_xij(int i, int j, const std::vector<int>& subset) {
    if (i == j) throw std::invalid_argument("act_xij: need i != j");
    ExteriorVector out;
    for (int slot = 0; slot < static_cast<int>(subset.size()); ++slot) {
        int p = subset[slot];
        int target = 0;
        Rational coef;
        if (p == j) { target = i; coef = Rational(1); }
        else if (p == i) { target = j; coef = Rational(-1); }
        else continue;
        int sign;
        std::vector<int> res;
        if (wedge_replace(subset, slot, target, sign, res))
            out.add(res, coef * Rational(sign));
    }
    return out;
}

inline ExteriorVector act_xij(int i, int j, const ExteriorVector& v) {
    ExteriorVector out;
    for (const auto& [subset, c] : v.comps) {
        auto part = act_xij(i, j, subset);
        for (const auto& [s2, c2] : part.comps) out.add(s2, c * c2);
    }
    return out;
}

// apply a word of X factors, rightmost factor first
inline ExteriorVector apply_word(const std::vector<std::pair<int, int>>& word, ExteriorVector v) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = act_xij(it->first, it->second, v);
    return v;
}

inline RatMatrix xij_matrix(const WedgeSpace& W, int i, int j) {
    RatMatrix M(W.dim(), W.dim());
    for (int col = 0; col < W.dim(); ++col) {
        auto out = act_xij(i, j, W.basis[col]);
        for (const auto& [s, c] : out.comps) M.at(W.index.at(s), col) = c;
    }
    return M;
}

struct Matching {
    std::vector<std::pair<int, int>> pairs;  // each (a, b) with a < b, sorted by a
    int sign = 1;
};

// all perfect matchings of an even-size sorted index set, with the
// permutation sign of the flattened word [a1 b1 a2 b2 ...] relative to I
inline std::vector<Matching> perfect_matchings(const std::vector<int>& I) {
    if (I.size() % 2 != 0) throw std::invalid_argument("perfect_matchings: odd index set");
    std::vector<Matching> out;
    std::vector<int> rest = I;
    Matching cur;
    std::function<void()> rec = [&]() {
        if (rest.empty()) {
            // sign = parity of the word w.r.t. sorted order
            std::vector<int> word;
            for (auto& [a, b] : cur.pairs) { word.push_back(a); word.push_back(b); }
            int inv = 0;
            for (std::size_t s = 0; s < word.size(); ++s)
                for (std::size_t t = s + 1; t < word.size(); ++t)
                    if (word[s] > word[t]) ++inv;
            Matching m = cur;
            m.sign = (inv % 2) ? -1 : 1;
            out.push_back(std::move(m));
            return;
        }
        int a = rest[0];
        for (std::size_t t = 1; t < rest.size(); ++t) {
            int b = rest[t];
            std::vector<int> saved = rest;
            rest.erase(rest.begin() + t);
            rest.erase(rest.begin());
            cur.pairs.emplace_back(a, b);
            rec();
            cur.pairs.pop_back();
            rest = std::move(saved);
        }
    };
    rec();
    return out;
}

// Pf(X_I) as a matrix; `reversed` multiplies each summand's commuting
// factors in the opposite order (must give the same operator)
inline RatMatrix pfaffian_matrix(const WedgeSpace& W, const std::vector<int>& I,
                                 bool reversed = false) {
    if (I.size() % 2 != 0) throw std::invalid_argument("pfaffian_matrix: odd index set");
    RatMatrix M(W.dim(), W.dim());
    auto matchings = perfect_matchings(I);
    for (int col = 0; col < W.dim(); ++col) {
        ExteriorVector basis_vec;
        basis_vec.add(W.basis[col], Rational(1));
        for (const auto& m : matchings) {
            std::vector<std::pair<int, int>> word = m.pairs;
            if (reversed) std::reverse(word.begin(), word.end());
            auto r = apply_word(word, basis_vec);
            for (const auto& [s, c] : r.comps)
                M.at(W.index.at(s), col) += Rational(m.sign) * c;
        }
    }
    return M;
}

// V_d = (-1)^d sum_{|I| = 2d} Pf(X_I)^2 on wedge^k R^n
inline RatMatrix vd_matrix(const WedgeSpace& W, int d) {
    if (2 * d > W.n) throw std::invalid_argument("vd_matrix: need 2d <= n");
    if (d > 4 || W.n > 8)
        throw std::invalid_argument("vd_matrix: cost ceiling d <= 4, n <= 8");
    if (d == 0) return RatMatrix::identity(W.dim());
    RatMatrix acc(W.dim(), W.dim());
    // iterate 2d-subsets of {1..n}
    std::vector<int> I(2 * d);
    for (int t = 0; t < 2 * d; ++t) I[t] = t + 1;
    while (true) {
        RatMatrix pf = pfaffian_matrix(W, I);
        acc += pf * pf;
        int pos = 2 * d - 1;
        while (pos >= 0 && I[pos] == W.n - 2 * d + pos + 1) --pos;
        if (pos < 0) break;
        ++I[pos];
        for (int t = pos + 1; t < 2 * d; ++t) I[t] = I[t - 1] + 1;
    }
    return (d % 2 ? Rational(-1) : Rational(1)) * acc;
}

// V_1 written out directly: -sum_{i<j} X_ij^2 (the quadratic invariant)
inline RatMatrix casimir_matrix(const WedgeSpace& W) {
    RatMatrix acc(W.dim(), W.dim());
    for (int i = 1; i <= W.n; ++i)
        for (int j = i + 1; j <= W.n; ++j) {
            RatMatrix x = xij_matrix(W, i, j);
            acc += x * x;
        }
    return Rational(-1) * acc;
}

// Hodge star on wedge^k R^(n), star(e_S) = sgn([S, S^c]) e_{S^c}
inline RatMatrix hodge_star_matrix(const WedgeSpace& W) {
    WedgeSpace Wc(W.n, W.n - W.k);
    RatMatrix M(Wc.dim(), W.dim());
    for (int col = 0; col < W.dim(); ++col) {
        const auto& S = W.basis[col];
        std::vector<int> comp;
        std::vector<bool> in(W.n + 1, false);
        for (int s : S) in[s] = true;
        for (int t = 1; t <= W.n; ++t)
            if (!in[t]) comp.push_back(t);
        std::vector<int> word = S;
        word.insert(word.end(), comp.begin(), comp.end());
        int inv = 0;
        for (std::size_t s = 0; s < word.size(); ++s)
            for (std::size_t t = s + 1; t < word.size(); ++t)
                if (word[s] > word[t]) ++inv;
        M.at(Wc.index.at(comp), col) = Rational(inv % 2 ? -1 : 1);
    }
    return M;
}

// signed permutation p with signs eps acting on the wedge space
inline RatMatrix signed_permutation_matrix(const WedgeSpace& W, const std::vector<int>& perm,
                                           const std::vector<int>& eps) {
    RatMatrix M(W.dim(), W.dim());
    for (int col = 0; col < W.dim(); ++col) {
        std::vector<int> img;
        Rational coef(1);
        for (int s : W.basis[col]) {
            img.push_back(perm[s - 1]);
            if (eps[s - 1] < 0) coef = -coef;
        }
        // sort image, collecting the permutation sign
        int sign = 1;
        for (std::size_t a = 0; a < img.size(); ++a)
            for (std::size_t b = a + 1; b < img.size(); ++b)
                if (img[a] > img[b]) { std::swap(img[a], img[b]); sign = -sign; }
        M.at(W.index.at(img), col) = coef * Rational(sign);
    }
    return M;
}

// compound (minor) matrix of an n x n real matrix acting on wedge^k
inline std::vector<std::vector<double>> compound_matrix(const WedgeSpace& W,
                                                        const std::vector<std::vector<double>>& G) {
    int dim = W.dim();
    std::vector<std::vector<double>> M(dim, std::vector<double>(dim, 0.0));
    int k = W.k;
    for (int row = 0; row < dim; ++row)
        for (int col = 0; col < dim; ++col) {
            // det of the submatrix G[rows(row), cols(col)], k <= 4
            double sub[4][4];
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    sub[a][b] = G[W.basis[row][a] - 1][W.basis[col][b] - 1];
            double det = 0;
            if (k == 1) det = sub[0][0];
            else if (k == 2) det = sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0];
            else if (k == 3)
                det = sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1]) -
                      sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0]) +
                      sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0]);
            else if (k == 4) {
                for (int c0 = 0; c0 < 4; ++c0) {
                    double m3[3][3];
                    for (int a = 1; a < 4; ++a) {
                        int bb = 0;
                        for (int b = 0; b < 4; ++b) {
                            if (b == c0) continue;
                            m3[a - 1][bb++] = sub[a][b];
                        }
                    }
                    double d3 = m3[0][0] * (m3[1][1] * m3[2][2] - m3[1][2] * m3[2][1]) -
                                m3[0][1] * (m3[1][0] * m3[2][2] - m3[1][2] * m3[2][0]) +
                                m3[0][2] * (m3[1][0] * m3[2][1] - m3[1][1] * m3[2][0]);
                    det += (c0 % 2 ? -1.0 : 1.0) * sub[0][c0] * d3;
                }
            } else {
                throw std::invalid_argument("compound_matrix: k <= 4 only");
            }
            M[row][col] = det;
        }
    return M;
}

// max-abs entry of V*G - G*V for double matrices
inline double commutator_maxnorm(const std::vector<std::vector<double>>& A,
                                 const std::vector<std::vector<double>>& B) {
    std::size_t n = A.size();
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double ab = 0, ba = 0;
            for (std::size_t k = 0; k < n; ++k) {
                ab += A[i][k] * B[k][j];
                ba += B[i][k] * A[k][j];
            }
            worst = std::max(worst, std::fabs(ab - ba));
        }
    return worst;
}

// Givens rotation in the (i, j) coordinate plane of R^n
inline std::vector<std::vector<double>> givens_rotation(int n, int i, int j, double theta) {
    std::vector<std::vector<double>> G(n, std::vector<double>(n, 0.0));
    for (int t = 0; t < n; ++t) G[t][t] = 1.0;
    G[i - 1][i - 1] = std::cos(theta);
    G[j - 1][j - 1] = std::cos(theta);
    G[i - 1][j - 1] = -std::sin(theta);
    G[j - 1][i - 1] = std::sin(theta);
    return G;
}

inline std::vector<std::vector<double>> mat_mul_double(const std::vector<std::vector<double>>& A,
                                                       const std::vector<std::vector<double>>& B) {
    std::size_t n = A.size(), m = B[0].size(), inner = B.size();
    std::vector<std::vector<double>> C(n, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < m; ++j) C[i][j] += A[i][k] * B[k][j];
    return C;
}

}  // namespace cosgr
