#pragma once

// Polynomial model for smooth functions on Gr_i(R^n): polynomials in the
// entries of the rank-i orthogonal projector P onto the subspace, restricted
// to the Grassmannian by evaluation at sampled frames (P = F F^T).  Since P
// is symmetric, the model works in the n(n+1)/2 entries q_ab, a <= b.
//
// The Lie algebra acts by derivations along the conjugation flow; the
// variable map for X_ij sends q_ab to (P X_ij - X_ij P)_ab, which makes
// X -> derivation a homomorphism: [X_ij., X_jk.] = X_ik. on all polynomials.
//
// Isotypic components are cut out as simultaneous eigenspaces of the
// operators E_d (polynomials in the squared-Pfaffian invariants V_k with
// coefficients a_kd(rho^2)), then labeled by matching the eigenvalue
// fingerprint (e_1(mu~^2), ..., e_r(mu~^2)) exactly.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exterior.hpp"
#include "frames.hpp"
#include "linalg.hpp"
#include "multipoly.hpp"
#include "ratmatrix.hpp"
#include "symmetric.hpp"

namespace cosgr {

class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& m) : std::runtime_error(m) {}
};

class ProjectionModel {
public:
    explicit ProjectionModel(int n) : n_(n), nvars_(n * (n + 1) / 2) {
        if (n < 2 || n > 8) throw resource_error("ProjectionModel: supported range is 2 <= n <= 8");
    }

    int n() const { return n_; }
    int nvars() const { return nvars_; }

    // variable index of q_ab, 1-based a, b in any order
    int var(int a, int b) const {
        if (a > b) std::swap(a, b);
        // row-major upper triangle
        return (a - 1) * (n_ + 1) - a * (a - 1) / 2 + (b - a);
    }

    MultiPoly variable(int a, int b) const { return MultiPoly::variable(nvars_, var(a, b)); }

    // derivation image of the variable q_ab under X_ij: (P X - X P)_ab
    MultiPoly var_image(int i, int j, int a, int b) const {
        MultiPoly out(nvars_);
        auto add = [&](int x, int y, int sgn) {
            std::vector<int> e(nvars_, 0);
            e[var(x, y)] = 1;
            out.add_term(e, Rational(sgn));
        };
        if (b == j) add(a, i, 1);
        if (b == i) add(a, j, -1);
        if (a == i) add(j, b, -1);
        if (a == j) add(i, b, 1);
        return out;
    }

    MultiPoly xij_derive(int i, int j, const MultiPoly& f) const {
        if (i == j) throw std::invalid_argument("xij_derive: need i != j");
        if (i < 1 || j < 1 || i > n_ || j > n_) throw std::invalid_argument("xij_derive: index range");
        MultiPoly out(nvars_);
        for (int a = 1; a <= n_; ++a)
            for (int b = a; b <= n_; ++b) {
                if (a != i && a != j && b != i && b != j) continue;
                MultiPoly img = var_image(i, j, a, b);
                if (img.is_zero()) continue;
                MultiPoly df = f.derivative(var(a, b));
                if (df.is_zero()) continue;
                out += df * img;
            }
        return out;
    }

    MultiPoly apply_word(const std::vector<std::pair<int, int>>& word, MultiPoly f) const {
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            f = xij_derive(it->first, it->second, f);
        return f;
    }

    // Pf(X_I) as a sum over perfect matchings
    MultiPoly apply_pfaffian(const std::vector<Matching>& matchings, const MultiPoly& f) const {
        MultiPoly acc(nvars_);
        for (const auto& m : matchings)
            acc += Rational(m.sign) * apply_word(m.pairs, f);
        return acc;
    }

    // V_d f = (-1)^d sum_{|I|=2d} Pf(X_I)^2 f
    MultiPoly apply_vd(int d, const MultiPoly& f) const {
        if (d == 0) return f;
        if (2 * d > n_) throw std::invalid_argument("apply_vd: need 2d <= n");
        MultiPoly acc(nvars_);
        std::vector<int> I(2 * d);
        for (int t = 0; t < 2 * d; ++t) I[t] = t + 1;
        while (true) {
            auto ms = perfect_matchings(I);
            acc += apply_pfaffian(ms, apply_pfaffian(ms, f));
            int pos = 2 * d - 1;
            while (pos >= 0 && I[pos] == n_ - 2 * d + pos + 1) --pos;
            if (pos < 0) break;
            ++I[pos];
            for (int t = pos + 1; t < 2 * d; ++t) I[t] = I[t - 1] + 1;
        }
        return (d % 2 ? Rational(-1) : Rational(1)) * acc;
    }

    // all exponent vectors of total degree <= D
    std::vector<std::vector<int>> monomials_up_to(int D) const {
        std::vector<std::vector<int>> out;
        std::vector<int> cur(nvars_, 0);
        std::function<void(int, int)> rec = [&](int v, int rem) {
            if (v == nvars_) {
                out.push_back(cur);
                return;
            }
            for (int e = 0; e <= rem; ++e) {
                cur[v] = e;
                rec(v + 1, rem - e);
                cur[v] = 0;
            }
        };
        rec(0, D);
        return out;
    }

    // values of the variables at a projector
    DVec variable_values(const DMat& P) const {
        DVec vals(nvars_);
        for (int a = 1; a <= n_; ++a)
            for (int b = a; b <= n_; ++b) vals[var(a, b)] = P[a - 1][b - 1];
        return vals;
    }

    double eval_monomial(const std::vector<int>& exps, const DVec& vals) const {
        double v = 1.0;
        for (int t = 0; t < nvars_; ++t)
            for (int e = 0; e < exps[t]; ++e) v *= vals[t];
        return v;
    }

private:
    int n_, nvars_;
};

// exact matrix of f -> V_d f on a monomial basis (columns indexed by basis)
inline RatMatrix vd_monomial_matrix(const ProjectionModel& model, int d,
                                    const std::vector<std::vector<int>>& monomials) {
    const int N = static_cast<int>(monomials.size());
    if (N > 400) throw resource_error("vd_monomial_matrix: monomial space too large");
    std::map<std::vector<int>, int> index;
    for (int t = 0; t < N; ++t) index[monomials[t]] = t;
    RatMatrix M(N, N);
    for (int col = 0; col < N; ++col) {
        MultiPoly mono(model.nvars());
        mono.add_term(monomials[col], Rational(1));
        MultiPoly img = model.apply_vd(d, mono);
        for (const auto& [e, c] : img.terms()) {
            auto it = index.find(e);
            if (it == index.end())
                throw std::logic_error("vd_monomial_matrix: derivation left the graded space");
            M.at(it->second, col) = c;
        }
    }
    return M;
}

// row-reduce a list of rational vectors; returns reduced rows and their pivot
// columns (reduced row echelon form, pivots normalized to 1)
struct RrefBasis {
    std::vector<std::vector<Rational>> rows;
    std::vector<int> pivots;

    // subtract the span so that v has zeros at every pivot column
    void reduce(std::vector<Rational>& v) const {
        for (std::size_t t = 0; t < rows.size(); ++t) {
            const Rational& c = v[pivots[t]];
            if (c.is_zero()) continue;
            Rational f = c;  // pivot entries are 1
            for (std::size_t a = 0; a < v.size(); ++a)
                if (!rows[t][a].is_zero()) v[a] -= f * rows[t][a];
        }
    }

    void insert(std::vector<Rational> v) {
        reduce(v);
        int piv = -1;
        for (std::size_t a = 0; a < v.size(); ++a)
            if (!v[a].is_zero()) { piv = static_cast<int>(a); break; }
        if (piv < 0) return;
        Rational inv = Rational(1) / v[piv];
        for (auto& x : v) x *= inv;
        // back-substitute into existing rows
        for (std::size_t t = 0; t < rows.size(); ++t) {
            const Rational& c = rows[t][piv];
            if (c.is_zero()) continue;
            Rational f = c;
            for (std::size_t a = 0; a < v.size(); ++a)
                if (!v[a].is_zero()) rows[t][a] -= f * v[a];
        }
        rows.push_back(std::move(v));
        pivots.push_back(piv);
    }

    int dim() const { return static_cast<int>(rows.size()); }
};

// exact nullspace basis of a rational matrix (columns = unknowns)
inline std::vector<std::vector<Rational>> rational_nullspace(const RatMatrix& A) {
    RrefBasis r;
    for (int i = 0; i < A.rows(); ++i) {
        std::vector<Rational> row(A.cols());
        for (int j = 0; j < A.cols(); ++j) row[j] = A.at(i, j);
        r.insert(std::move(row));
    }
    std::vector<bool> is_pivot(A.cols(), false);
    for (int p : r.pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < A.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(A.cols(), Rational(0));
        v[free] = Rational(1);
        for (std::size_t t = 0; t < r.rows.size(); ++t)
            v[r.pivots[t]] = -r.rows[t][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

struct IsotypicComponent {
    HighestWeight label;
    int dim = 0;
    std::vector<Rational> fingerprint_exact;
    std::vector<std::vector<Rational>> basis_exact;  // monomial coefficients
    DMat basis_coeffs;  // same vectors as doubles, unit sampled-L2 norm
};

struct IsotypicDecomposition {
    Signature sig;
    int max_degree = 0;
    std::uint64_t seed = 0;
    double rank_tol = 0;
    ProjectionModel model{3};
    std::vector<std::vector<int>> monomials;
    std::vector<SubspaceFrame> frames;
    DMat M;                           // S x N monomial values at the frames
    RrefBasis ideal;                  // degree-<=D part of the variety ideal
    std::vector<int> coset_basis;     // non-pivot monomial indices, size q
    std::vector<RatMatrix> vk_exact;  // V_0..V_r on the monomial space
    std::vector<RatMatrix> ed_exact;  // E_1..E_r on the monomial space
    std::vector<RatMatrix> ed_coset;  // E_1..E_r on the coset basis (q x q)
    std::vector<IsotypicComponent> components;

    int quotient_dim() const { return static_cast<int>(coset_basis.size()); }

    DVec eval_at_frames(const DVec& coeffs) const {
        DVec v(M.size(), 0.0);
        for (std::size_t s = 0; s < M.size(); ++s)
            for (std::size_t a = 0; a < coeffs.size(); ++a)
                if (coeffs[a] != 0.0) v[s] += M[s][a] * coeffs[a];
        return v;
    }
};

namespace detail {

// reduce an exact monomial-space vector mod the ideal, then read off the
// coordinates on the coset basis
inline std::vector<Rational> coset_coordinates(const IsotypicDecomposition& dec,
                                               std::vector<Rational> v) {
    dec.ideal.reduce(v);
    std::vector<Rational> out(dec.coset_basis.size());
    for (std::size_t t = 0; t < dec.coset_basis.size(); ++t) out[t] = v[dec.coset_basis[t]];
    return out;
}

}  // namespace detail

// Exact isotypic decomposition of the degree-<=D polynomial functions on
// Gr_i(R^n).  The commuting operators E_d act on the coset space of the
// variety ideal; the component labeled m is the exact joint eigenspace with
// eigenvalues e_d(mu~^2).  Sampled frames serve as the numeric cross-check
// that the ideal basis is complete and the component bases stay independent
// in evaluation.
inline IsotypicDecomposition build_isotypic(const Signature& sig, int max_degree, int sample_count,
                                            std::uint64_t seed, double rank_tol = 1e-9) {
    if (max_degree < 1 || max_degree > 3)
        throw resource_error("build_isotypic: max_degree must be 1..3");
    IsotypicDecomposition dec;
    dec.sig = sig;
    dec.max_degree = max_degree;
    dec.seed = seed;
    dec.rank_tol = rank_tol;
    dec.model = ProjectionModel(sig.n);
    dec.monomials = dec.model.monomials_up_to(max_degree);
    const int N = static_cast<int>(dec.monomials.size());
    if (N > 400) throw resource_error("build_isotypic: monomial space too large");
    if (sample_count < 4 * N)
        throw std::invalid_argument("build_isotypic: sample_count must be >= 4 * monomial count");
    const int n = sig.n;
    const int nv = dec.model.nvars();

    // evaluations at Haar frames
    dec.frames = sample_uniform(sig, sample_count, seed);
    dec.M = dmat_zero(sample_count, N);
    for (int s = 0; s < sample_count; ++s) {
        DVec vals = dec.model.variable_values(dec.frames[s].projection());
        for (int a = 0; a < N; ++a) dec.M[s][a] = dec.model.eval_monomial(dec.monomials[a], vals);
    }

    // Ideal generators: tr P - i and the entries of P^2 - P.  For rank one
    // (or corank one) the 2x2 minors of P (of I - P) also vanish and are not
    // generated by the idempotency relations in degree 2; the sampled-rank
    // cross-check below guards the completeness of this list.
    std::vector<MultiPoly> gens;
    {
        MultiPoly tr(nv);
        for (int a = 1; a <= n; ++a) tr += dec.model.variable(a, a);
        gens.push_back(tr - MultiPoly::constant(nv, Rational(sig.i)));
        for (int a = 1; a <= n; ++a)
            for (int b = a; b <= n; ++b) {
                MultiPoly e(nv);
                for (int c = 1; c <= n; ++c) e += dec.model.variable(a, c) * dec.model.variable(c, b);
                e -= dec.model.variable(a, b);
                gens.push_back(std::move(e));
            }
        if (sig.i == 1 || sig.i == n - 1) {
            bool flip = (sig.i == n - 1);
            auto entry = [&](int x, int y) {
                MultiPoly e = dec.model.variable(x, y);
                if (!flip) return e;
                return MultiPoly::constant(nv, Rational(x == y ? 1 : 0)) - e;
            };
            for (int a = 1; a <= n; ++a)
                for (int c = a + 1; c <= n; ++c)
                    for (int b = 1; b <= n; ++b)
                        for (int d = b + 1; d <= n; ++d)
                            gens.push_back(entry(a, b) * entry(c, d) - entry(a, d) * entry(c, b));
        }
    }
    std::map<std::vector<int>, int> mono_index;
    for (int t = 0; t < N; ++t) mono_index[dec.monomials[t]] = t;
    auto to_vector = [&](const MultiPoly& f) {
        std::vector<Rational> v(N, Rational(0));
        for (const auto& [e, c] : f.terms()) v[mono_index.at(e)] = c;
        return v;
    };
    for (const auto& g : gens) {
        int gd = g.total_degree();
        for (const auto& mono : dec.model.monomials_up_to(max_degree - gd)) {
            MultiPoly m(nv);
            m.add_term(mono, Rational(1));
            dec.ideal.insert(to_vector(g * m));
        }
    }
    std::vector<bool> is_pivot(N, false);
    for (int p : dec.ideal.pivots) is_pivot[p] = true;
    for (int t = 0; t < N; ++t)
        if (!is_pivot[t]) dec.coset_basis.push_back(t);
    const int q = static_cast<int>(dec.coset_basis.size());

    // cross-check: sampled rank of the monomial space must equal q
    {
        DMat G = dmat_zero(N, N);
        for (int s = 0; s < sample_count; ++s)
            for (int a = 0; a < N; ++a) {
                double ms = dec.M[s][a];
                if (ms == 0.0) continue;
                for (int b = a; b < N; ++b) G[a][b] += ms * dec.M[s][b];
            }
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < a; ++b) G[a][b] = G[b][a];
        DMat W;
        DVec ev = jacobi_eigensymmetric(G, W);
        double lmax = 0;
        for (double e : ev) lmax = std::max(lmax, e);
        int rank = 0;
        for (double e : ev)
            if (e > rank_tol * lmax) ++rank;
        if (rank != q)
            throw falsification_error(
                "build_isotypic: sampled rank " + std::to_string(rank) +
                " does not match the ideal coset dimension " + std::to_string(q));
    }

    // exact invariant operators on the monomial space and the coset space
    dec.vk_exact.push_back(RatMatrix::identity(N));
    for (int k = 1; k <= sig.r; ++k)
        dec.vk_exact.push_back(vd_monomial_matrix(dec.model, k, dec.monomials));
    for (int d = 1; d <= sig.r; ++d) {
        RatMatrix Ed(N, N);
        for (int k = 0; k <= d; ++k) {
            Rational a = a_coeff_rho(sig.n, sig.r, k, d);
            if (!a.is_zero()) Ed += a * dec.vk_exact[k];
        }
        dec.ed_exact.push_back(Ed);
        RatMatrix Q(q, q);
        for (int col = 0; col < q; ++col) {
            std::vector<Rational> v(N, Rational(0));
            for (int a = 0; a < N; ++a) v[a] = Ed.at(a, dec.coset_basis[col]);
            auto cc = detail::coset_coordinates(dec, std::move(v));
            for (int row = 0; row < q; ++row) Q.at(row, col) = cc[row];
        }
        dec.ed_coset.push_back(Q);
    }

    // exact joint eigenspaces per candidate label
    int total = 0;
    for (const auto& cand : enumerate_weights(sig.r, 2 * max_degree)) {
        auto fp = weight_fingerprint(sig, cand);
        // iterated kernels: rows of (E_d - fp_d) stacked over d
        RatMatrix stacked(sig.r * q, q);
        for (int d = 0; d < sig.r; ++d)
            for (int row = 0; row < q; ++row)
                for (int col = 0; col < q; ++col)
                    stacked.at(d * q + row, col) =
                        dec.ed_coset[d].at(row, col) - (row == col ? fp[d] : Rational(0));
        auto null_basis = rational_nullspace(stacked);
        if (null_basis.empty()) continue;
        IsotypicComponent comp;
        comp.label = cand;
        comp.dim = static_cast<int>(null_basis.size());
        comp.fingerprint_exact = fp;
        for (const auto& y : null_basis) {
            std::vector<Rational> c(N, Rational(0));
            for (int t = 0; t < q; ++t) c[dec.coset_basis[t]] = y[t];
            comp.basis_exact.push_back(std::move(c));
        }
        total += comp.dim;
        dec.components.push_back(std::move(comp));
    }
    if (total != q)
        throw falsification_error("build_isotypic: joint eigenspaces fill " + std::to_string(total) +
                                  " of " + std::to_string(q) +
                                  " coset dimensions; unmatched eigenvalues remain");

    // numeric copies, normalized to unit sampled-L2 norm; basis functions
    // must stay numerically independent in evaluation
    for (auto& comp : dec.components) {
        comp.basis_coeffs = dmat_zero(N, comp.dim);
        for (int t = 0; t < comp.dim; ++t) {
            DVec c(N);
            for (int a = 0; a < N; ++a) c[a] = comp.basis_exact[t][a].to_double();
            DVec vals = dec.eval_at_frames(c);
            double nor = std::sqrt(dvec_dot(vals, vals) / sample_count);
            if (nor < 1e-12)
                throw std::runtime_error("build_isotypic: numerically degenerate component basis");
            for (int a = 0; a < N; ++a) comp.basis_coeffs[a][t] = c[a] / nor;
        }
    }
    return dec;
}

// worst |(Op f - scale f)(frame)| over a component's basis functions
inline double component_scaling_residual(const IsotypicDecomposition& dec, const RatMatrix& op,
                                         const Rational& scale, const IsotypicComponent& comp) {
    const int N = static_cast<int>(dec.monomials.size());
    auto opd = op.to_double();
    double sc = scale.to_double();
    double worst = 0;
    for (int t = 0; t < comp.dim; ++t) {
        DVec c(N, 0.0), g(N, 0.0);
        for (int a = 0; a < N; ++a) c[a] = comp.basis_coeffs[a][t];
        for (int a = 0; a < N; ++a) {
            for (int b = 0; b < N; ++b)
                if (opd[a][b] != 0.0 && c[b] != 0.0) g[a] += opd[a][b] * c[b];
            g[a] -= sc * c[a];
        }
        DVec vals = dec.eval_at_frames(g);
        for (double v : vals) worst = std::max(worst, std::fabs(v));
    }
    return worst;
}

// exact matrix of D-hat_nu = (-1/4)^r sum_k c_k(nu) V_k on the monomial space
inline RatMatrix dhat_monomial_matrix(const IsotypicDecomposition& dec, const Rational& nu) {
    const int N = static_cast<int>(dec.monomials.size());
    auto cs = dhat_coefficients(dec.sig.n, dec.sig.r);
    RatMatrix acc(N, N);
    for (int k = 0; k <= dec.sig.r; ++k) {
        Rational ck = cs[k].evaluate({nu});
        if (!ck.is_zero()) acc += ck * dec.vk_exact[k];
    }
    return Rational(-1, 4).pow(dec.sig.r) * acc;
}

struct SphericalVectorResult {
    DVec coeffs;      // monomial coefficients, unit sampled-L2 norm
    double residual;  // worst |pi(k) v - v| over fresh stabilizer samples
};

// The unique-up-to-scale vector of a component fixed by the stabilizer
// O(i) x O(n-i) of the coordinate base point, found by iterated averaging
// over sampled stabilizer rotations.
inline SphericalVectorResult spherical_vector(const IsotypicDecomposition& dec,
                                              const IsotypicComponent& comp, std::uint64_t seed,
                                              int iterations = 60, double tol = 1e-8) {
    const int N = static_cast<int>(dec.monomials.size());
    const int S = static_cast<int>(dec.frames.size());
    const int p = comp.dim;
    const Signature& sig = dec.sig;
    Rng rng(derive_stream_seed(seed, 17));

    auto stabilizer_element = [&]() {
        DMat Q1 = haar_orthogonal(sig.i, rng);
        DMat Q2 = haar_orthogonal(sig.n - sig.i, rng);
        DMat k = dmat_zero(sig.n, sig.n);
        for (int a = 0; a < sig.i; ++a)
            for (int b = 0; b < sig.i; ++b) k[a][b] = Q1[a][b];
        for (int a = 0; a < sig.n - sig.i; ++a)
            for (int b = 0; b < sig.n - sig.i; ++b) k[sig.i + a][sig.i + b] = Q2[a][b];
        return k;
    };

    auto coeffs_of_beta = [&](const DVec& beta) {
        DVec c(N, 0.0);
        for (int t = 0; t < p; ++t)
            for (int a = 0; a < N; ++a) c[a] += comp.basis_coeffs[a][t] * beta[t];
        return c;
    };

    // values of pi(k) f at all frames, f given by monomial coefficients
    auto act_values = [&](const DMat& k, const DVec& coeffs) {
        DVec out(S, 0.0);
        DMat kt = dmat_transpose(k);
        for (int s = 0; s < S; ++s) {
            SubspaceFrame rf = rotate_frame(kt, dec.frames[s]);
            DVec vals = dec.model.variable_values(rf.projection());
            double acc = 0;
            for (int a = 0; a < N; ++a)
                if (coeffs[a] != 0.0) acc += coeffs[a] * dec.model.eval_monomial(dec.monomials[a], vals);
            out[s] = acc;
        }
        return out;
    };

    // least-squares component coordinates of a sampled-value vector
    DMat gram = dmat_zero(p, p);
    std::vector<DVec> basis_vals(p);
    for (int t = 0; t < p; ++t) {
        DVec c(N);
        for (int a = 0; a < N; ++a) c[a] = comp.basis_coeffs[a][t];
        basis_vals[t] = dec.eval_at_frames(c);
    }
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) gram[a][b] = dvec_dot(basis_vals[a], basis_vals[b]) / S;
    DMat gramV;
    DVec gram_ev = jacobi_eigensymmetric(gram, gramV);
    auto comp_coords = [&](const DVec& values) {
        DVec rhs(p, 0.0);
        for (int t = 0; t < p; ++t) rhs[t] = dvec_dot(basis_vals[t], values) / S;
        // solve gram * beta = rhs through the eigendecomposition
        DVec beta(p, 0.0);
        for (int t = 0; t < p; ++t) {
            double proj = 0;
            for (int a = 0; a < p; ++a) proj += gramV[a][t] * rhs[a];
            proj /= gram_ev[t];
            for (int a = 0; a < p; ++a) beta[a] += gramV[a][t] * proj;
        }
        return beta;
    };

    // Iterated averaging v <- (v + pi(k) v)/2 with fresh stabilizer samples:
    // the fixed component is preserved exactly, the rest contracts, so the
    // raw norm after many steps tells whether a fixed vector exists at all.
    auto converge = [&](DVec beta) {
        for (int it = 0; it < iterations; ++it) {
            DVec values = act_values(stabilizer_element(), coeffs_of_beta(beta));
            DVec nb = comp_coords(values);
            for (int t = 0; t < p; ++t) beta[t] = 0.5 * (beta[t] + nb[t]);
        }
        return beta;
    };

    DVec beta0(p, 0.0);
    for (int t = 0; t < p; ++t) beta0[t] = rng.normal();
    double n0 = dvec_norm(beta0);
    for (auto& v : beta0) v /= n0;
    DVec beta = converge(beta0);
    if (dvec_norm(beta) < 1e-4)
        throw falsification_error("spherical_vector: no stabilizer-fixed vector found in component " +
                                  comp.label.to_string());
    {
        double nb = dvec_norm(beta);
        for (auto& v : beta) v /= nb;
    }

    // uniqueness: a start orthogonal to the found line must decay to zero
    if (p > 1) {
        DVec beta1(p, 0.0);
        for (int t = 0; t < p; ++t) beta1[t] = rng.normal();
        double d = dvec_dot(beta1, beta);
        for (int t = 0; t < p; ++t) beta1[t] -= d * beta[t];
        double n1 = dvec_norm(beta1);
        if (n1 > 1e-8) {
            for (auto& v : beta1) v /= n1;
            DVec other = converge(beta1);
            if (dvec_norm(other) > 1e-4 &&
                std::fabs(dvec_dot(other, beta)) / dvec_norm(other) < 1.0 - 1e-6)
                throw falsification_error("spherical_vector: fixed subspace is not one-dimensional in " +
                                          comp.label.to_string());
        }
    }

    SphericalVectorResult res;
    res.coeffs = coeffs_of_beta(beta);
    res.residual = 0;
    DVec base_vals = dec.eval_at_frames(res.coeffs);
    for (int trial = 0; trial < 8; ++trial) {
        DVec rot_vals = act_values(stabilizer_element(), res.coeffs);
        for (int s = 0; s < S; ++s)
            res.residual = std::max(res.residual, std::fabs(rot_vals[s] - base_vals[s]));
    }
    if (res.residual > tol)
        throw falsification_error("spherical_vector: invariance residual " +
                                  std::to_string(res.residual) + " exceeds tolerance in " +
                                  comp.label.to_string());
    return res;
}

}  // namespace cosgr
