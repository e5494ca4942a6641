#pragma once

// Exact spectral calculus for the alpha-cosine transform on Gr_i(R^n),
// written in the variable nu = alpha/2.
//
// Conventions used throughout:
//   * cosine_spectrum(sig, m) is the normalized eigenvalue c'(nu) of the
//     2nu-cosine transform on the isotypic component labeled m, with the
//     weight-independent meromorphic prefactor divided out (c'(nu) = 1 at
//     m = 0).  All roots and poles are half-integers.
//   * s_eigenvalue(sig, l, m) is the eigenvalue of the transform's leading
//     Laurent coefficient at nu = l, where the operator-level pole order
//     mu(l) is the closed-form pole_order() below.  A weight whose pole
//     order exceeded mu(l) would contradict the closed form; we assert
//     that never happens.

#include <optional>
#include <stdexcept>
#include <vector>

#include "factored_rational.hpp"
#include "weights.hpp"

namespace cosgr {

// A verification suite found a counterexample to an identity the library
// is built to check.  Distinct from bad input.
class falsification_error : public std::runtime_error {
public:
    explicit falsification_error(const std::string& msg) : std::runtime_error(msg) {}
};

// c'(nu): product over j of the degree-(m_j/2) rising-factorial ratio,
// expanded into linear factors.
inline FactoredRational cosine_spectrum(const Signature& sig, const HighestWeight& m) {
    if (m.rank() != sig.r)
        throw std::invalid_argument("cosine_spectrum: weight rank != signature rank");
    FactoredRational f = FactoredRational::one();
    for (int j = 1; j <= sig.r; ++j) {
        int k = m.parts[j - 1] / 2;
        for (int t = 0; t < k; ++t) {
            // numerator factor (nu + (j+1)/2 - k + t)
            f *= FactoredRational::linear(Rational(k - t) - Rational(j + 1, 2));
            // denominator factor (nu + n/2 - (j-1)/2 + t)
            f *= FactoredRational::linear(Rational(j - 1, 2) - Rational(sig.n, 2) - Rational(t), -1);
        }
    }
    return f;
}

// d(nu) = c'(nu) / c'(nu+1) in closed form.
inline FactoredRational spectrum_step_ratio(const Signature& sig, const HighestWeight& m) {
    if (m.rank() != sig.r)
        throw std::invalid_argument("spectrum_step_ratio: weight rank != signature rank");
    FactoredRational f = FactoredRational::one();
    for (int j = 1; j <= sig.r; ++j) {
        Rational a = Rational(j + 1, 2);            // nu + (j+1)/2
        Rational b = Rational(sig.n, 2) - Rational(j - 1, 2);  // nu + n/2 - (j-1)/2
        Rational half_m = Rational(m.parts[j - 1], 2);
        f *= FactoredRational::linear(half_m - a);
        f *= FactoredRational::linear(-b - half_m);
        f *= FactoredRational::linear(-a, -1);
        f *= FactoredRational::linear(-b, -1);
    }
    return f;
}

// scalar of the pole-free operator D-hat_nu on the component labeled m
inline Rational dhat_eigenvalue(const Signature& sig, const Rational& nu, const HighestWeight& m) {
    if (m.rank() != sig.r)
        throw std::invalid_argument("dhat_eigenvalue: weight rank != signature rank");
    Rational v(1);
    for (int j = 1; j <= sig.r; ++j) {
        Rational half_m = Rational(m.parts[j - 1], 2);
        v *= nu + Rational(j + 1, 2) - half_m;
        v *= nu + Rational(sig.n, 2) - Rational(j - 1, 2) + half_m;
    }
    return v;
}

// prod_j (nu + (j+1)/2)(nu + n/2 - (j-1)/2): the scalar relating the ratio
// operator to its pole-free multiple
inline Rational dhat_prefactor(const Signature& sig, const Rational& nu) {
    Rational v(1);
    for (int j = 1; j <= sig.r; ++j) {
        v *= nu + Rational(j + 1, 2);
        v *= nu + Rational(sig.n, 2) - Rational(j - 1, 2);
    }
    return v;
}

// Operator-level pole order of the normalized transform at nu = l, in
// closed form.  Non-half-integer l never meets a pole.
inline int pole_order(const Signature& sig, const Rational& l) {
    if (!l.is_half_integer()) return 0;
    const int n = sig.n, r = sig.r;
    Rational half_n(n, 2);
    if (l > -half_n + Rational(r - 1, 2)) return 0;
    if (l <= -half_n) {
        bool integral = (l + half_n).is_integer();
        return integral ? (r + 1) / 2 : r / 2;
    }
    // -n/2 < l <= -n/2 + (r-1)/2
    Rational x = Rational(r - 1 - n, 2) - l;
    return static_cast<int>(x.floor().to_ll()) + 1;
}

// Brute-force check of the closed form: max pole order of c'(., m) at l
// over all weights with leading part <= cutoff.
inline int pole_order_oracle(const Signature& sig, const Rational& l, int cutoff) {
    if (cutoff < 0 || cutoff % 2 != 0)
        throw std::invalid_argument("pole_order_oracle: cutoff must be even and >= 0");
    int best = 0;
    for (const auto& m : enumerate_weights(sig.r, cutoff)) {
        int ord = cosine_spectrum(sig, m).order_at(l);
        if (-ord > best) best = -ord;
    }
    return best;
}

// Eigenvalue of the leading Laurent coefficient of the transform at nu = l.
inline Rational s_eigenvalue(const Signature& sig, const Rational& l, const HighestWeight& m) {
    FactoredRational c = cosine_spectrum(sig, m);
    int mu = pole_order(sig, l);
    int ord = c.order_at(l);
    if (-ord > mu)
        throw falsification_error("s_eigenvalue: weight " + m.to_string() +
                                  " exceeds the closed-form pole order at l=" + l.to_string());
    if (-ord < mu) return Rational(0);
    return c.laurent_leading(l);
}

// l admissible for the one-step factorization iff outside [-(r+1)/2, -1]
inline bool step_admissible(int r, const Rational& l) {
    if (!l.is_half_integer()) return true;
    return l < Rational(-(r + 1), 2) || l > Rational(-1);
}

struct StepRelationRow {
    HighestWeight m;
    Rational lhs;       // s_eigenvalue at l
    Rational rhs_core;  // dhat_eigenvalue(l) * s_eigenvalue at l+1
    std::optional<Rational> ratio;
};

struct StepRelationResult {
    bool admissible = false;
    std::optional<Rational> constant;  // set iff admissible
    std::vector<StepRelationRow> rows;
};

// Checks s_eig(l, m) = c * dhat(l, m) * s_eig(l+1, m) across all weights with
// leading part <= cutoff.  For admissible l a single exact constant must fit
// every weight; inside the excluded window only the per-weight table is
// returned.
inline StepRelationResult step_relation(const Signature& sig, const Rational& l, int cutoff) {
    if (cutoff < 2 || cutoff % 2 != 0)
        throw std::invalid_argument("step_relation: cutoff must be even and >= 2");
    StepRelationResult res;
    res.admissible = step_admissible(sig.r, l);
    std::optional<Rational> c;
    for (const auto& m : enumerate_weights(sig.r, cutoff)) {
        StepRelationRow row;
        row.m = m;
        row.lhs = s_eigenvalue(sig, l, m);
        row.rhs_core = dhat_eigenvalue(sig, l, m) * s_eigenvalue(sig, l + Rational(1), m);
        if (!row.rhs_core.is_zero()) row.ratio = row.lhs / row.rhs_core;
        if (res.admissible) {
            if (row.rhs_core.is_zero()) {
                if (!row.lhs.is_zero())
                    throw falsification_error("step_relation: l=" + l.to_string() + " m=" +
                                              m.to_string() + " has zero right side, nonzero left");
            } else if (!c) {
                c = *row.ratio;
            } else if (*c != *row.ratio) {
                throw falsification_error("step_relation: non-constant ratio at l=" + l.to_string() +
                                          " m=" + m.to_string());
            }
        }
        res.rows.push_back(std::move(row));
    }
    if (res.admissible) {
        if (!c) throw falsification_error("step_relation: no weight produced a ratio at l=" + l.to_string());
        res.constant = c;
    }
    return res;
}

struct ChainFactorization {
    Rational base_alpha;
    std::vector<Rational> dhat_params;  // nu-parameters, applied left to right
};

// Expresses the transform at alpha as differential-operator steps composed
// with a transform at base_alpha, stepping alpha -> alpha + 2 while each step
// parameter stays admissible.  Targets strictly inside the integer window
// {-2, ..., -(r-1)} cannot be reached by steps, and alpha = -(r+1) has no
// factorization at all.
inline ChainFactorization chain_factorization(const Signature& sig, const Rational& alpha) {
    const int r = sig.r;
    if (alpha == Rational(-(r + 1)))
        throw std::invalid_argument("chain_factorization: alpha = -(r+1) has no known factorization");

    ChainFactorization out;
    if (alpha > Rational(-1)) {
        out.base_alpha = alpha;
        return out;
    }
    if (alpha == Rational(-1)) {
        out.dhat_params.push_back(Rational(-1, 2));
        out.base_alpha = Rational(1);
        return out;
    }
    if (alpha.is_integer()) {
        long long a = alpha.num().to_ll();
        if (a >= -(r - 1) && a <= -2)
            throw std::invalid_argument("chain_factorization: integer alpha in [-(r-1), -2] is not "
                                        "reachable by steps (Radon-factorization range)");
        if (a == -r) {
            out.base_alpha = alpha;  // endpoint: the Radon-transform value
            return out;
        }
        // below the window: climb by 2 until hitting -r or -(r+1)
        long long base = ((-a) % 2 == r % 2) ? -r : -(r + 1);
        for (Rational cur = alpha; cur < Rational(base); cur += Rational(2))
            out.dhat_params.push_back(cur / Rational(2));
        out.base_alpha = Rational(base);
        return out;
    }
    // non-integer: no step parameter is ever a half-integer, climb above -1
    Rational cur = alpha;
    while (cur <= Rational(-1)) {
        out.dhat_params.push_back(cur / Rational(2));
        cur += Rational(2);
    }
    out.base_alpha = cur;
    return out;
}

// Support classification of the transform's distributional kernel.
enum class SupportStratum {
    Maximal,        // full closure of the generic orbit
    CorankGe,       // pairs with intersection dimension >= k
    Minimal,        // the smallest orbit closure
    NextToMinimal,  // the next orbit up
};

struct SupportResult {
    SupportStratum stratum;
    int corank = 0;  // set for CorankGe
};

inline SupportResult support_stratum(int r, const Rational& alpha) {
    if (r < 1) throw std::invalid_argument("support_stratum: rank must be >= 1");
    if (!alpha.is_integer() || alpha.sign() >= 0) return {SupportStratum::Maximal, 0};
    long long a = alpha.num().to_ll();
    if (a >= -(r - 1)) return {SupportStratum::CorankGe, static_cast<int>(-a)};
    // a <= -r
    if ((-a - r) % 2 == 0) return {SupportStratum::Minimal, 0};
    return {SupportStratum::NextToMinimal, 0};
}

}  // namespace cosgr
