#pragma once

// Monte-Carlo and quadrature realizations of the integral transforms: the
// alpha-cosine transform on Gr_i(R^n) for Re(alpha) > -1, the Funk-Hecke
// quadrature oracle on spheres, Radon transforms (great-circle averages and
// Grassmannian incidence averages), and the functional cross-validation
// suites tying them to the exact spectral side.
//
// Sampling is chunked: each 65536-sample chunk draws from its own stream
// derived from (seed, chunk index), and chunk results are reduced in index
// order, so estimates are bit-identical for any worker count.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "frames.hpp"
#include "projection_model.hpp"
#include "quadrature.hpp"
#include "spectral.hpp"

namespace cosgr {

struct TransformEstimate {
    double value = 0;
    double stderr_ = 0;
    long long samples = 0;
    std::uint64_t seed = 0;
};

using FrameFunction = std::function<double(const SubspaceFrame&)>;

// evaluate a polynomial in the projector entries as a frame function
inline FrameFunction poly_frame_function(const ProjectionModel& model, MultiPoly poly) {
    return [&model, poly = std::move(poly)](const SubspaceFrame& f) {
        return poly.evaluate_double(model.variable_values(f.projection()));
    };
}

namespace detail {

constexpr long long kChunk = 65536;

struct ChunkStats {
    double sum = 0, sumsq = 0;
    long long count = 0;
};

// deterministic chunked Monte-Carlo mean of `g` over Haar frames
inline TransformEstimate mc_mean(const Signature& sig, const FrameFunction& g, long long samples,
                                 std::uint64_t seed, int workers) {
    if (samples < 2) throw std::invalid_argument("mc_mean: need samples >= 2");
    long long nchunks = (samples + kChunk - 1) / kChunk;
    std::vector<ChunkStats> stats(nchunks);
    auto run_chunk = [&](long long c) {
        Rng rng(derive_stream_seed(seed, static_cast<std::uint64_t>(c)));
        long long count = std::min(kChunk, samples - c * kChunk);
        ChunkStats st;
        st.count = count;
        for (long long t = 0; t < count; ++t) {
            double v = g(sample_frame(sig.n, sig.i, rng));
            st.sum += v;
            st.sumsq += v * v;
        }
        stats[c] = st;
    };
    if (workers <= 1 || nchunks == 1) {
        for (long long c = 0; c < nchunks; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        std::atomic<long long> next{0};
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                for (long long c = next.fetch_add(1); c < nchunks; c = next.fetch_add(1)) run_chunk(c);
            });
        for (auto& th : pool) th.join();
    }
    double sum = 0, sumsq = 0;
    for (const auto& st : stats) {
        sum += st.sum;
        sumsq += st.sumsq;
    }
    double mean = sum / samples;
    double var = std::max(0.0, sumsq / samples - mean * mean);
    TransformEstimate est;
    est.value = mean;
    est.stderr_ = std::sqrt(var / (samples - 1));
    est.samples = samples;
    est.seed = seed;
    return est;
}

}  // namespace detail

// (T_alpha f)(E) = E_F[ |cos(E,F)|^alpha f(F) ] by Monte-Carlo
inline TransformEstimate mc_cosine_transform_at(const Signature& sig, double alpha,
                                                const FrameFunction& f, const SubspaceFrame& E,
                                                long long samples, std::uint64_t seed,
                                                int workers = 1) {
    if (alpha <= -1.0)
        throw std::domain_error("mc_cosine_transform: divergent for alpha <= -1; factor through "
                                "chain_factorization and apply the differential operator instead");
    auto g = [&](const SubspaceFrame& F) {
        return std::pow(cosine(E, F), alpha) * f(F);
    };
    return detail::mc_mean(sig, g, samples, seed, workers);
}

inline std::vector<TransformEstimate> mc_cosine_transform(const Signature& sig, double alpha,
                                                          const FrameFunction& f,
                                                          const std::vector<SubspaceFrame>& points,
                                                          long long samples, std::uint64_t seed,
                                                          int workers = 1) {
    std::vector<TransformEstimate> out;
    for (std::size_t k = 0; k < points.size(); ++k)
        out.push_back(mc_cosine_transform_at(sig, alpha, f, points[k], samples,
                                             derive_stream_seed(seed, 1000003 + k), workers));
    return out;
}

// Funk-Hecke eigenvalue of T_alpha on degree-m spherical harmonics of
// S^{n-1}, by graded Gauss quadrature of |t|^alpha against the zonal
// Gegenbauer polynomial with weight (1 - t^2)^{(n-3)/2}.
inline double funk_hecke_eigenvalue(int n, double alpha, int m) {
    if (n < 3) throw std::invalid_argument("funk_hecke_eigenvalue: n >= 3");
    if (m < 0 || m % 2 != 0) throw std::invalid_argument("funk_hecke_eigenvalue: even m >= 0");
    if (alpha <= -1.0) throw std::domain_error("funk_hecke_eigenvalue: need alpha > -1");
    auto coeffs = zonal_gegenbauer_coefficients(n, m);
    double beta = 0.5 * (n - 3);
    auto integrand = [&](double t) {
        return std::pow(t, alpha) * eval_poly_coeffs(coeffs, t) * std::pow(1.0 - t * t, beta);
    };
    auto weight_only = [&](double t) { return std::pow(1.0 - t * t, beta); };
    // even integrands: integrate on [0, 1]; t = 0 is singular for fractional
    // alpha, t = 1 for odd n... for half-integer weights (even n)
    double num = graded_gauss_integrate(integrand, 0.0, 1.0, true, true);
    double den = graded_gauss_integrate(weight_only, 0.0, 1.0, false, true);
    return num / den;
}

// average of f over the great circle orthogonal to `pole` (f takes a unit
// vector; trapezoid is exact for trigonometric polynomials below the order)
inline double radon_sphere(const std::function<double(const DVec&)>& f, const DVec& pole,
                           int order = 256) {
    int n = static_cast<int>(pole.size());
    if (n != 3) throw std::invalid_argument("radon_sphere: pole must be in R^3");
    // orthonormal basis of pole^perp
    std::vector<DVec> cols = {pole};
    for (int e = 0; e < 3 && cols.size() < 3; ++e) {
        DVec cand(3, 0.0);
        cand[e] = 1.0;
        DVec w = cand;
        for (const auto& c : cols) {
            double proj = dvec_dot(c, w);
            for (int t = 0; t < 3; ++t) w[t] -= proj * c[t];
        }
        if (dvec_norm(w) > 1e-8) cols.push_back(cand);
    }
    orthonormalize_columns(cols);
    double acc = 0;
    for (int k = 0; k < order; ++k) {
        double th = 2.0 * 3.14159265358979323846 * k / order;
        DVec y(3);
        for (int t = 0; t < 3; ++t) y[t] = std::cos(th) * cols[1][t] + std::sin(th) * cols[2][t];
        acc += f(y);
    }
    return acc / order;
}

// Radon transform between Grassmannians: for i < j average f over
// Gr_i(span F), for i > j average over the i-planes containing span F.
inline TransformEstimate radon_grassmann(int n, int i, int j, const FrameFunction& f,
                                         const SubspaceFrame& F, long long samples,
                                         std::uint64_t seed) {
    if (i == j) throw std::invalid_argument("radon_grassmann: need i != j");
    if (F.i != j || F.n != n) throw std::invalid_argument("radon_grassmann: F must be a j-frame");
    Rng rng(derive_stream_seed(seed, 7));
    SubspaceFrame comp_cache;
    if (i > j) comp_cache = F.complement();
    double sum = 0, sumsq = 0;
    for (long long t = 0; t < samples; ++t) {
        SubspaceFrame E(n, i);
        if (i < j) {
            // Haar i-frame inside span F
            SubspaceFrame inner = sample_frame(j, i, rng);
            for (int c = 0; c < i; ++c)
                for (int a = 0; a < n; ++a) {
                    double acc = 0;
                    for (int b = 0; b < j; ++b) acc += F.cols[b][a] * inner.cols[c][b];
                    E.cols[c][a] = acc;
                }
        } else {
            // complete F with a Haar (i-j)-frame of the complement
            const SubspaceFrame& comp = comp_cache;
            SubspaceFrame extra = sample_frame(n - j, i - j, rng);
            for (int c = 0; c < j; ++c) E.cols[c] = F.cols[c];
            for (int c = 0; c < i - j; ++c)
                for (int a = 0; a < n; ++a) {
                    double acc = 0;
                    for (int b = 0; b < n - j; ++b) acc += comp.cols[b][a] * extra.cols[c][b];
                    E.cols[j + c][a] = acc;
                }
        }
        double v = f(E);
        sum += v;
        sumsq += v * v;
    }
    TransformEstimate est;
    est.value = sum / samples;
    est.stderr_ = samples > 1
                      ? std::sqrt(std::max(0.0, sumsq / samples - est.value * est.value) / (samples - 1))
                      : 0.0;
    est.samples = samples;
    est.seed = seed;
    return est;
}

// D-hat_nu applied exactly to a polynomial on the Grassmannian
inline MultiPoly apply_dhat(const ProjectionModel& model, const Signature& sig, const Rational& nu,
                            const MultiPoly& f) {
    auto cs = dhat_coefficients(sig.n, sig.r);
    MultiPoly acc(model.nvars());
    for (int k = 0; k <= sig.r; ++k) {
        Rational ck = cs[k].evaluate({nu});
        if (ck.is_zero()) continue;
        acc += ck * model.apply_vd(k, f);
    }
    return Rational(-1, 4).pow(sig.r) * acc;
}

struct RecursionFunctionalPoint {
    TransformEstimate lower;   // T_{2nu} f at the eval point
    TransformEstimate higher;  // T_{2nu+2} (D-hat_nu f) at the eval point
    double ratio = 0;
    double ratio_stderr = 0;
    bool usable = false;
};

struct RecursionFunctionalResult {
    std::vector<RecursionFunctionalPoint> points;
    double fitted_constant = 0;
    bool pass = false;
    std::string detail;
};

// One-step factorization checked on functions: the pointwise ratio of
// MC(T_{2nu} f) to MC(T_{2nu+2} D-hat_nu f) must be constant across eval
// points within 3 combined standard errors.  The differential operator is
// applied exactly; commutation moves it through the convergent transform.
inline RecursionFunctionalResult verify_recursion_functional(
    const Signature& sig, const Rational& nu, const MultiPoly& f, int eval_points,
    long long samples, std::uint64_t seed, int workers = 1) {
    double nud = nu.to_double();
    if (2 * nud <= -1.0 || 2 * nud + 2 <= -1.0)
        throw std::domain_error("verify_recursion_functional: both transforms must converge");
    ProjectionModel model(sig.n);
    MultiPoly g = apply_dhat(model, sig, nu, f);
    FrameFunction ff = poly_frame_function(model, f);
    FrameFunction gf = poly_frame_function(model, g);

    RecursionFunctionalResult res;
    auto evals = sample_uniform(sig, eval_points, derive_stream_seed(seed, 555));
    std::vector<double> ratios, weights;
    for (int k = 0; k < eval_points; ++k) {
        RecursionFunctionalPoint pt;
        pt.lower = mc_cosine_transform_at(sig, 2 * nud, ff, evals[k], samples,
                                          derive_stream_seed(seed, 2 * k), workers);
        pt.higher = mc_cosine_transform_at(sig, 2 * nud + 2, gf, evals[k], samples,
                                           derive_stream_seed(seed, 2 * k + 1), workers);
        if (std::fabs(pt.higher.value) > 5 * pt.higher.stderr_) {
            pt.usable = true;
            pt.ratio = pt.lower.value / pt.higher.value;
            double rel = std::sqrt(std::pow(pt.lower.stderr_ / pt.lower.value, 2) +
                                   std::pow(pt.higher.stderr_ / pt.higher.value, 2));
            pt.ratio_stderr = std::fabs(pt.ratio) * rel;
            ratios.push_back(pt.ratio);
            weights.push_back(1.0 / (pt.ratio_stderr * pt.ratio_stderr));
        }
        res.points.push_back(pt);
    }
    if (ratios.size() < 2) {
        res.detail = "fewer than two usable eval points";
        return res;
    }
    double wsum = 0, acc = 0;
    for (std::size_t t = 0; t < ratios.size(); ++t) {
        acc += weights[t] * ratios[t];
        wsum += weights[t];
    }
    res.fitted_constant = acc / wsum;
    res.pass = true;
    for (const auto& pt : res.points) {
        if (!pt.usable) continue;
        if (std::fabs(pt.ratio - res.fitted_constant) > 3 * pt.ratio_stderr) {
            res.pass = false;
            res.detail = "ratio deviates beyond 3 stderr";
        }
    }
    return res;
}

struct RadonSphereResult {
    std::vector<double> per_degree_ratio;  // should equal P_m(0), m = 0, 2, 4
    double pointwise_spread = 0;           // relative spread of the pointwise ratios
    bool pass = false;
};

// Sphere factorization at the Radon point: D-hat_{-1/2} T_1 is proportional
// to the great-circle Radon transform.  Per-degree eigenvalue ratios are
// checked against P_m(0) via the quadrature path; the pointwise check
// applies the operator exactly to a polynomial and integrates T_1 by
// product quadrature.
inline RadonSphereResult verify_radon_sphere(double degree_tol = 1e-3, double spread_tol = 0.02) {
    const int n = 3;
    Signature sig(n, 1);
    RadonSphereResult res;

    // eigenvalue path
    Rational dh0 = dhat_eigenvalue(sig, Rational(-1, 2), HighestWeight({0}));
    double lam0 = funk_hecke_eigenvalue(n, 1.0, 0);
    res.pass = true;
    for (int m = 0; m <= 4; m += 2) {
        Rational dhm = dhat_eigenvalue(sig, Rational(-1, 2), HighestWeight({m}));
        double lamm = funk_hecke_eigenvalue(n, 1.0, m);
        double ratio = (dhm.to_double() * lamm) / (dh0.to_double() * lam0);
        res.per_degree_ratio.push_back(ratio);
        if (std::fabs(ratio - legendre_at_zero(m).to_double()) > degree_tol) res.pass = false;
    }

    // pointwise path with a mixed zonal polynomial about the north pole
    ProjectionModel model(n);
    auto zonal_poly = [&](int m) {
        // P_m(<e_1, x>) as a polynomial in q_11 = x_1^2
        auto coeffs = zonal_gegenbauer_coefficients(3, m);
        MultiPoly acc(model.nvars());
        MultiPoly q11 = model.variable(1, 1);
        for (std::size_t k = 0; k < coeffs.size(); k += 2) {
            if (coeffs[k].is_zero()) continue;
            acc += coeffs[k] * q11.pow(static_cast<int>(k) / 2);
        }
        return acc;
    };
    MultiPoly f = MultiPoly::constant(model.nvars(), Rational(1)) + zonal_poly(2) +
                  Rational(1, 2) * zonal_poly(4);
    MultiPoly g = apply_dhat(model, sig, Rational(-1, 2), f);

    auto eval_on_sphere = [&](const MultiPoly& poly, const DVec& x) {
        SubspaceFrame fr(3, 1);
        fr.cols[0] = x;
        return poly.evaluate_double(model.variable_values(fr.projection()));
    };
    // T_1 g by product quadrature about x
    GaussRule theta_rule = gauss_legendre(48);
    auto t1_at = [&](const DVec& x) {
        std::vector<DVec> cols = {x};
        for (int e = 0; e < 3 && cols.size() < 3; ++e) {
            DVec cand(3, 0.0);
            cand[e] = 1.0;
            DVec w = cand;
            for (const auto& c : cols) {
                double proj = dvec_dot(c, w);
                for (int t = 0; t < 3; ++t) w[t] -= proj * c[t];
            }
            if (dvec_norm(w) > 1e-8) cols.push_back(cand);
        }
        orthonormalize_columns(cols);
        const int nphi = 64;
        auto theta_int = [&](double th) {
            double acc = 0;
            for (int kphi = 0; kphi < nphi; ++kphi) {
                double ph = 2.0 * 3.14159265358979323846 * kphi / nphi;
                DVec y(3);
                for (int t = 0; t < 3; ++t)
                    y[t] = std::sin(th) * (std::cos(ph) * cols[1][t] + std::sin(ph) * cols[2][t]) +
                           std::cos(th) * x[t];
                acc += eval_on_sphere(g, y);
            }
            return (acc / nphi) * std::fabs(std::cos(th)) * std::sin(th) / 2.0;
        };
        // |cos| kinks at pi/2: integrate the halves separately
        double half = 3.14159265358979323846 / 2;
        return gauss_integrate(theta_int, 0, half, theta_rule) +
               gauss_integrate(theta_int, half, 2 * half, theta_rule);
    };

    Rng rng(derive_stream_seed(99, 3));
    std::vector<double> ratios;
    for (int k = 0; k < 6; ++k) {
        SubspaceFrame x = sample_frame(3, 1, rng);
        double lhs = t1_at(x.cols[0]);
        double rhs = radon_sphere([&](const DVec& y) { return eval_on_sphere(f, y); }, x.cols[0]);
        ratios.push_back(lhs / rhs);
    }
    double lo = ratios[0], hi = ratios[0];
    for (double r : ratios) {
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    res.pointwise_spread = (hi - lo) / std::fabs(0.5 * (hi + lo));
    if (res.pointwise_spread > spread_tol) res.pass = false;
    return res;
}

struct RadonCompositionResult {
    std::vector<double> route_a;  // composition via Gr_j
    std::vector<double> route_b;  // composition via Gr_{n-j}
    std::vector<double> chain;    // transform value at the complement, via the chain
    double spread_ab = 0, spread_ac = 0;
    bool pass = false;
};

// Composition of two Radon transforms on Gr_2(R^5) against the alpha = -1
// transform reached through the chain (the slow nested-MC suite).
inline RadonCompositionResult verify_radon_composition(long long outer_samples,
                                                       long long inner_samples,
                                                       long long chain_samples, std::uint64_t seed,
                                                       int workers = 1) {
    const int n = 5, i = 2, j = 1;
    Signature sig(n, i);
    ProjectionModel model(n);
    // a generic low-degree polynomial with a positive bias
    MultiPoly f = MultiPoly::constant(model.nvars(), Rational(2)) + model.variable(1, 1) +
                  Rational(1, 2) * model.variable(2, 3) - Rational(1, 3) * model.variable(4, 4);
    FrameFunction ff = poly_frame_function(model, f);
    MultiPoly g = apply_dhat(model, sig, Rational(-1, 2), f);
    FrameFunction gf = poly_frame_function(model, g);

    RadonCompositionResult res;
    auto eval_frames = sample_uniform(Signature(n, n - i), 4, derive_stream_seed(seed, 4242));
    for (std::size_t k = 0; k < eval_frames.size(); ++k) {
        const SubspaceFrame& F3 = eval_frames[k];
        // route (a): lines L inside F3, then 2-planes containing L
        {
            Rng rng(derive_stream_seed(seed, 300 + k));
            double acc = 0;
            for (long long t = 0; t < outer_samples; ++t) {
                SubspaceFrame inner = sample_frame(n - i, j, rng);  // line in F3 coords
                SubspaceFrame L(n, j);
                for (int a = 0; a < n; ++a) {
                    double s = 0;
                    for (int b = 0; b < n - i; ++b) s += F3.cols[b][a] * inner.cols[0][b];
                    L.cols[0][a] = s;
                }
                acc += radon_grassmann(n, i, j, ff, L, inner_samples,
                                       derive_stream_seed(derive_stream_seed(seed, 7000 + k), t))
                           .value;
            }
            res.route_a.push_back(acc / outer_samples);
        }
        // route (b): 4-planes W containing F3, then 2-planes inside W
        {
            Rng rng(derive_stream_seed(seed, 400 + k));
            double acc = 0;
            for (long long t = 0; t < outer_samples; ++t) {
                SubspaceFrame comp = F3.complement();
                SubspaceFrame extra = sample_frame(i, 1, rng);  // line in the 2-dim complement
                SubspaceFrame W(n, n - j);
                for (int c = 0; c < n - i; ++c) W.cols[c] = F3.cols[c];
                for (int a = 0; a < n; ++a) {
                    double s = 0;
                    for (int b = 0; b < i; ++b) s += comp.cols[b][a] * extra.cols[0][b];
                    W.cols[n - i][a] = s;
                }
                acc += radon_grassmann(n, i, n - j, ff, W, inner_samples,
                                       derive_stream_seed(derive_stream_seed(seed, 8000 + k), t))
                           .value;
            }
            res.route_b.push_back(acc / outer_samples);
        }
        // chain: S_{-1} = const * D-hat_{-1/2} T_1, evaluated at the complement
        {
            SubspaceFrame perp = F3.complement();
            auto est = mc_cosine_transform_at(sig, 1.0, gf, perp, chain_samples,
                                              derive_stream_seed(seed, 500 + k), workers);
            res.chain.push_back(est.value);
        }
    }
    auto spread_of = [&](const std::vector<double>& x, const std::vector<double>& y) {
        std::vector<double> r;
        for (std::size_t t = 0; t < x.size(); ++t) r.push_back(x[t] / y[t]);
        double lo = r[0], hi = r[0];
        for (double v : r) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return (hi - lo) / std::fabs(0.5 * (hi + lo));
    };
    res.spread_ab = spread_of(res.route_a, res.route_b);
    res.spread_ac = spread_of(res.route_a, res.chain);
    res.pass = res.spread_ab < 0.05 && res.spread_ac < 0.05;
    return res;
}

}  // namespace cosgr
