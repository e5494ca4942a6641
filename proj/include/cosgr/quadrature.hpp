#pragma once

// One-dimensional quadrature and the classical orthogonal polynomials used
// by the sphere-side oracles: Gauss-Legendre nodes, composite rules on
// dyadically graded panels (absorbing endpoint singularities like |t|^alpha
// and half-integer powers of 1 - t^2), and Gegenbauer/Legendre values.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace cosgr {

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Newton iteration on the Legendre polynomial
inline GaussRule gauss_legendre(int npts) {
    GaussRule rule;
    rule.nodes.resize(npts);
    rule.weights.resize(npts);
    for (int k = 0; k < npts; ++k) {
        double x = std::cos(3.14159265358979323846 * (k + 0.75) / (npts + 0.5));
        double dp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int m = 2; m <= npts; ++m) {
                double p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
                p0 = p1;
                p1 = p2;
            }
            dp = npts * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        rule.nodes[k] = x;
        rule.weights[k] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

inline double gauss_integrate(const std::function<double(double)>& f, double a, double b,
                              const GaussRule& rule) {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k)
        acc += rule.weights[k] * f(mid + half * rule.nodes[k]);
    return acc * half;
}

// Composite Gauss on [a, b] with dyadic grading towards singular endpoints.
// With ~40 levels the unresolved endpoint mass is far below 1e-12 for any
// integrable algebraic singularity.
inline double graded_gauss_integrate(const std::function<double(double)>& f, double a, double b,
                                     bool singular_at_a, bool singular_at_b, int levels = 48,
                                     int npts = 24) {
    GaussRule rule = gauss_legendre(npts);
    std::vector<double> cuts;
    cuts.push_back(a);
    if (singular_at_a && singular_at_b) {
        double mid = 0.5 * (a + b);
        for (int l = levels; l >= 1; --l) cuts.push_back(a + (mid - a) * std::pow(0.5, l));
        cuts.push_back(mid);
        for (int l = 1; l <= levels; ++l) cuts.push_back(b - (b - mid) * std::pow(0.5, l));
    } else if (singular_at_a) {
        for (int l = levels; l >= 1; --l) cuts.push_back(a + (b - a) * std::pow(0.5, l));
    } else if (singular_at_b) {
        for (int l = levels; l >= 1; --l) cuts.push_back(b - (b - a) * std::pow(0.5, l));
        std::sort(cuts.begin() + 1, cuts.end());
    }
    cuts.push_back(b);
    double acc = 0;
    double width_floor = 1e-14 * (b - a);
    for (std::size_t t = 0; t + 1 < cuts.size(); ++t) {
        if (cuts[t + 1] - cuts[t] <= width_floor) continue;
        acc += gauss_integrate(f, cuts[t], cuts[t + 1], rule);
    }
    return acc;
}

// exact coefficients of the Gegenbauer polynomial C_m^lambda normalized so
// that its value at 1 equals 1 (the zonal normalization for S^{n-1} uses
// lambda = (n-2)/2); for n = 3 these are the Legendre polynomials
inline std::vector<Rational> zonal_gegenbauer_coefficients(int n, int m) {
    if (n < 3) throw std::invalid_argument("zonal_gegenbauer_coefficients: n >= 3");
    Rational lambda = Rational(n - 2, 2);
    // three-term recurrence on coefficient vectors
    std::vector<Rational> p0 = {Rational(1)};                 // C_0 = 1
    if (m == 0) return p0;
    std::vector<Rational> p1 = {Rational(0), Rational(2) * lambda};  // C_1 = 2 lambda t
    for (int k = 2; k <= m; ++k) {
        std::vector<Rational> p2(k + 1, Rational(0));
        Rational ak = Rational(2) * (Rational(k - 1) + lambda) / Rational(k);
        Rational bk = (Rational(k - 2) + Rational(2) * lambda) / Rational(k);
        for (std::size_t t = 0; t < p1.size(); ++t) p2[t + 1] += ak * p1[t];
        for (std::size_t t = 0; t < p0.size(); ++t) p2[t] -= bk * p0[t];
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    Rational at1(0);
    for (const auto& c : p1) at1 += c;
    for (auto& c : p1) c /= at1;
    return p1;
}

inline double eval_poly_coeffs(const std::vector<Rational>& coeffs, double t) {
    double acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k].to_double();
    return acc;
}

// P_m(0) = (-1)^{m/2} (m-1)!!/m!! for even m
inline Rational legendre_at_zero(int m) {
    if (m % 2 != 0 || m < 0) throw std::invalid_argument("legendre_at_zero: even m >= 0");
    Rational v(1);
    for (int k = m; k >= 2; k -= 2) v *= Rational(k - 1, k);
    return (m / 2) % 2 ? -v : v;
}

}  // namespace cosgr
