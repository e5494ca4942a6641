#pragma once

// Orthonormal frames representing points of Gr_i(R^n), Haar sampling, and
// the measure-distortion cosine |cos(E, F)| = |det(E^T F)|.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "random.hpp"
#include "weights.hpp"

namespace cosgr {

struct SubspaceFrame {
    int n = 0, i = 0;
    std::uint64_t seed = 0;  // generating seed record, when Haar-sampled
    std::vector<DVec> cols;  // i orthonormal columns of length n

    SubspaceFrame() = default;
    SubspaceFrame(int n_, int i_) : n(n_), i(i_), cols(i_, DVec(n_, 0.0)) {}

    // coordinate frame spanned by e_{axes[0]}, ... (1-based axes)
    static SubspaceFrame coordinate(int n, const std::vector<int>& axes) {
        SubspaceFrame f(n, static_cast<int>(axes.size()));
        for (std::size_t j = 0; j < axes.size(); ++j) f.cols[j][axes[j] - 1] = 1.0;
        return f;
    }

    double orthonormality_defect() const {
        double worst = 0;
        for (int a = 0; a < i; ++a)
            for (int b = 0; b < i; ++b) {
                double d = dvec_dot(cols[a], cols[b]) - (a == b ? 1.0 : 0.0);
                worst = std::max(worst, std::fabs(d));
            }
        return worst;
    }

    // projection matrix F F^T onto the spanned subspace
    DMat projection() const {
        DMat p = dmat_zero(n, n);
        for (int c = 0; c < i; ++c)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) p[a][b] += cols[c][a] * cols[c][b];
        return p;
    }

    // frame of the orthogonal complement
    SubspaceFrame complement() const {
        std::vector<DVec> all = cols;
        // extend with coordinate vectors, then orthonormalize and keep the tail
        for (int e = 0; e < n && static_cast<int>(all.size()) < n; ++e) {
            DVec cand(n, 0.0);
            cand[e] = 1.0;
            DVec w = cand;
            for (const auto& c : all) {
                double proj = dvec_dot(c, w);
                for (int t = 0; t < n; ++t) w[t] -= proj * c[t];
            }
            if (dvec_norm(w) > 1e-8) all.push_back(cand);
        }
        orthonormalize_columns(all);
        SubspaceFrame out(n, n - i);
        for (int j = 0; j < n - i; ++j) out.cols[j] = all[i + j];
        return out;
    }
};

inline SubspaceFrame sample_frame(int n, int i, Rng& rng) {
    SubspaceFrame f(n, i);
    for (int c = 0; c < i; ++c)
        for (int a = 0; a < n; ++a) f.cols[c][a] = rng.normal();
    orthonormalize_columns(f.cols);
    return f;
}

inline std::vector<SubspaceFrame> sample_uniform(const Signature& sig, int count,
                                                 std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sample_uniform: count >= 1");
    Rng rng(derive_stream_seed(seed, 0));
    std::vector<SubspaceFrame> out;
    out.reserve(count);
    for (int t = 0; t < count; ++t) {
        out.push_back(sample_frame(sig.n, sig.i, rng));
        out.back().seed = seed;
    }
    return out;
}

// |cos(E, F)| = |det(E^T F)| for equal-dimension orthonormal frames
inline double cosine(const SubspaceFrame& E, const SubspaceFrame& F) {
    if (E.i != F.i || E.n != F.n)
        throw std::invalid_argument("cosine: frames must have equal dimensions");
    DMat g = dmat_zero(E.i, E.i);
    for (int a = 0; a < E.i; ++a)
        for (int b = 0; b < E.i; ++b) g[a][b] = dvec_dot(E.cols[a], F.cols[b]);
    double d = std::fabs(small_det(g));
    return d > 1.0 ? 1.0 : d;  // clip roundoff overshoot
}

// apply an n x n orthogonal matrix to a frame
inline SubspaceFrame rotate_frame(const DMat& g, const SubspaceFrame& f) {
    SubspaceFrame out(f.n, f.i);
    for (int c = 0; c < f.i; ++c) out.cols[c] = dmat_apply(g, f.cols[c]);
    return out;
}

}  // namespace cosgr
