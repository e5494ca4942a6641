#pragma once

// Grassmannian signatures (n, i) with rank r = min(i, n-i), and the even
// non-increasing integer tuples labeling O(n)-isotypic components of
// L^2(Gr_r(R^n)).

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace cosgr {

struct Signature {
    int n = 0;  // ambient dimension, >= 2
    int i = 0;  // subspace dimension, 1 <= i <= n-1
    int r = 0;  // rank = min(i, n-i)

    Signature() = default;
    Signature(int n_, int i_) : n(n_), i(i_), r(std::min(i_, n_ - i_)) {
        if (n < 2 || i < 1 || i > n - 1)
            throw std::invalid_argument("Signature: need n >= 2 and 1 <= i <= n-1");
    }
};

// Non-increasing tuple of even non-negative integers, one part per rank slot.
struct HighestWeight {
    std::vector<int> parts;

    HighestWeight() = default;
    explicit HighestWeight(std::vector<int> p) : parts(std::move(p)) {
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (parts[j] < 0 || parts[j] % 2 != 0)
                throw std::invalid_argument("HighestWeight: parts must be even and >= 0");
            if (j > 0 && parts[j] > parts[j - 1])
                throw std::invalid_argument("HighestWeight: parts must be non-increasing");
        }
    }

    int rank() const { return static_cast<int>(parts.size()); }
    bool is_zero() const {
        for (int p : parts) if (p != 0) return false;
        return true;
    }
    // true when parts d..r vanish (1-based d)
    bool in_lambda_dr(int d) const {
        for (int j = d - 1; j < rank(); ++j)
            if (parts[j] != 0) return false;
        return true;
    }

    friend bool operator==(const HighestWeight& a, const HighestWeight& b) { return a.parts == b.parts; }
    friend bool operator<(const HighestWeight& a, const HighestWeight& b) { return a.parts < b.parts; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (j) s += ",";
            s += std::to_string(parts[j]);
        }
        return s + ")";
    }
};

// All weights of given rank with leading part <= cutoff, in lexicographic order.
inline std::vector<HighestWeight> enumerate_weights(int rank, int cutoff) {
    if (cutoff < 0 || cutoff % 2 != 0)
        throw std::invalid_argument("enumerate_weights: cutoff must be even and >= 0");
    std::vector<HighestWeight> out;
    std::vector<int> cur(rank, 0);
    std::function<void(int, int)> rec = [&](int slot, int maxv) {
        if (slot == rank) {
            out.push_back(HighestWeight(cur));
            return;
        }
        for (int v = 0; v <= maxv; v += 2) {
            cur[slot] = v;
            rec(slot + 1, v);
        }
    };
    rec(0, cutoff);
    return out;
}

// rho_j = n/2 - j, j = 1..r (Harish-Chandra shift for Gr_r(R^n))
inline std::vector<Rational> rho_vector(int n, int r) {
    std::vector<Rational> rho;
    rho.reserve(r);
    for (int j = 1; j <= r; ++j) rho.push_back(Rational(n, 2) - Rational(j));
    return rho;
}

// shifted weight m + rho
inline std::vector<Rational> mu_tilde(const Signature& sig, const HighestWeight& m) {
    if (m.rank() != sig.r) throw std::invalid_argument("mu_tilde: weight rank mismatch");
    std::vector<Rational> z = rho_vector(sig.n, sig.r);
    for (int j = 0; j < sig.r; ++j) z[j] += Rational(m.parts[j]);
    return z;
}

}  // namespace cosgr
