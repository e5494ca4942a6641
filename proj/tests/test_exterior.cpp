#include <doctest.h>

#include <cosgr/exterior.hpp>
#include <cosgr/symmetric.hpp>

#include <random>

using namespace cosgr;

namespace {
ExteriorVector unit(const std::vector<int>& s) {
    ExteriorVector v;
    v.add(s, Rational(1));
    return v;
}
}  // namespace

TEST_CASE("X action on the standard representation") {
    // X_12 e_1 = -e_2, X_12 e_2 = e_1, X_12 e_3 = 0
    auto r1 = act_xij(1, 2, std::vector<int>{1});
    REQUIRE(r1.comps.size() == 1);
    CHECK(r1.comps.at({2}) == Rational(-1));
    auto r2 = act_xij(1, 2, std::vector<int>{2});
    CHECK(r2.comps.at({1}) == Rational(1));
    CHECK(act_xij(1, 2, std::vector<int>{3}).comps.empty());
    CHECK_THROWS_AS(act_xij(2, 2, std::vector<int>{1}), std::invalid_argument);
}

TEST_CASE("derivation extension to wedges") {
    // X_12 (e_1 ^ e_3) = -e_2 ^ e_3
    auto r = act_xij(1, 2, std::vector<int>{1, 3});
    REQUIRE(r.comps.size() == 1);
    CHECK(r.comps.at({2, 3}) == Rational(-1));
    // X_12 (e_1 ^ e_2) = -e_2^e_2 + e_1^e_1 = 0
    CHECK(act_xij(1, 2, std::vector<int>{1, 2}).comps.empty());
    // reordering sign: X_13 (e_1 ^ e_2) = -e_3 ^ e_2 = e_2 ^ e_3... check
    auto r2 = act_xij(1, 3, std::vector<int>{1, 2});
    REQUIRE(r2.comps.size() == 1);
    CHECK(r2.comps.at({2, 3}) == Rational(1));
}

TEST_CASE("matrix form satisfies skewness and bracket relations") {
    WedgeSpace W(4, 2);
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}}) {
        CHECK(xij_matrix(W, i, j) == Rational(-1) * xij_matrix(W, j, i));
    }
    // [X_12, X_23] = X_13 on wedge^2 R^4
    auto a = xij_matrix(W, 1, 2), b = xij_matrix(W, 2, 3);
    CHECK(a * b - b * a == xij_matrix(W, 1, 3));
    // disjoint pairs commute
    auto c = xij_matrix(W, 3, 4);
    CHECK((a * c - c * a).is_zero());
}

TEST_CASE("perfect matchings and signs") {
    auto ms = perfect_matchings({1, 2, 3, 4});
    REQUIRE(ms.size() == 3);
    std::map<std::vector<std::pair<int, int>>, int> got;
    for (const auto& m : ms) got[m.pairs] = m.sign;
    CHECK(got[{{1, 2}, {3, 4}}] == 1);
    CHECK(got[{{1, 3}, {2, 4}}] == -1);
    CHECK(got[{{1, 4}, {2, 3}}] == 1);
    CHECK(perfect_matchings({1, 2, 3, 4, 5, 6}).size() == 15);
    CHECK(perfect_matchings({2, 3, 5, 6, 7, 8}).size() == 15);
}

TEST_CASE("pfaffian on a single pair is X_ij itself") {
    WedgeSpace W(2, 1);
    auto pf = pfaffian_matrix(W, {1, 2});
    CHECK(pf == xij_matrix(W, 1, 2));
    // Pf e_1 = -e_2
    CHECK(pf.at(1, 0) == Rational(-1));
    CHECK_THROWS_AS(pfaffian_matrix(W, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("matching enumeration equals the normalized pair-ordered permutation sum (d <= 2)") {
    // direct definition: (1/k!) sum over all sigma with sigma(2t-1) < sigma(2t)
    auto direct = [](const WedgeSpace& W, const std::vector<int>& I) {
        int k = static_cast<int>(I.size()) / 2;
        std::vector<int> perm = I;
        std::sort(perm.begin(), perm.end());
        RatMatrix acc(W.dim(), W.dim());
        int count = 0;
        do {
            bool ordered = true;
            for (int t = 0; t < k; ++t)
                if (perm[2 * t] > perm[2 * t + 1]) ordered = false;
            if (!ordered) continue;
            ++count;
            int inv = 0;
            std::vector<int> sorted_I = I;
            std::sort(sorted_I.begin(), sorted_I.end());
            // parity of perm relative to sorted_I
            for (std::size_t a = 0; a < perm.size(); ++a)
                for (std::size_t b = a + 1; b < perm.size(); ++b) {
                    // positions of the values in sorted order
                    auto pa = std::find(sorted_I.begin(), sorted_I.end(), perm[a]) - sorted_I.begin();
                    auto pb = std::find(sorted_I.begin(), sorted_I.end(), perm[b]) - sorted_I.begin();
                    if (pa > pb) ++inv;
                }
            std::vector<std::pair<int, int>> word;
            for (int t = 0; t < k; ++t) word.emplace_back(perm[2 * t], perm[2 * t + 1]);
            for (int col = 0; col < W.dim(); ++col) {
                ExteriorVector v;
                v.add(W.basis[col], Rational(1));
                auto r = apply_word(word, v);
                for (const auto& [s, c] : r.comps)
                    acc.at(W.index.at(s), col) += Rational(inv % 2 ? -1 : 1) * c;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(count == 6);  // (2k)!/2^k with k = 2
        return (Rational(1) / factorial(k)) * acc;
    };
    {
        WedgeSpace W(4, 1);
        CHECK(direct(W, {1, 2, 3, 4}) == pfaffian_matrix(W, {1, 2, 3, 4}));
    }
    {
        WedgeSpace W(4, 2);
        CHECK(direct(W, {1, 2, 3, 4}) == pfaffian_matrix(W, {1, 2, 3, 4}));
    }
    {
        WedgeSpace W(5, 2);
        CHECK(direct(W, {1, 3, 4, 5}) == pfaffian_matrix(W, {1, 3, 4, 5}));
    }
}

TEST_CASE("within-summand factor order is immaterial") {
    WedgeSpace W(6, 2);
    for (auto I : std::vector<std::vector<int>>{{1, 2, 3, 4}, {1, 2, 3, 4, 5, 6}, {2, 3, 4, 6}}) {
        CHECK(pfaffian_matrix(W, I) == pfaffian_matrix(W, I, /*reversed=*/true));
    }
}

TEST_CASE("pfaffian highest-wedge action for d = 1..4") {
    for (int d = 1; d <= 4; ++d) {
        WedgeSpace W(2 * d, d);
        std::vector<int> I(2 * d);
        for (int t = 0; t < 2 * d; ++t) I[t] = t + 1;
        auto pf = pfaffian_matrix(W, I);
        // Pf(X) e_1^...^e_d = (-1)^{d + d(d-1)/2} d! e_{d+1}^...^e_{2d}
        std::vector<int> top(d), bot(d);
        for (int t = 0; t < d; ++t) { top[t] = t + 1; bot[t] = d + t + 1; }
        int col = W.index.at(top), row = W.index.at(bot);
        Rational expect = factorial(d);
        if ((d + d * (d - 1) / 2) % 2) expect = -expect;
        for (int rr = 0; rr < W.dim(); ++rr)
            CHECK(pf.at(rr, col) == (rr == row ? expect : Rational(0)));
    }
}

TEST_CASE("hodge star intertwines the full pfaffian on the middle wedge") {
    for (int d = 2; d <= 3; ++d) {
        WedgeSpace W(2 * d, d);
        std::vector<int> I(2 * d);
        for (int t = 0; t < 2 * d; ++t) I[t] = t + 1;
        auto pf = pfaffian_matrix(W, I);
        auto star = hodge_star_matrix(W);  // self-map when k = n/2
        CHECK(pf * star == star * pf);
    }
}

TEST_CASE("V_0 is the identity, V_1 matches the direct quadratic invariant") {
    WedgeSpace W(5, 2);
    CHECK(vd_matrix(W, 0) == RatMatrix::identity(W.dim()));
    CHECK(vd_matrix(W, 1) == casimir_matrix(W));
    // eigenvalue on the standard rep: m(m+n-2) = n-1 at m=1
    WedgeSpace W1(6, 1);
    CHECK(vd_matrix(W1, 1).is_scalar(Rational(5)));
}

TEST_CASE("V_d acts on the middle wedge of R^{2d} as (d!)^2") {
    for (int d = 1; d <= 4; ++d) {
        WedgeSpace W(2 * d, d);
        auto v = vd_matrix(W, d);
        Rational expect = factorial(d) * factorial(d);
        CHECK(v.is_scalar(expect));
        // matches the squared product of the shifted-weight entries
        Rational pr(1);
        for (int t = 1; t <= d; ++t) pr *= Rational(t) * Rational(t);
        CHECK(expect == pr);
    }
}

TEST_CASE("V_d matrices commute pairwise exactly") {
    WedgeSpace W(6, 2);
    auto v1 = vd_matrix(W, 1);
    auto v2 = vd_matrix(W, 2);
    auto v3 = vd_matrix(W, 3);
    CHECK(v1 * v2 == v2 * v1);
    CHECK(v1 * v3 == v3 * v1);
    CHECK(v2 * v3 == v3 * v2);
}

TEST_CASE("sum over index sets is enumeration-order independent") {
    // exact arithmetic: accumulate I-sets in reversed order and compare
    WedgeSpace W(5, 2);
    RatMatrix acc(W.dim(), W.dim());
    std::vector<std::vector<int>> sets;
    std::vector<int> I = {1, 2, 3, 4};
    while (true) {
        sets.push_back(I);
        int pos = 3;
        while (pos >= 0 && I[pos] == 5 - 4 + pos + 1) --pos;
        if (pos < 0) break;
        ++I[pos];
        for (int t = pos + 1; t < 4; ++t) I[t] = I[t - 1] + 1;
    }
    for (auto it = sets.rbegin(); it != sets.rend(); ++it) {
        auto pf = pfaffian_matrix(W, *it);
        acc += pf * pf;
    }
    CHECK(vd_matrix(W, 2) == acc);
}

TEST_CASE("invariance: signed permutations commute exactly") {
    WedgeSpace W(4, 1);
    auto v1 = vd_matrix(W, 1);
    // swap(1,2) with a sign flip on the first coordinate
    auto g = signed_permutation_matrix(W, {2, 1, 3, 4}, {-1, 1, 1, 1});
    CHECK(v1 * g == g * v1);
    WedgeSpace W2(4, 2);
    auto v2 = vd_matrix(W2, 2);
    auto g2 = signed_permutation_matrix(W2, {3, 4, 2, 1}, {1, -1, -1, 1});
    CHECK(v2 * g2 == g2 * v2);
}

TEST_CASE("invariance: random rotations commute to 1e-10") {
    std::mt19937_64 gen(42);
    auto random_rotation = [&](int n) {
        std::vector<std::vector<double>> G(n, std::vector<double>(n, 0.0));
        for (int t = 0; t < n; ++t) G[t][t] = 1.0;
        for (int rep = 0; rep < 3; ++rep) {
            int i = 1 + static_cast<int>(gen() % n);
            int j = 1 + static_cast<int>(gen() % n);
            if (i == j) continue;
            // rational multiple of a quarter turn
            double theta = (static_cast<double>(gen() % 1024) / 1024.0) * 1.5707963267948966;
            G = mat_mul_double(givens_rotation(n, std::min(i, j), std::max(i, j), theta), G);
        }
        return G;
    };
    for (auto [n, k, d] : std::vector<std::tuple<int, int, int>>{{4, 2, 2}, {5, 2, 2}}) {
        WedgeSpace W(n, k);
        auto vd = vd_matrix(W, d).to_double();
        double worst = 0;
        for (int trial = 0; trial < 20; ++trial) {
            auto piG = compound_matrix(W, random_rotation(n));
            worst = std::max(worst, commutator_maxnorm(vd, piG));
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("middle-wedge eigenvalue matches the symmetric-side image") {
    // gamma(V_d) at z = (d, d-1, ..., 1) equals (d!)^2 for n = 2d
    for (int d = 2; d <= 4; ++d) {
        auto g = gamma_Vd(2 * d, d, d);
        std::vector<Rational> z;
        for (int t = d; t >= 1; --t) z.push_back(Rational(t));
        CHECK(g.evaluate(z) == factorial(d) * factorial(d));
    }
}

TEST_CASE("cost ceiling is enforced") {
    WedgeSpace W(8, 4);
    CHECK_THROWS_AS(vd_matrix(WedgeSpace(10, 1), 1), std::invalid_argument);
    CHECK_THROWS_AS(vd_matrix(W, 5), std::invalid_argument);
}
