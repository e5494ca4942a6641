#include <doctest.h>

#include <cosgr/symmetric.hpp>

using namespace cosgr;

namespace {
std::vector<int> all_vars(int r) {
    std::vector<int> v(r);
    for (int i = 0; i < r; ++i) v[i] = i;
    return v;
}
}  // namespace

TEST_CASE("elementary and complete symmetric polynomials") {
    CHECK(elem_sym(3, 0, all_vars(3)) == MultiPoly::constant(3, Rational(1)));
    CHECK(comp_sym(2, 0, all_vars(2)) == MultiPoly::constant(2, Rational(1)));
    // e_2(x1,x2,x3) = x1x2 + x1x3 + x2x3
    auto x = [&](int i) { return MultiPoly::variable(3, i); };
    CHECK(elem_sym(3, 2, all_vars(3)) == x(0) * x(1) + x(0) * x(2) + x(1) * x(2));
    // h_2(x1,x2) = x1^2 + x1x2 + x2^2
    auto y = [&](int i) { return MultiPoly::variable(2, i); };
    CHECK(comp_sym(2, 2, all_vars(2)) == y(0) * y(0) + y(0) * y(1) + y(1) * y(1));
    // e_k vanishes past the variable count, h_k does not
    CHECK(elem_sym(2, 3, all_vars(2)).is_zero());
    CHECK(!comp_sym(2, 3, all_vars(2)).is_zero());
    // numeric evaluators agree with the symbolic ones
    std::vector<Rational> pt = {Rational(2), Rational(-1, 2), Rational(3)};
    for (int k = 0; k <= 4; ++k) {
        CHECK(elem_sym(3, k, all_vars(3)).evaluate(pt) == elem_sym_at(k, pt));
        CHECK(comp_sym(3, k, all_vars(3)).evaluate(pt) == comp_sym_at(k, pt));
    }
}

TEST_CASE("generating-function identity for e and h") {
    // sum_k (-1)^k h_k e_{m-k} = 0 for m >= 1 (coefficients of 1 = E(t)H(-t))
    const int r = 4;
    for (int m = 1; m <= 5; ++m) {
        MultiPoly acc(r);
        for (int k = 0; k <= m; ++k) {
            MultiPoly t = comp_sym(r, k, all_vars(r)) * elem_sym(r, m - k, all_vars(r));
            acc += (k % 2 ? Rational(-1) : Rational(1)) * t;
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("ab matrices: r=1 explicit and mutual inverses through r=6") {
    auto m1 = ab_matrices(1);
    auto x1 = MultiPoly::variable(1, 0);
    CHECK(m1.a[0][0] == MultiPoly::constant(1, Rational(1)));
    CHECK(m1.a[0][1] == x1);
    CHECK(m1.b[0][1] == -x1);
    for (int r = 1; r <= 6; ++r) {
        auto m = ab_matrices(r);
        CHECK(poly_mat_is_identity(poly_mat_mul(m.a, m.b)));
        CHECK(poly_mat_is_identity(poly_mat_mul(m.b, m.a)));
    }
}

TEST_CASE("triangular convolution identity as stated") {
    // sum_{j=i..k} (-1)^{k-j} h_{k-j}(x_k..x_r) e_{j-i}(x_{i+1}..x_r) = delta_ik
    for (int r = 1; r <= 6; ++r) {
        auto vars_from = [&](int from) {
            std::vector<int> v;
            for (int t = from; t <= r; ++t) v.push_back(t - 1);
            return v;
        };
        for (int i = 0; i <= r; ++i)
            for (int k = i; k <= r; ++k) {
                MultiPoly acc(r);
                for (int j = i; j <= k; ++j) {
                    MultiPoly t = comp_sym(r, k - j, vars_from(k)) * elem_sym(r, j - i, vars_from(i + 1));
                    acc += ((k - j) % 2 ? Rational(-1) : Rational(1)) * t;
                }
                if (i == k) CHECK(acc == MultiPoly::constant(r, Rational(1)));
                else CHECK(acc.is_zero());
            }
    }
}

TEST_CASE("gamma_Vd closed forms") {
    // r=1: z^2 - (n/2-1)^2
    for (int n : {3, 4, 5}) {
        auto g = gamma_Vd(n, 1, 1);
        auto z = MultiPoly::variable(1, 0);
        Rational rho1 = Rational(n, 2) - Rational(1);
        CHECK(g == z * z - MultiPoly::constant(1, rho1 * rho1));
    }
    // middle case rho_r = 0: gamma(V_d) = z_1^2...z_d^2
    {
        auto g = gamma_Vd(4, 2, 2);
        auto z0 = MultiPoly::variable(2, 0), z1 = MultiPoly::variable(2, 1);
        CHECK(g == z0 * z0 * z1 * z1);
    }
    CHECK_THROWS_AS(gamma_Vd(4, 2, 3), std::invalid_argument);
    // invariance under signed permutations of z
    auto g = gamma_Vd(7, 3, 2);
    CHECK(g.relabel_signed({2, 0, 1}, {-1, 1, -1}) == g);
    CHECK(g.relabel_signed({1, 0, 2}, {1, -1, 1}) == g);
    CHECK(g.total_degree() == 4);
}

TEST_CASE("gamma_Vd vanishes on the degenerate weight family") {
    // hc value is zero whenever parts d..r vanish
    for (auto [n, r] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 3}, {7, 3}}) {
        Signature sig(n, r);
        for (int d = 1; d <= r; ++d) {
            auto g = gamma_Vd(n, r, d);
            for (const auto& m : enumerate_weights(r, 10)) {
                if (!m.in_lambda_dr(d)) continue;
                CHECK(hc_eigenvalue(g, sig, m).is_zero());
            }
        }
    }
}

TEST_CASE("series route gives the same vanishing polynomial (proportionality constant 1)") {
    // coefficient of t^d in prod_{l=d..r}(1+t rho_l^2)^{-1} prod_{l=1..r}(1+t z_l^2),
    // computed by formal power series inversion
    for (auto [n, r, d] : std::vector<std::tuple<int, int, int>>{
             {4, 2, 1}, {4, 2, 2}, {5, 2, 2}, {6, 3, 2}, {6, 3, 3}, {7, 3, 3}}) {
        auto rho = rho_vector(n, r);
        // invert prod(1+t*rho_l^2) as a series: coefficients i_k with
        // sum_{j<=k} p_j i_{k-j} = delta_k, p_j = e_j(rho_d^2..rho_r^2)
        std::vector<Rational> rho_sq;
        for (int l = d; l <= r; ++l) rho_sq.push_back(rho[l - 1] * rho[l - 1]);
        std::vector<Rational> inv(d + 1, Rational(0));
        inv[0] = Rational(1);
        for (int k = 1; k <= d; ++k) {
            Rational s(0);
            for (int j = 1; j <= k; ++j) s += elem_sym_at(j, rho_sq) * inv[k - j];
            inv[k] = -s;
        }
        MultiPoly vd(r);
        for (int k = 0; k <= d; ++k) vd += inv[d - k] * elem_sym_squares(r, k);
        CHECK(vd == gamma_Vd(n, r, d));
    }
}

TEST_CASE("E_d eigenvalue identity") {
    // rearranged r=1 case: gamma(V_1) + rho_1^2 = z^2
    {
        auto g = gamma_Vd(3, 1, 1);
        auto z = MultiPoly::variable(1, 0);
        CHECK(g + MultiPoly::constant(1, Rational(1, 4)) == z * z);
    }
    check_Ed_identity(5, 2, 1);
    check_Ed_identity(6, 3, 3);
    for (auto [n, r] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {7, 3}, {8, 4}})
        for (int d = 1; d <= r; ++d) check_Ed_identity(n, r, d);
}

TEST_CASE("dhat coefficient polynomials") {
    auto cs1 = dhat_coefficients(3, 1);
    REQUIRE(cs1.size() == 2);
    CHECK(cs1[1] == MultiPoly::constant(1, Rational(1)));
    {
        // c_0 = -(2nu+2)(2nu+3)
        auto nu = MultiPoly::variable(1, 0);
        auto expect = -(Rational(2) * nu + MultiPoly::constant(1, Rational(2))) *
                      (Rational(2) * nu + MultiPoly::constant(1, Rational(3)));
        CHECK(cs1[0] == expect);
    }
    {
        auto cs = dhat_coefficients(5, 2);
        auto nu = MultiPoly::variable(1, 0);
        auto expect = -(Rational(2) * nu + MultiPoly::constant(1, Rational(3))) *
                      (Rational(2) * nu + MultiPoly::constant(1, Rational(4)));
        CHECK(cs[1] == expect);
        CHECK(cs[2] == MultiPoly::constant(1, Rational(1)));
        // degree drops by 2 per index
        CHECK(cs[0].total_degree() == 4);
    }
}

TEST_CASE("dhat identity: exact polynomial equality and eigenvalue consistency") {
    check_dhat_identity(3, 1);
    check_dhat_identity(4, 2);
    check_dhat_identity(7, 3);
    // expansion evaluated at z = m + rho reproduces the spectral-side scalar
    for (auto [n, r] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {7, 3}}) {
        Signature sig(n, r);
        auto cs = dhat_coefficients(n, r);
        for (const auto& m : enumerate_weights(r, 6)) {
            for (Rational nu : {Rational(1, 2), Rational(-1, 2), Rational(2), Rational(-5, 3)}) {
                Rational lhs = cs[0].evaluate({nu});
                for (int k = 1; k <= r; ++k)
                    lhs += cs[k].evaluate({nu}) * hc_eigenvalue(gamma_Vd(n, r, k), sig, m);
                lhs *= Rational(-1, 4).pow(r);
                CHECK(lhs == dhat_eigenvalue(sig, nu, m));
            }
        }
    }
}

TEST_CASE("hc_eigenvalue substitutions") {
    Signature s31(3, 1);
    CHECK(hc_eigenvalue(gamma_Vd(3, 1, 1), s31, HighestWeight({2})) == Rational(6));
    // n=4, r=2, m=(2,2): mu~ = (3, 2), e_2(9, 4) = 36
    Signature s42(4, 2);
    CHECK(mu_tilde(s42, HighestWeight({2, 2})) == std::vector<Rational>{Rational(3), Rational(2)});
    CHECK(hc_eigenvalue(elem_sym_squares(2, 2), s42, HighestWeight({2, 2})) == Rational(36));
    CHECK(weight_fingerprint(s42, HighestWeight({2, 2})) ==
          std::vector<Rational>{Rational(13), Rational(36)});
    // fingerprint separates the degree <= 2 components of Gr_2(R^4)
    CHECK(weight_fingerprint(s42, HighestWeight({0, 0})) ==
          std::vector<Rational>{Rational(1), Rational(0)});
    CHECK(weight_fingerprint(s42, HighestWeight({2, 0})) ==
          std::vector<Rational>{Rational(9), Rational(0)});
}
