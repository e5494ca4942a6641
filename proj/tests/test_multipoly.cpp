#include <doctest.h>

#include <cosgr/multipoly.hpp>

#include <random>

using namespace cosgr;

TEST_CASE("basic ring operations") {
    auto x = MultiPoly::variable(2, 0);
    auto y = MultiPoly::variable(2, 1);
    auto p = (x + y) * (x - y);
    auto q = x * x - y * y;
    CHECK(p == q);
    CHECK((p - q).is_zero());
    CHECK(p.total_degree() == 2);
    CHECK(p.evaluate({Rational(3), Rational(2)}) == Rational(5));
    auto cube = (x + MultiPoly::constant(2, Rational(1))).pow(3);
    CHECK(cube.evaluate({Rational(2), Rational(0)}) == Rational(27));
    CHECK(cube.terms().size() == 4);
}

TEST_CASE("zero coefficients are never stored") {
    auto x = MultiPoly::variable(1, 0);
    auto p = x - x;
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
    MultiPoly q(1);
    q.add_term({3}, Rational(2));
    q.add_term({3}, Rational(-2));
    CHECK(q.terms().empty());
}

TEST_CASE("derivative and substitution") {
    auto x = MultiPoly::variable(2, 0);
    auto y = MultiPoly::variable(2, 1);
    auto p = x * x * y + Rational(3) * y;
    CHECK(p.derivative(0) == Rational(2) * (x * y));
    CHECK(p.derivative(1) == x * x + MultiPoly::constant(2, Rational(3)));
    auto sub = p.substitute({std::optional<Rational>(Rational(2)), std::nullopt});
    CHECK(sub == Rational(7) * y);
}

TEST_CASE("embed and signed relabel") {
    auto x = MultiPoly::variable(1, 0);
    auto p = x * x + x;
    auto q = p.embed(3, 1);  // becomes poly in var 1 of a 3-var ring
    CHECK(q.evaluate({Rational(9), Rational(2), Rational(7)}) == Rational(6));
    auto y0 = MultiPoly::variable(2, 0), y1 = MultiPoly::variable(2, 1);
    auto r = y0 * y0 * y1;
    // swap variables and flip the sign of the second
    auto rr = r.relabel_signed({1, 0}, {1, -1});
    CHECK(rr == -(y1 * y1 * y0));
}

TEST_CASE("evaluation is a ring homomorphism on random data") {
    std::mt19937_64 gen(555);
    auto draw_poly = [&]() {
        MultiPoly p(3);
        for (int t = 0; t < 5; ++t) {
            std::vector<int> e = {static_cast<int>(gen() % 3), static_cast<int>(gen() % 3),
                                  static_cast<int>(gen() % 2)};
            p.add_term(e, Rational(static_cast<long long>(gen() % 9) - 4));
        }
        return p;
    };
    for (int iter = 0; iter < 200; ++iter) {
        auto p = draw_poly(), q = draw_poly();
        std::vector<Rational> at = {Rational(static_cast<long long>(gen() % 7) - 3),
                                    Rational(static_cast<long long>(gen() % 5) - 2, 2),
                                    Rational(static_cast<long long>(gen() % 5) - 2, 3)};
        CHECK((p * q).evaluate(at) == p.evaluate(at) * q.evaluate(at));
        CHECK((p + q).evaluate(at) == p.evaluate(at) + q.evaluate(at));
    }
}

TEST_CASE("graded-lex term order is reproducible") {
    auto x = MultiPoly::variable(2, 0);
    auto y = MultiPoly::variable(2, 1);
    auto p = y * y + x + y + MultiPoly::constant(2, Rational(5));
    std::vector<std::vector<int>> order;
    for (const auto& [e, c] : p.terms()) order.push_back(e);
    CHECK(order == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {0, 2}});
    CHECK(p.to_string({"x", "y"}) == "5 + 1*y + 1*x + 1*y^2");
}
