#include <doctest.h>

#include <cosgr/factored_rational.hpp>

#include <random>

using namespace cosgr;

TEST_CASE("construction and evaluation") {
    // 3 * (x - 1/2) / (x + 2)^2
    auto f = FactoredRational(Rational(3)) * FactoredRational::linear(Rational(1, 2)) *
             FactoredRational::linear(Rational(-2), -2);
    CHECK(f.evaluate(Rational(0)) == Rational(3) * Rational(-1, 2) / Rational(4));
    CHECK(f.evaluate(Rational(1, 2)).is_zero());
    CHECK_THROWS_AS(f.evaluate(Rational(-2)), std::domain_error);
    CHECK(f.order_at(Rational(1, 2)) == 1);
    CHECK(f.order_at(Rational(-2)) == -2);
    CHECK(f.order_at(Rational(7)) == 0);
}

TEST_CASE("multiplication cancels matching factors") {
    auto f = FactoredRational::linear(Rational(1)) * FactoredRational::linear(Rational(2), -1);
    auto g = FactoredRational::linear(Rational(2)) * FactoredRational::linear(Rational(1), -1);
    auto prod = f * g;
    CHECK(prod == FactoredRational::one());
    CHECK(f * f.inverse() == FactoredRational::one());
    CHECK((f / f) == FactoredRational::one());
}

TEST_CASE("shift moves roots") {
    auto f = FactoredRational::linear(Rational(3));     // (x - 3)
    auto g = f.shifted(Rational(1));                    // (x + 1 - 3) = (x - 2)
    CHECK(g == FactoredRational::linear(Rational(2)));
    CHECK(g.evaluate(Rational(2)).is_zero());
}

TEST_CASE("laurent leading coefficient") {
    // f = (x - 1)/(x + 2): at x = -2 order -1, leading coeff (-2 - 1) = -3
    auto f = FactoredRational::linear(Rational(1)) * FactoredRational::linear(Rational(-2), -1);
    CHECK(f.laurent_leading(Rational(-2)) == Rational(-3));
    // at a regular point the leading coefficient is the value
    CHECK(f.laurent_leading(Rational(0)) == f.evaluate(Rational(0)));
    // at the zero x=1 it is the derivative factor: 1/(1+2)
    CHECK(f.laurent_leading(Rational(1)) == Rational(1, 3));
}

TEST_CASE("zero function behaves") {
    auto z = FactoredRational::zero();
    CHECK(z.is_zero());
    CHECK((z * FactoredRational::linear(Rational(5))).is_zero());
    CHECK(z.evaluate(Rational(3)).is_zero());
    CHECK_THROWS_AS(z.order_at(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(z.inverse(), std::domain_error);
}

TEST_CASE("random evaluation consistency: factored product equals pointwise product") {
    std::mt19937_64 gen(4242);
    auto draw_fr = [&](int nfac) {
        FactoredRational f(Rational(static_cast<long long>(gen() % 7) + 1));
        for (int t = 0; t < nfac; ++t) {
            Rational root(static_cast<long long>(gen() % 11) - 5, static_cast<long long>(gen() % 2) + 1);
            int mult = static_cast<int>(gen() % 3) + 1;
            if (gen() & 1) mult = -mult;
            f *= FactoredRational::linear(root, mult);
        }
        return f;
    };
    for (int iter = 0; iter < 300; ++iter) {
        auto f = draw_fr(3), g = draw_fr(3);
        auto h = f * g;
        // evaluate somewhere away from all small half-integer roots
        Rational p(static_cast<long long>(gen() % 100) + 1000, 7);
        CHECK(h.evaluate(p) == f.evaluate(p) * g.evaluate(p));
        CHECK((f / g).evaluate(p) == f.evaluate(p) / g.evaluate(p));
        Rational d(static_cast<long long>(gen() % 9) - 4);
        CHECK(f.shifted(d).evaluate(p) == f.evaluate(p + d));
    }
}
