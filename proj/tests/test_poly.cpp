#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "newton/errors.hpp"
#include "newton/polynomial.hpp"

using namespace newton;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int degree) {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 9);
    std::vector<Rat> c(degree + 1);
    for (auto& v : c) v = Rat(num(rng)) / den(rng);
    while (c.back() == 0) c.back() = Rat(num(rng)) / den(rng);
    return Polynomial::from_coeffs(std::move(c));
}

Polynomial from_roots(const std::vector<Rat>& roots) {
    Polynomial p = Polynomial::constant(1);
    for (const Rat& r : roots) p = p * Polynomial::from_coeffs({-r, Rat(1)});
    return p;
}

}  // namespace

TEST_CASE("construction and access") {
    Polynomial p = Polynomial::from_coeffs({Rat(2), Rat(-3), Rat(1), Rat(0), Rat(0)});
    CHECK(p.degree() == 2);
    CHECK(p[0] == 2);
    CHECK(p[2] == 1);
    CHECK(p[7] == 0);
    CHECK(p.leading() == 1);
    CHECK(Polynomial().is_zero());
    CHECK(Polynomial::monomial(Rat(3), 4).degree() == 4);
    CHECK_THROWS_AS(Polynomial::from_coeffs({}), AnalysisError);
}

TEST_CASE("evaluation and arithmetic") {
    Polynomial p = Polynomial::from_coeffs({Rat(2), Rat(-3), Rat(1)});  // (x-1)(x-2)
    CHECK(p.evaluate(Rat(1)) == 0);
    CHECK(p.evaluate(Rat(2)) == 0);
    CHECK(p.evaluate(Rat(1, 2)) == Rat(3, 4));
    Polynomial q = Polynomial::from_coeffs({Rat(-1), Rat(1)});
    CHECK((p + q).evaluate(Rat(3)) == p.evaluate(Rat(3)) + q.evaluate(Rat(3)));
    CHECK((p - q).evaluate(Rat(3)) == p.evaluate(Rat(3)) - q.evaluate(Rat(3)));
    CHECK((p * q).degree() == 3);
    CHECK((p * q).evaluate(Rat(5)) == p.evaluate(Rat(5)) * q.evaluate(Rat(5)));
    CHECK((Rat(2) * p).evaluate(Rat(3)) == 2 * p.evaluate(Rat(3)));
    CHECK((-p) + p == Polynomial());
}

TEST_CASE("derivatives") {
    Polynomial p = Polynomial::from_coeffs({Rat(1), Rat(0), Rat(0), Rat(2)});  // 2x^3 + 1
    CHECK(p.derivative() == Polynomial::from_coeffs({Rat(0), Rat(0), Rat(6)}));
    CHECK(p.nth_derivative(2) == Polynomial::from_coeffs({Rat(0), Rat(12)}));
    CHECK(p.nth_derivative(3) == Polynomial::constant(12));
    CHECK(p.nth_derivative(4).is_zero());
}

TEST_CASE("reciprocal reverses coefficients") {
    Polynomial p = Polynomial::from_coeffs({Rat(3), Rat(-1), Rat(2)});
    Polynomial r = p.reciprocal();
    CHECK(r == Polynomial::from_coeffs({Rat(2), Rat(-1), Rat(3)}));
    CHECK(r.reciprocal() == p);  // involution when the free term is nonzero
    // roots are reciprocals: p(2) = 0 iff r(1/2) = 0
    Polynomial q = from_roots({Rat(2), Rat(-3)});
    CHECK(q.reciprocal().evaluate(Rat(1, 2)) == 0);
    CHECK(q.reciprocal().evaluate(Rat(-1, 3)) == 0);
}

TEST_CASE("taylor shift") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial p = random_poly(rng, 1 + trial % 7);
        Rat b = Rat(trial) / 3 - 2;
        Polynomial s = p.shift(b);
        for (int x = -2; x <= 2; ++x)
            CHECK(s.evaluate(Rat(x)) == p.evaluate(Rat(x) + b));
        // composition: shifting twice equals one combined shift
        CHECK(s.shift(Rat(1, 2)) == p.shift(b + Rat(1, 2)));
        CHECK(s.shift(-b) == p);
    }
}

TEST_CASE("negate_arg") {
    Polynomial p = Polynomial::from_coeffs({Rat(1), Rat(2), Rat(3), Rat(4)});
    Polynomial n = p.negate_arg();
    for (int x = -3; x <= 3; ++x) CHECK(n.evaluate(Rat(x)) == p.evaluate(Rat(-x)));
}

TEST_CASE("sign_normalized") {
    Polynomial p = Polynomial::from_coeffs({Rat(2, 3), Rat(-4, 3), Rat(2)});
    Polynomial n = p.sign_normalized();
    CHECK(n == Polynomial::from_coeffs({Rat(1), Rat(-2), Rat(3)}));
    // scaling factor is positive: signs and roots preserved
    CHECK(sgn(n.leading()) == sgn(p.leading()));
    CHECK(n.evaluate(Rat(1, 7)) * p.leading() == p.evaluate(Rat(1, 7)) * n.leading());
}

TEST_CASE("division with remainder") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial a = random_poly(rng, 3 + trial % 5);
        Polynomial b = random_poly(rng, 1 + trial % 3);
        auto [q, r] = divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS_AS(divrem(Polynomial::constant(1), Polynomial()), AnalysisError);
}

TEST_CASE("gcd and square-free decomposition") {
    Polynomial a = from_roots({Rat(1), Rat(2)});
    Polynomial b = from_roots({Rat(1), Rat(3)});
    CHECK(gcd(a, b) == from_roots({Rat(1)}));
    CHECK(gcd(a, Polynomial::constant(5)) == Polynomial::constant(1));

    // (x-1)(x-2)^2(x+3)^3
    Polynomial p = from_roots({Rat(1), Rat(2), Rat(2), Rat(-3), Rat(-3), Rat(-3)});
    Polynomial sf = square_free_part(p);
    CHECK(sf.sign_normalized() == from_roots({Rat(1), Rat(2), Rat(-3)}).sign_normalized());

    auto yun = yun_square_free(p);
    REQUIRE(yun.size() == 3);
    CHECK(yun[0].sign_normalized() == from_roots({Rat(1)}).sign_normalized());
    CHECK(yun[1].sign_normalized() == from_roots({Rat(2)}).sign_normalized());
    CHECK(yun[2].sign_normalized() == from_roots({Rat(-3)}).sign_normalized());
}

TEST_CASE("power sums against explicit roots") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rat> roots;
        for (int i = 0; i < 2 + trial % 4; ++i) roots.push_back(Rat(num(rng)) / den(rng));
        Polynomial p = from_roots(roots);
        auto sums = power_sums(p, 4);
        for (int j = 0; j <= 4; ++j) {
            Rat direct = 0;
            for (const Rat& r : roots) {
                Rat pw = 1;
                for (int i = 0; i < j; ++i) pw *= r;
                direct += pw;
            }
            CHECK(sums[j] == direct);
        }
        Rat diff = 0;
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = 0; j < i; ++j) diff += (roots[i] - roots[j]) * (roots[i] - roots[j]);
        CHECK(sum_squared_root_differences(p) == diff);
    }
}

TEST_CASE("binomial form round trip") {
    // x^8 - 16x^7 + 28x^6 + 112x^5 - 70x^4 + (28/5)x^3 + 28x^2 + 16x + 1
    Polynomial p = Polynomial::from_coeffs({Rat(1), Rat(16), Rat(28), Rat(28, 5), Rat(-70),
                                            Rat(112), Rat(28), Rat(-16), Rat(1)});
    BinomialForm bf = BinomialForm::of(p);
    std::vector<Rat> expected{Rat(1), Rat(2),  Rat(1), Rat(1, 10), Rat(-1),
                              Rat(2), Rat(1), Rat(-2), Rat(1)};
    CHECK(bf.a == expected);
    CHECK(bf.to_polynomial() == p);
    CHECK(bf.rosset_e(0) == Rat(1));
    CHECK(bf.rosset_e(1) == Rat(2));
    CHECK(bf.rosset_e(2) == Rat(1));
    CHECK_THROWS_AS(BinomialForm::of(Polynomial()), ZeroPolynomialError);
}

TEST_CASE("regularization") {
    Polynomial p = Polynomial::from_coeffs({Rat(1), Rat(0), Rat(1)});  // x^2 + 1
    CHECK_FALSE(is_regular(p));
    Regularized reg = regularize(p);
    CHECK(is_regular(reg.poly));
    CHECK(reg.poly == p.shift(reg.beta));

    Polynomial ok = Polynomial::from_coeffs({Rat(2), Rat(-3), Rat(1)});
    CHECK(is_regular(ok));

    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial q = random_poly(rng, 3 + trial % 4);
        Regularized r = regularize(q);
        CHECK(is_regular(r.poly));
        CHECK(r.poly == q.shift(r.beta));
    }
}
