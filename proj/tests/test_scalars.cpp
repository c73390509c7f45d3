#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brauercat/delta_poly.hpp"
#include "brauercat/errors.hpp"
#include "brauercat/rational.hpp"

using namespace brauercat;

namespace {

DeltaPolynomial poly(std::initializer_list<int> ascending) {
    std::vector<Rational> c;
    for (int v : ascending) c.emplace_back(v);
    return DeltaPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("rational strings round-trip in lowest terms") {
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK(to_string(Rational(8, 2)) == "4");
    CHECK(rational_from_string("3/2") == Rational(3, 2));
    CHECK(rational_from_string("-17") == Rational(-17));
    CHECK_THROWS_AS(rational_from_string("1/0"), SchemaError);
    CHECK_THROWS_AS(rational_from_string("x"), SchemaError);
    CHECK_THROWS_AS(rational_from_string("1/-2"), SchemaError);
}

TEST_CASE("polynomial ring arithmetic") {
    const DeltaPolynomial d = DeltaPolynomial::delta();

    // (d-1)*d = d^2 - d
    CHECK((d - DeltaPolynomial(Rational(1))) * d == poly({0, -1, 1}));

    // additive identity
    const DeltaPolynomial p = poly({3, -2, 5});
    CHECK(p + DeltaPolynomial() == p);

    // (d-2)(d+1) expands by hand to d^2 - d - 2, and the same polynomial
    // arises as falling_factorial(2) - 2!
    const DeltaPolynomial expanded = poly({-2, 1}) * poly({1, 1});
    CHECK(expanded == poly({-2, -1, 1}));
    CHECK(expanded == falling_factorial(2) - DeltaPolynomial(Rational(2)));
}

TEST_CASE("evaluation") {
    CHECK(poly({-2, 1}).evaluate(Rational(2)) == 0);
    CHECK(falling_factorial(3).evaluate(Rational(3)) == 6);
    CHECK(poly({-2, -1, 1}).evaluate(Rational(-1)) == 0);
    CHECK(DeltaPolynomial().evaluate(Rational(7)) == 0);
}

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(0) == DeltaPolynomial(Rational(1)));
    CHECK(falling_factorial(2) == poly({0, -1, 1}));
    for (int m = 2; m <= 6; ++m)
        CHECK(falling_factorial(m).evaluate(Rational(m)) == Rational(factorial(m)));
}

TEST_CASE("f_m polynomial") {
    CHECK(f_m_polynomial(2) == poly({-2, 1}));
    CHECK(f_m_polynomial(3) == poly({0, -3, 1}));
    for (int m = 2; m <= 6; ++m) CHECK(f_m_polynomial(m).evaluate(Rational(m)) == 0);
}

TEST_CASE("gcd") {
    // d^2-d-2 = (d-2)(d+1) by hand
    CHECK(poly_gcd(poly({-2, -1, 1}), poly({-2, 1})) == poly({-2, 1}));

    const DeltaPolynomial p = poly({6, -5, 1});
    CHECK(poly_gcd(p, p) == p.monic());
    CHECK(poly_gcd(p * DeltaPolynomial(Rational(3)), p) == p.monic());

    // d^3-3d^2+2d-6 = (d-3)(d^2+2) and d^2-3d = d(d-3) by hand
    CHECK(poly_gcd(falling_factorial(3) - DeltaPolynomial(Rational(6)), f_m_polynomial(3)) ==
          poly({-3, 1}));

    for (int m = 2; m <= 6; ++m) {
        const DeltaPolynomial lhs =
            falling_factorial(m) - DeltaPolynomial(Rational(factorial(m)));
        CHECK(poly_gcd(lhs, f_m_polynomial(m)) == poly({-m, 1}));
    }
    CHECK_THROWS_AS(poly_gcd(DeltaPolynomial(), DeltaPolynomial()), Error);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> deg(0, 4);
    auto rand_poly = [&] {
        std::vector<Rational> c;
        const int n = deg(rng);
        for (int i = 0; i <= n; ++i) c.emplace_back(coeff(rng));
        return DeltaPolynomial(std::move(c));
    };
    for (int trial = 0; trial < 200; ++trial) {
        const DeltaPolynomial a = rand_poly(), b = rand_poly(), c = rand_poly();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("combinatorial helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(3, 5) == 0);
    CHECK(permutation_sign({0, 1, 2}) == 1);
    CHECK(permutation_sign({1, 0, 2}) == -1);
    CHECK(permutation_sign({1, 2, 0}) == 1);
    std::vector<int> v{4, 1, 3};
    CHECK(sort_with_sign(v) == 1);  // (4,1,3) -> (1,3,4) is a 3-cycle
    CHECK(v == std::vector<int>{1, 3, 4});
    CHECK(all_permutations(3).size() == 6);
}
