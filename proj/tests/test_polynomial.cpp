#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polynomial.hpp"

using namespace exspectra;

TEST_CASE("construction trims trailing zeros") {
    Polynomial p(std::vector<Rational>{1, 2, 0, 0});
    CHECK(p.degree() == 1);
    CHECK(Polynomial(std::vector<Rational>{0, 0}).is_zero());
    CHECK(Polynomial().degree() == -1);
}

TEST_CASE("arithmetic") {
    Polynomial x = Polynomial::x();
    Polynomial p = x * x - Polynomial::constant(1);  // x^2 - 1
    CHECK(p.coeff(0) == -1);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(7) == 0);

    Polynomial q = (x - Polynomial::constant(1)) * (x + Polynomial::constant(1));
    CHECK(p == q);
    CHECK((p - q).is_zero());
    CHECK((p * Rational(0)).is_zero());
    CHECK((-p).coeff(2) == -1);
}

TEST_CASE("evaluation is exact") {
    Polynomial p(std::vector<Rational>{make_rational(1, 3), 0, 1});  // x^2 + 1/3
    CHECK(p.eval(make_rational(1, 2)) == make_rational(7, 12));
    CHECK(p.eval_double(2.0) == doctest::Approx(4.0 + 1.0 / 3.0));
}

TEST_CASE("derivative and monomial shift") {
    Polynomial p(std::vector<Rational>{5, -3, 0, 2});  // 2x^3 - 3x + 5
    Polynomial d = p.derivative();
    CHECK(d == Polynomial(std::vector<Rational>{-3, 0, 6}));
    CHECK(Polynomial::constant(7).derivative().is_zero());

    Polynomial shifted = d.shifted_up(2);
    CHECK(shifted.degree() == 4);
    CHECK(shifted.coeff(2) == -3);
    CHECK(shifted.coeff(4) == 6);
}

TEST_CASE("string forms") {
    Polynomial p(std::vector<Rational>{0, make_rational(-25, 8), 0, 1});
    CHECK(p.to_string() == "x^3 - 25/8x");
    auto strs = p.coeff_strings();
    REQUIRE(strs.size() == 4);
    CHECK(strs[0] == "0");
    CHECK(strs[1] == "-25/8");
    CHECK(strs[3] == "1");
}

TEST_CASE("monomial validation") {
    CHECK_THROWS_AS(Polynomial::monomial(-1, 1), std::invalid_argument);
    CHECK(Polynomial::monomial(3, 0).is_zero());
}
