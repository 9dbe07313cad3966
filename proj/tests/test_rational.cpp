#include <doctest.h>

#include <stdexcept>

#include "generators.hpp"
#include "orbchi/rational.hpp"

using orbchi::Integer;
using orbchi::Rational;
using orbchi::rational_from;

TEST_CASE("rational_from reduces and normalises sign")
{
    const Rational a = rational_from(2, 24);
    CHECK(a.numerator() == 1);
    CHECK(a.denominator() == 12);

    const Rational b = rational_from(-1, -24);
    CHECK(b.numerator() == 1);
    CHECK(b.denominator() == 24);

    const Rational c = rational_from(3, -6);
    CHECK(c.numerator() == -1);
    CHECK(c.denominator() == 2);

    const Rational z = rational_from(0, 7);
    CHECK(z.numerator() == 0);
    CHECK(z.denominator() == 1);
    CHECK(z == Rational{});
}

TEST_CASE("rational_from rejects a zero denominator")
{
    CHECK_THROWS_WITH_AS(rational_from(1, 0), "division by zero", std::domain_error);
    CHECK_THROWS_AS(Rational{1} / Rational{}, std::domain_error);
}

TEST_CASE("rational parsing and printing")
{
    CHECK(Rational::parse("3/24") == rational_from(1, 8));
    CHECK(Rational::parse(" -7 ") == Rational(-7));
    CHECK(Rational::parse("+5/10") == rational_from(1, 2));
    CHECK(Rational::parse("-6389072441/1393459200").str() == "-6389072441/1393459200");
    CHECK(Rational(12).str() == "12");
    CHECK(rational_from(-1, 24).str() == "-1/24");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
}

TEST_CASE("canonical form is independent of the representative")
{
    orbchi::testing::Gen gen(7);
    for (int i = 0; i < 200; ++i) {
        const Rational r = gen.rational();
        const long k = gen.uniform(1, 50) * (gen.uniform(0, 1) ? 1 : -1);
        const Integer num = r.numerator() * k;
        const Integer den = r.denominator() * k;
        CHECK(rational_from(num, den) == r);
        CHECK(rational_from(num, den).denominator() > 0);
    }
}

TEST_CASE("arithmetic and ordering")
{
    CHECK(rational_from(1, 6) + rational_from(1, 3) == rational_from(1, 2));
    CHECK(rational_from(1, 6) - rational_from(1, 3) == rational_from(-1, 6));
    CHECK(rational_from(2, 3) * rational_from(9, 4) == rational_from(3, 2));
    CHECK(rational_from(2, 3) / rational_from(4, 9) == rational_from(3, 2));
    CHECK(rational_from(-1, 48) < rational_from(-1, 360));
    CHECK(rational_from(1, 12) > Rational{});
    CHECK(orbchi::factorial(10) == 3628800);
    CHECK(orbchi::binomial(12, 5) == 792);
}
