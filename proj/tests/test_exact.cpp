#include <doctest.h>

#include "fixtures.hpp"
#include "thompson/errors.hpp"
#include "thompson/rational.hpp"

using namespace thompson;
using fixtures::q;

TEST_CASE("pow2_exponent") {
  CHECK(pow2_exponent(q(8)) == 3);
  CHECK(pow2_exponent(q(1)) == 0);
  CHECK(pow2_exponent(q(1, 16)) == -4);
  CHECK_FALSE(pow2_exponent(q(3, 4)).has_value());
  CHECK_FALSE(pow2_exponent(q(6)).has_value());
  CHECK_THROWS_AS(pow2_exponent(q(0)), DomainError);
  CHECK_THROWS_AS(pow2_exponent(q(-2)), DomainError);
}

TEST_CASE("is_dyadic") {
  CHECK(is_dyadic(q(5, 16)));
  CHECK_FALSE(is_dyadic(q(1, 3)));
  CHECK(is_dyadic(q(0)));
  CHECK(is_dyadic(q(-7, 2)));
  CHECK_FALSE(is_dyadic(q(1, 6)));
}

TEST_CASE("parse and print") {
  CHECK(Rational::parse("3/6") == q(1, 2));
  CHECK(Rational::parse("-4") == q(-4));
  CHECK(q(3).to_string() == "3/1");
  CHECK(q(-2, 6).to_string() == "-1/3");
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("0.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
  CHECK_THROWS_AS(Rational::parse("a/2"), ParseError);
}

TEST_CASE("integer powers, logs and roots") {
  CHECK(pow(q(2, 3), 3) == q(8, 27));
  CHECK(pow(q(2, 3), -2) == q(9, 4));
  CHECK(pow(q(5), 0) == q(1));
  CHECK(integer_log(q(1, 8), q(2)) == -3);
  CHECK(integer_log(q(9, 4), q(2, 3)) == -2);
  CHECK_FALSE(integer_log(q(3), q(2)).has_value());
  CHECK(rational_root(q(8, 27), 3) == q(2, 3));
  CHECK_FALSE(rational_root(q(2), 2).has_value());
}

TEST_CASE("Pow2Exp arithmetic") {
  Pow2Exp a = Pow2Exp::of(q(1, 4));
  CHECK(a.exponent() == q(-2));
  CHECK(a.root(2).exponent() == q(-1));
  CHECK(a.root(3).value() == std::nullopt);
  CHECK((a * Pow2Exp::of(q(8))).value() == q(2));
  CHECK(a.pow(-3).value() == q(64));
  CHECK_THROWS_AS(Pow2Exp::of(q(3)), DomainError);
}
