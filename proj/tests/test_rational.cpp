#include "doctest.h"

#include <stdexcept>

#include "qfock/rational.hpp"

using namespace qfock;

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(12) == 479001600);
}

TEST_CASE("binomial handles out-of-range arguments") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(10, 4) == 210);
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(Integer(5), 0) == 1);
  CHECK(falling_factorial(Integer(5), 3) == 60);
  CHECK(falling_factorial(Integer(2), 3) == 0);
  CHECK(falling_factorial(Integer(-1), 2) == 2);
}

TEST_CASE("integer square root floor") {
  CHECK(isqrt_floor(0) == 0);
  CHECK(isqrt_floor(1) == 1);
  CHECK(isqrt_floor(3) == 1);
  CHECK(isqrt_floor(4) == 2);
  CHECK(isqrt_floor(17) == 4);
  CHECK(isqrt_floor(10000) == 100);
}

TEST_CASE("rational text round trip") {
  CHECK(render_rational(Rational(7)) == "7");
  CHECK(render_rational(Rational(-3, 6)) == "-1/2");
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(parse_rational("+2/4") == Rational(1, 2));
  CHECK(parse_rational(" 5/3 ") == Rational(5, 3));
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}
