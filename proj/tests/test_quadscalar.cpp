#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "qfock/quadscalar.hpp"

using namespace qfock;

TEST_CASE("normalization folds perfect squares") {
  const QuadScalar folded = qs_normalize(0, 1, 4);
  CHECK(folded.a() == 2);
  CHECK(folded.b() == 0);
  CHECK(folded.is_rational());

  const QuadScalar plain = qs_normalize(1, 0, 5);
  CHECK(plain.a() == 1);
  CHECK(plain.b() == 0);

  const QuadScalar mixed = qs_normalize(Rational(1, 2), Rational(-1, 3), 9);
  CHECK(mixed.a() == Rational(-1, 2));
  CHECK(mixed.b() == 0);
}

TEST_CASE("normalization is idempotent") {
  const std::vector<QuadScalar> samples = {
      qs_normalize(0, 1, 4), qs_normalize(2, 3, 5), qs_normalize(-1, 7, 16),
      qs_normalize(Rational(1, 2), Rational(-1, 3), 9)};
  for (const QuadScalar& x : samples) {
    const QuadScalar again = qs_normalize(x.a(), x.b(), x.p());
    CHECK(again == x);
  }
}

TEST_CASE("multiplication") {
  CHECK(qs_mul(QuadScalar::sqrt_p(5), QuadScalar::sqrt_p(5)) == QuadScalar::of(5, 5));
  CHECK(qs_mul(QuadScalar(1, 1, 2), QuadScalar(1, -1, 2)) == QuadScalar::of(-1, 2));
  CHECK(qs_mul(QuadScalar(2, 3, 5), QuadScalar(1, 1, 5)) == QuadScalar(17, 5, 5));
  CHECK_THROWS_AS(qs_mul(QuadScalar(1, 1, 2), QuadScalar(1, 1, 3)),
                  std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(qs_inv(QuadScalar::sqrt_p(5)) == QuadScalar(0, Rational(1, 5), 5));
  CHECK(qs_inv(QuadScalar(3, 1, 2)) == QuadScalar(Rational(3, 7), Rational(-1, 7), 2));
  CHECK_THROWS_AS(qs_inv(QuadScalar::zero(5)), std::domain_error);
}

TEST_CASE("exact sign") {
  CHECK(qs_sign(QuadScalar(3, -1, 5)) == 1);
  CHECK(qs_sign(QuadScalar(-2, 1, 5)) == 1);
  CHECK(qs_sign(QuadScalar::zero(5)) == 0);
  CHECK(qs_sign(QuadScalar(2, -1, 5)) == -1);
  CHECK(qs_sign(QuadScalar(-3, 1, 5)) == -1);
  CHECK(qs_sign(QuadScalar(0, -2, 7)) == -1);
  CHECK(qs_sign(QuadScalar(5, 0, 7)) == 1);
  CHECK(qs_sign(qs_normalize(1, -1, 1)) == 0);
}

TEST_CASE("field behavior on a sample grid") {
  std::vector<QuadScalar> xs;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) xs.push_back(QuadScalar(a, b, 3));
  for (const QuadScalar& x : xs) {
    for (const QuadScalar& y : xs) {
      CHECK(qs_sign(qs_mul(x, y)) == qs_sign(x) * qs_sign(y));
      if (!y.is_zero()) CHECK(qs_mul(qs_mul(x, y), qs_inv(y)) == x);
    }
    if (!x.is_zero()) {
      CHECK(qs_sign(qs_mul(x, x)) == 1);
      CHECK(qs_mul(x, qs_inv(x)) == QuadScalar::one(3));
    }
  }
}

TEST_CASE("text round trip") {
  CHECK(render_quadscalar(QuadScalar(17, 5, 5)) == "17 + 5*sqrt(5)");
  CHECK(render_quadscalar(QuadScalar(Rational(3, 7), Rational(-1, 7), 2)) ==
        "3/7 - 1/7*sqrt(2)");
  CHECK(render_quadscalar(QuadScalar::sqrt_p(5)) == "1*sqrt(5)");
  CHECK(render_quadscalar(QuadScalar::of(-3, 5)) == "-3");
  CHECK(parse_quadscalar("17 + 5*sqrt(5)") == QuadScalar(17, 5, 5));
  CHECK(parse_quadscalar("3/7 - 1/7*sqrt(2)") ==
        QuadScalar(Rational(3, 7), Rational(-1, 7), 2));
  CHECK(parse_quadscalar("-sqrt(5)") == QuadScalar(0, -1, 5));
  CHECK(parse_quadscalar("sqrt(4)") == QuadScalar::of(2, 4));
  const std::vector<QuadScalar> samples = {
      QuadScalar(0, 1, 7), QuadScalar(-2, Rational(5, 3), 3),
      QuadScalar(Rational(1, 2), 0, 5), QuadScalar(4, -1, 2)};
  for (const QuadScalar& x : samples) {
    // Pure-rational values render without the radical, so only the
    // coefficients survive the trip; the radicand survives when b != 0.
    const QuadScalar back = parse_quadscalar(render_quadscalar(x));
    CHECK(back.a() == x.a());
    CHECK(back.b() == x.b());
    if (!x.is_rational()) CHECK(back.p() == x.p());
  }
}
