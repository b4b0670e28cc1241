#include "doctest.h"

#include <vector>

#include "qfock/characters.hpp"
#include "qfock/modstruct.hpp"
#include "qfock/mpoly.hpp"

using namespace qfock;

TEST_CASE("small closed forms") {
  const MPoly x0 = MPoly::variable(2, 0);
  const MPoly x1 = MPoly::variable(2, 1);

  CHECK(char_from_weights(1, 1) == x0 + x1);
  CHECK(char_formula(1, 2) == (x0 + x1).pow(2));
  CHECK(char_formula(2, 3) ==
        complete_sym(1, 3) * elem_sym(2, 3) + complete_sym(3, 3));
  CHECK(char_formula(3, 1) == elem_sym(1, 4));
}

TEST_CASE("the three character paths agree") {
  for (unsigned n = 1; n <= 2; ++n) {
    for (unsigned p = n; p <= 4; ++p) {
      const MPoly weights = char_from_weights(n, p);
      CHECK(weights == char_formula(n, p));
      CHECK(weights == char_schur_sum(n, p));
    }
  }
}

TEST_CASE("character evaluated at all ones counts the dimension") {
  for (unsigned n = 1; n <= 2; ++n) {
    for (unsigned p = 1; p <= 4; ++p) {
      const std::vector<Rational> ones(n + 1, Rational(1));
      CHECK(char_from_weights(n, p).eval(ones) == Rational(dim_vp(n, p)));
    }
  }
}
