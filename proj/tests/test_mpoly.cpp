#include "doctest.h"

#include <string>
#include <vector>

#include "qfock/mpoly.hpp"

using namespace qfock;

namespace {

// Sum of x^content over all column-strict hook tableaux of arm a and leg b:
// first row r_0 <= r_1 <= ... <= r_a, first column r_0 < c_1 < ... < c_b,
// entries in 1..nvars.
MPoly hook_tableau_sum(unsigned a, unsigned b, unsigned nvars) {
  MPoly total = MPoly::zero(nvars);
  std::vector<unsigned> row(a + 1), col(b);

  const auto add_current = [&] {
    std::vector<unsigned> expo(nvars, 0);
    for (unsigned v : row) expo[v - 1] += 1;
    for (unsigned v : col) expo[v - 1] += 1;
    total.add_term(expo, 1);
  };

  const auto fill_col = [&](auto&& self, unsigned idx) -> void {
    if (idx == b) {
      add_current();
      return;
    }
    const unsigned lo = idx == 0 ? row[0] + 1 : col[idx - 1] + 1;
    for (unsigned v = lo; v <= nvars; ++v) {
      col[idx] = v;
      self(self, idx + 1);
    }
  };

  const auto fill_row = [&](auto&& self, unsigned idx) -> void {
    if (idx == a + 1) {
      fill_col(fill_col, 0);
      return;
    }
    const unsigned lo = idx == 0 ? 1 : row[idx - 1];
    for (unsigned v = lo; v <= nvars; ++v) {
      row[idx] = v;
      self(self, idx + 1);
    }
  };

  fill_row(fill_row, 0);
  return total;
}

}  // namespace

TEST_CASE("elementary and complete symmetric polynomials") {
  const std::vector<std::string> names = {"x0", "x1", "x2"};

  CHECK(elem_sym(0, 3) == MPoly::constant(3, 1));
  CHECK(elem_sym(-1, 3).is_zero());
  CHECK(elem_sym(4, 3).is_zero());
  CHECK(render_mpoly(elem_sym(1, 3), names) == "1 * x0 + 1 * x1 + 1 * x2");
  CHECK(render_mpoly(elem_sym(3, 3), names) == "1 * x0 x1 x2");

  CHECK(complete_sym(0, 3) == MPoly::constant(3, 1));
  CHECK(complete_sym(-2, 3).is_zero());
  CHECK(render_mpoly(complete_sym(2, 2), {"x0", "x1"}) ==
        "1 * x0^2 + 1 * x0 x1 + 1 * x1^2");
  CHECK(complete_sym(3, 1) == MPoly::variable(1, 0).pow(3));

  CHECK(elem_sym(2, 3).eval({1, 1, 1}) == 3);
  CHECK(complete_sym(2, 3).eval({1, 1, 1}) == 6);
}

TEST_CASE("arithmetic and evaluation") {
  const MPoly x = MPoly::variable(2, 0);
  const MPoly y = MPoly::variable(2, 1);
  const MPoly s = x + y;
  CHECK(s.pow(2) == x * x + MPoly::constant(2, 2) * x * y + y * y);
  CHECK(s.pow(0) == MPoly::constant(2, 1));
  CHECK((s - s).is_zero());
  CHECK((-s) + s == MPoly::zero(2));
  CHECK(s.pow(3).eval({2, 1}) == 27);
}

TEST_CASE("term order puts the highest degree first") {
  const MPoly x = MPoly::variable(2, 0);
  const MPoly y = MPoly::variable(2, 1);
  const MPoly poly = y * y * y + x + MPoly::constant(2, 5);
  CHECK(render_mpoly(poly, {"x", "y"}) == "1 * y^3 + 1 * x + 5");
}

TEST_CASE("hook Schur polynomials against the tableau enumeration") {
  for (unsigned nvars = 1; nvars <= 3; ++nvars) {
    for (unsigned a = 0; a + 1 <= 5; ++a) {
      for (unsigned b = 0; a + b + 1 <= 5; ++b) {
        CHECK(schur_hook(a, b, nvars) == hook_tableau_sum(a, b, nvars));
      }
    }
  }
}

TEST_CASE("hook Schur examples") {
  const MPoly x = MPoly::variable(2, 0);
  const MPoly y = MPoly::variable(2, 1);
  CHECK(schur_hook(1, 1, 2) == x * x * y + x * y * y);
  CHECK(schur_hook(0, 1, 3) == elem_sym(2, 3));
  CHECK(schur_hook(0, 1, 1).is_zero());
}
