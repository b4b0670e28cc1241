#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qfock/algebra.hpp"
#include "qfock/fock.hpp"
#include "qfock/qtwo.hpp"
#include "qfock/quadscalar.hpp"
#include "qfock/rational.hpp"

using namespace qfock;

namespace {

constexpr long double kTol = 1e-10L;

QuadScalar pochhammer(unsigned p, unsigned k) {
  return QuadScalar::of(Rational(falling_factorial(Integer(p), k)), p);
}

}  // namespace

TEST_CASE("closed-form ladder actions") {
  const unsigned p = 3;
  CHECK(q2_act(CaoId{'b', -1, 1}, q2_basis('v', 1, p)) ==
        q2_scale(QuadScalar::of(p, p), q2_basis('v', 0, p)));

  Q2State expected = q2_scale(QuadScalar::of(p, p), q2_basis('v', 1, p));
  expected = q2_add(expected,
                    q2_scale(-QuadScalar::sqrt_p(p), q2_basis('w', 1, p)));
  CHECK(q2_act(CaoId{'f', -1, 1}, q2_basis('w', 2, p)) == expected);

  CHECK(q2_act(CaoId{'b', +1, 1}, q2_basis('v', 2, p)) == q2_basis('v', 3, p));
  CHECK(q2_act(CaoId{'f', +1, 1}, q2_basis('v', 2, p)) == q2_basis('w', 3, p));
  CHECK(q2_act(CaoId{'f', +1, 1}, q2_basis('w', 2, p)).is_zero());
  CHECK(q2_act(CaoId{'b', +1, 1}, q2_basis('w', 2, p)) == q2_basis('w', 3, p));

  CHECK_THROWS_AS(q2_basis('w', 0, p), std::invalid_argument);
  CHECK_THROWS_AS(q2_act(CaoId{'b', -1, 2}, q2_basis('v', 1, p)),
                  std::invalid_argument);
}

TEST_CASE("rank-one actions agree with the occupation-coordinate actions") {
  for (unsigned p = 1; p <= 4; ++p) {
    std::vector<Q2State> basis;
    for (unsigned k = 0; k <= 6; ++k) basis.push_back(q2_basis('v', k, p));
    for (unsigned k = 1; k <= 6; ++k) basis.push_back(q2_basis('w', k, p));
    for (const Q2State& x : basis) {
      for (const CaoId& op : all_caos(1)) {
        CHECK(q2_to_fock(q2_act(op, x)) == apply_cao(op, q2_to_fock(x)));
      }
    }
  }
}

TEST_CASE("exact inner products") {
  CHECK(q2_inner(q2_basis('v', 2, 3), q2_basis('v', 2, 3)) ==
        QuadScalar::of(12, 3));
  CHECK(q2_inner(q2_basis('v', 1, 3), q2_basis('w', 1, 3)) ==
        QuadScalar::sqrt_p(3));
  CHECK(q2_inner(q2_basis('v', 4, 3), q2_basis('v', 4, 3)).is_zero());
  CHECK(q2_inner(q2_basis('v', 1, 3), q2_basis('v', 2, 3)).is_zero());

  for (unsigned p = 2; p <= 4; ++p) {
    for (unsigned k = 1; k <= 6; ++k) {
      const Q2State vk = q2_basis('v', k, p);
      const Q2State wk = q2_basis('w', k, p);
      CHECK(q2_inner(vk, vk) ==
            qs_mul(QuadScalar::of(Rational(factorial(k)), p), pochhammer(p, k)));
      CHECK(q2_inner(wk, wk) == qs_mul(QuadScalar::of(Rational(factorial(k - 1)), p),
                                       pochhammer(p, k)));
      CHECK(q2_inner(vk, wk) == q2_inner(wk, vk));
      CHECK(q2_inner(vk, vk) == inner_product(q2_to_fock(vk), q2_to_fock(vk)));
      CHECK(q2_inner(vk, wk) == inner_product(q2_to_fock(vk), q2_to_fock(wk)));
    }
  }
}

TEST_CASE("norm components of the combination vectors") {
  for (unsigned p = 2; p <= 4; ++p) {
    for (unsigned k = 1; k <= p; ++k) {
      const Q2State vk = q2_basis('v', k, p);
      const Q2State wk = q2_basis('w', k, p);
      const QuadScalar big =
          qs_mul(QuadScalar::of(Rational(factorial(k)), p), pochhammer(p, k));
      CHECK(q2_inner(vk, vk) + QuadScalar::of(k, p) * q2_inner(wk, wk) ==
            big + big);
      CHECK(qs_mul(q2_inner(vk, wk), QuadScalar::sqrt_p(p)) == big);
    }
  }
}

TEST_CASE("level gram determinant in closed form") {
  for (unsigned p = 1; p <= 4; ++p) {
    for (unsigned k = 1; k <= 6; ++k) {
      const Q2State vk = q2_basis('v', k, p);
      const Q2State wk = q2_basis('w', k, p);
      const QuadScalar det =
          qs_mul(q2_inner(vk, vk), q2_inner(wk, wk)) -
          qs_mul(q2_inner(vk, wk), q2_inner(wk, vk));
      const Rational scale = Rational(factorial(k)) * Rational(factorial(k - 1)) *
                             (Rational(1) - Rational(k, p));
      const QuadScalar expected =
          qs_mul(QuadScalar::of(scale, p),
                 qs_mul(pochhammer(p, k), pochhammer(p, k)));
      CHECK(det == expected);
      if (k < p) CHECK(qs_sign(det) == 1);
      if (k == p) CHECK(qs_sign(det) == 0);
    }
  }
}

TEST_CASE("the annihilation conditions have one solution") {
  for (unsigned p = 1; p <= 4; ++p) {
    const std::vector<Q2Primitive> prim = q2_primitive_scan(p);
    REQUIRE(prim.size() == 1);
    CHECK(prim[0].k == p);
    CHECK(prim[0].alpha == QuadScalar::one(p));
    CHECK(prim[0].beta == -QuadScalar::sqrt_p(p));

    Q2State vec = q2_scale(prim[0].alpha, q2_basis('v', p, p));
    vec = q2_add(vec, q2_scale(prim[0].beta, q2_basis('w', p, p)));
    CHECK(q2_act(CaoId{'b', -1, 1}, vec).is_zero());
    CHECK(q2_act(CaoId{'f', -1, 1}, vec).is_zero());
  }
  CHECK(q2_primitive_scan(4)[0].beta == QuadScalar::of(-2, 4));
}

TEST_CASE("orthonormal basis") {
  for (unsigned p = 1; p <= 6; ++p) {
    const std::vector<OrthoVec> basis = q2_ortho_basis(p);
    CHECK(basis.size() == 2 * p);
    unsigned phis = 0, psis = 0;
    for (const OrthoVec& v : basis) (v.kind == 'p' ? phis : psis) += 1;
    CHECK(phis == p);
    CHECK(psis == p);
    CHECK(q2_ortho_gram_residual(p) < kTol);
  }

  const std::vector<OrthoVec> b4 = q2_ortho_basis(4);
  for (const OrthoVec& v : b4) {
    if (v.kind == 's' && v.k == 1) {
      CHECK(std::abs(v.cv - 0.5L) < kTol);
      CHECK(std::abs(v.cw + 0.5L) < kTol);
    }
    if (v.kind == 'p' && v.k == 1) {
      CHECK(std::abs(v.cv - 0.28867513459481288L) < 1e-9L);
      CHECK(std::abs(v.cw - v.cv) < kTol);
    }
    if (v.kind == 's' && v.k == 0) {
      CHECK(std::abs(v.cv - 1.0L) < kTol);
      CHECK(std::abs(v.cw) < kTol);
    }
  }
}

TEST_CASE("creation and annihilation matrices are mutually transposed") {
  for (unsigned p = 1; p <= 6; ++p) CHECK(q2_adjointness_residual(p) < kTol);
}

TEST_CASE("matrix elements match the displayed closed forms") {
  for (unsigned p = 1; p <= 5; ++p) {
    const std::vector<MatrixElementRow> rows = q2_matrix_elements(p);
    CHECK(rows.size() == 10 * p - 4);
    for (const MatrixElementRow& row : rows) {
      CHECK(std::abs(row.formula - row.transported) < kTol);
    }
  }

  bool found = false;
  for (const MatrixElementRow& row : q2_matrix_elements(4)) {
    if (row.op_kind == 'f' && row.op_sign == +1 && row.src_kind == 'p' &&
        row.src_k == 1 && row.dst_kind == 'p' && row.dst_k == 2) {
      found = true;
      CHECK(std::abs(row.formula - 0.92387953251128676L) < 1e-9L);
    }
  }
  CHECK(found);
}
