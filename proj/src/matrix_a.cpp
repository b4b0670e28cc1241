#include "qfock/matrix_a.hpp"

namespace qfock {

namespace {

// Variables are ordered (s, t_1, ..., t_r) with arity r + 1.
MPoly sym_s(unsigned r) { return MPoly::variable(r + 1, 0); }

std::vector<MPoly> sym_t(unsigned r) {
  std::vector<MPoly> t;
  t.reserve(r);
  for (unsigned i = 1; i <= r; ++i) t.push_back(MPoly::variable(r + 1, i));
  return t;
}

}  // namespace

Matrix<MPoly> build_A_symbolic(unsigned r) {
  return build_A(sym_s(r), sym_t(r), MPoly::zero(r + 1),
                 MPoly::constant(r + 1, Rational(1)));
}

Matrix<Rational> build_A_rational(const Rational& s, const std::vector<Rational>& t) {
  return build_A(s, t, Rational(0), Rational(1));
}

Matrix<QuadScalar> build_A_quad(const QuadScalar& s, const std::vector<QuadScalar>& t,
                                unsigned p) {
  return build_A(s, t, QuadScalar::zero(p), QuadScalar::one(p));
}

MPoly det_A_symbolic(unsigned r) {
  const Matrix<MPoly> a = build_A_symbolic(r);
  return det_ring(a, MPoly::zero(r + 1), MPoly::constant(r + 1, Rational(1)));
}

MPoly det_A_formula(unsigned r) {
  MPoly base = sym_s(r) * sym_s(r);
  for (const MPoly& ti : sym_t(r)) base = base - ti;
  return base.pow(1U << (r - 1));
}

unsigned rank_A_rational(const Rational& s, const std::vector<Rational>& t) {
  return matrix_rank(build_A_rational(s, t));
}

namespace {

template <typename T>
bool inverse_identity_holds(const Matrix<T>& plus, const Matrix<T>& minus,
                            const T& target, const T& zero) {
  const Matrix<T> prod = matrix_mul(plus, minus);
  for (size_t i = 0; i < prod.rows(); ++i) {
    for (size_t j = 0; j < prod.cols(); ++j) {
      const T& expect = (i == j) ? target : zero;
      if (!(prod.at(i, j) == expect)) return false;
    }
  }
  return true;
}

}  // namespace

bool check_inverse_identity_symbolic(unsigned r) {
  const MPoly s = sym_s(r);
  const std::vector<MPoly> t = sym_t(r);
  const MPoly zero = MPoly::zero(r + 1);
  const MPoly one = MPoly::constant(r + 1, Rational(1));
  const Matrix<MPoly> plus = build_A(s, t, zero, one);
  const Matrix<MPoly> minus = build_A(zero - s, t, zero, one);
  MPoly target = zero - s * s;
  for (const MPoly& ti : t) target = target + ti;
  return inverse_identity_holds(plus, minus, target, zero);
}

bool check_inverse_identity_rational(const Rational& s, const std::vector<Rational>& t) {
  const Matrix<Rational> plus = build_A_rational(s, t);
  const Matrix<Rational> minus = build_A_rational(-s, t);
  Rational target = -s * s;
  for (const Rational& ti : t) target += ti;
  return inverse_identity_holds(plus, minus, target, Rational(0));
}

}  // namespace qfock
