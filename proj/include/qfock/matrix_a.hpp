#pragma once

#include <cstddef>
#include <vector>

#include "qfock/linalg.hpp"
#include "qfock/mpoly.hpp"
#include "qfock/quadscalar.hpp"
#include "qfock/rational.hpp"

namespace qfock {

// Square matrix of order 2^r indexed by binary sequences (l_1, ..., l_r),
// row/column index sum_i l_i * 2^(i-1).  Diagonal entries are s.  Row l and
// column l' differing in exactly one position i carry
//   -(-1)^(l_{i+1} + ... + l_r) * t_i   when the row has l_i = 0,
//   -(-1)^(l_{i+1} + ... + l_r) * 1     when the row has l_i = 1,
// with the tail sign read off the row sequence.  All other entries vanish.
template <typename T>
Matrix<T> build_A(const T& s, const std::vector<T>& t, const T& zero, const T& one) {
  const unsigned r = static_cast<unsigned>(t.size());
  const size_t order = size_t{1} << r;
  Matrix<T> out(order, order, zero);
  for (size_t row = 0; row < order; ++row) {
    out.at(row, row) = s;
    for (unsigned i = 0; i < r; ++i) {
      const size_t col = row ^ (size_t{1} << i);
      int tail = 0;
      for (unsigned m = i + 1; m < r; ++m) tail += static_cast<int>((row >> m) & 1U);
      const bool row_bit_set = ((row >> i) & 1U) != 0;
      T value = row_bit_set ? one : t[i];
      if (tail % 2 == 0) value = zero - value;
      out.at(row, col) = value;
    }
  }
  return out;
}

// Symbolic A over variables (s, t_1, ..., t_r), arity r + 1.
Matrix<MPoly> build_A_symbolic(unsigned r);
Matrix<Rational> build_A_rational(const Rational& s, const std::vector<Rational>& t);
Matrix<QuadScalar> build_A_quad(const QuadScalar& s, const std::vector<QuadScalar>& t,
                                unsigned p);

// det A(s; t_1..t_r) computed by exact expansion; order 2^r.
MPoly det_A_symbolic(unsigned r);

// (s^2 - t_1 - ... - t_r)^(2^(r-1)) in the same variables s, t_1..t_r.
MPoly det_A_formula(unsigned r);

unsigned rank_A_rational(const Rational& s, const std::vector<Rational>& t);

// Checks A(s; t) * A(-s; t) == (t_1 + ... + t_r - s^2) * identity.
bool check_inverse_identity_symbolic(unsigned r);
bool check_inverse_identity_rational(const Rational& s, const std::vector<Rational>& t);

}  // namespace qfock
