#pragma once

#include <map>
#include <vector>

#include "qfock/algebra.hpp"
#include "qfock/fock.hpp"
#include "qfock/quadscalar.hpp"

namespace qfock {

// Rank-one module vectors: kind 'v' is |p; k, 0>, kind 'w' is |p; k-1, 1>
// (so 'w' needs k >= 1).
struct Q2Key {
  char kind;
  unsigned k;
  friend bool operator==(const Q2Key&, const Q2Key&) = default;
  friend auto operator<=>(const Q2Key&, const Q2Key&) = default;
};

class Q2State {
 public:
  explicit Q2State(unsigned p) : p_(p) {}

  unsigned p() const { return p_; }
  const std::map<Q2Key, QuadScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Q2Key& key, const QuadScalar& c);
  QuadScalar coefficient(const Q2Key& key) const;

  friend bool operator==(const Q2State& x, const Q2State& y) {
    return x.p_ == y.p_ && x.terms_ == y.terms_;
  }

 private:
  unsigned p_;
  std::map<Q2Key, QuadScalar> terms_;
};

Q2State q2_zero(unsigned p);
Q2State q2_basis(char kind, unsigned k, unsigned p);
Q2State q2_add(const Q2State& x, const Q2State& y);
Q2State q2_scale(const QuadScalar& c, const Q2State& x);

// Closed-form rank-one action; op.index must be 1.
Q2State q2_act(const CaoId& op, const Q2State& x);

// Contravariant form: <v_k|v_k> = k!(p)_k, <w_k|w_k> = (k-1)!(p)_k,
// <v_k|w_k> = k!(p)_k / sqrt(p), zero across different levels.
QuadScalar q2_inner(const Q2State& x, const Q2State& y);

// Same vector in occupation coordinates: v_k -> (k; 0), w_k -> (k-1; 1).
FockState q2_to_fock(const Q2State& x);

// Nonzero solution of the annihilation conditions at one level, normalized
// to alpha = 1 when alpha is nonzero.
struct Q2Primitive {
  unsigned k = 0;
  QuadScalar alpha, beta;
};

// All levels 1..p carrying a vector alpha v_k + beta w_k killed by both
// annihilation operators.
std::vector<Q2Primitive> q2_primitive_scan(unsigned p);

// Numeric vector cv * v_k + cw * w_k; kind 'p' labels the plus combination
// (phi), 's' the minus combination (psi).
struct OrthoVec {
  char kind = 'p';
  unsigned k = 0;
  long double cv = 0.0L;
  long double cw = 0.0L;
};

// Orthonormal basis of the simple quotient: psi_0 = v_0, then
// phi_k = c (v_k + sqrt(k) w_k) for k = 1..p and
// psi_k = c'(v_k - sqrt(k) w_k) for k = 1..p-1.
std::vector<OrthoVec> q2_ortho_basis(unsigned p);

// max |<e_mu|e_nu> - delta| over the orthonormal basis.
long double q2_ortho_gram_residual(unsigned p);

// max |M(x^-)[mu][nu] - M(x^+)[nu][mu]| over both operator kinds, matrix
// entries M(op)[mu][nu] = <e_mu|op e_nu> in the orthonormal basis.
long double q2_adjointness_residual(unsigned p);

// One verified raising or lowering amplitude.  The source and target use the
// halved endpoint convention phi'_0 = psi'_0 = v_0 / sqrt(2); formula is the
// closed-form value, transported the form-computed value <dst'|op src'>.
struct MatrixElementRow {
  char op_kind = 'b';
  int op_sign = +1;
  char src_kind = 'p';
  unsigned src_k = 0;
  char dst_kind = 'p';
  unsigned dst_k = 0;
  long double formula = 0.0L;
  long double transported = 0.0L;
};

// Rows for f^+, b^+ from levels 0..p-1 and f^- from levels 1..p, one row per
// existing target vector (the degenerate psi_p target is omitted).
std::vector<MatrixElementRow> q2_matrix_elements(unsigned p);

}  // namespace qfock
