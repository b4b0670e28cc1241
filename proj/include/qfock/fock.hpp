#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qfock/algebra.hpp"
#include "qfock/quadscalar.hpp"

namespace qfock {

// Occupation labels (k_1,l_1,...,k_n,l_n) of a monomial in the creation
// operators applied to the vacuum, in the fixed word order
// (b_1^+)^{k_1}(f_1^+)^{l_1}...(b_n^+)^{k_n}(f_n^+)^{l_n} v_0; l_i in {0,1}.
struct BasisKey {
  std::vector<unsigned> k;
  std::vector<unsigned> l;
  friend bool operator==(const BasisKey&, const BasisKey&) = default;
  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

// "k1,l1;k2,l2;...;kn,ln"
std::string render_key(const BasisKey& key);
BasisKey parse_key(const std::string& text);

BasisKey vacuum_key(unsigned n);

// Integer tuple (la_0, ..., la_n) in the eps-basis.
using Weight = std::vector<long long>;

// Total occupation number of the key.
unsigned level(const BasisKey& key);

// (p - sum(k_i + l_i), k_1 + l_1, ..., k_n + l_n).
Weight weight_of(const BasisKey& key, unsigned p);

// Sparse vector over basis keys with coefficients in Q(sqrt(p)); no zero
// coefficients stored, all keys of one arity n.
class FockState {
 public:
  FockState(unsigned n, unsigned p) : n_(n), p_(p) {}

  unsigned n() const { return n_; }
  unsigned p() const { return p_; }
  const std::map<BasisKey, QuadScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const BasisKey& key, const QuadScalar& c);
  QuadScalar coefficient(const BasisKey& key) const;

  friend bool operator==(const FockState& x, const FockState& y) {
    return x.n_ == y.n_ && x.terms_ == y.terms_;
  }

 private:
  unsigned n_, p_;
  std::map<BasisKey, QuadScalar> terms_;
};

FockState fs_zero(unsigned n, unsigned p);
FockState fs_basis(const BasisKey& key, unsigned p);
FockState fs_add(const FockState& x, const FockState& y);
FockState fs_sub(const FockState& x, const FockState& y);
FockState fs_scale(const QuadScalar& c, const FockState& x);

// Creation action, extended linearly:
//   b_j^+ |k,l> = |k_j+1>,
//   f_j^+ |k,l> = d_{l_j,0} (-1)^{l_1+...+l_{j-1}} |l_j+1>.
// Requires c.sign = +1.
FockState apply_create(const CaoId& c, const FockState& v);

// Annihilation action in closed form, extended linearly. Requires
// c.sign = -1. With L = sum(k_i + l_i) taken on the argument key:
//   f_j^- |k,l> = (-1)^{l_1+..+l_{j-1}} l_j (p+1+k_j-L) |l_j-1>
//     + (-1)^{l_1+..+l_n} k_j sqrt(p) |k_j-1>
//     - (-1)^{l_1+..+l_{j-1}} d_{l_j,0} k_j(k_j-1) |k_j-2,l_j+1>
//     - sum_{i != j} (-1)^{l_1+..+l_{i-1}} d_{l_i,0} k_i k_j |k_j-1,k_i-1,l_i+1>
//     + sum_{i != j} (-1)^{l_1+..+l_{i-1}} l_i k_j |k_j-1,k_i+1,l_i-1>;
//   b_j^- |k,l> = k_j (p+1-l_j-L) |k_j-1>
//     + (-1)^{l_{j+1}+..+l_n} l_j sqrt(p) |l_j-1>
//     + (-1)^{l_{j+1}+..+l_n} sum_{i != j} (-1)^{l_i+..+l_n} theta_{ij}
//         d_{l_i,0} k_i l_j |l_j-1,k_i-1,l_i+1>
//     - (-1)^{l_{j+1}+..+l_n} sum_{i != j} (-1)^{l_i+..+l_n} theta_{ij}
//         l_i l_j |l_j-1,k_i+1,l_i-1>,
// where theta_{ij} = +1 for i < j and -1 for i > j.
FockState apply_annihilate(const CaoId& c, const FockState& v);

// Dispatch on c.sign.
FockState apply_cao(const CaoId& c, const FockState& v);

// Weight vector on which the annihilators act diagonally:
//   X(p;k,l) = (-1)^{l_1+..+l_n} sqrt(p) |p;k,l>
//     - sum_i (-1)^{l_1+..+l_i} l_i |k_i+1,l_i-1>
//     - sum_i (-1)^{l_1+..+l_i} d_{l_i,0} k_i |k_i-1,l_i+1>.
FockState x_vector(const BasisKey& key, unsigned p);

// Bilinear symmetric form with <v_0|v_0> = 1 under which creation and
// annihilation operators are mutually adjoint. On basis keys it equals the
// vacuum coefficient of (f_n^-)^{l_n}(b_n^-)^{k_n}...(f_1^-)^{l_1}(b_1^-)^{k_1}
// applied to the second argument; keys of different weights pair to 0.
QuadScalar inner_product(const FockState& u, const FockState& v);

// All keys of the given arity with level <= cap, ordered by BasisKey order.
std::vector<BasisKey> keys_up_to_level(unsigned n, unsigned cap);

// All keys of the given arity with level == lvl.
std::vector<BasisKey> keys_at_level(unsigned n, unsigned lvl);

}  // namespace qfock
