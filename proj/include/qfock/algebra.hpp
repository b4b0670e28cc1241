#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qfock/linalg.hpp"
#include "qfock/quadscalar.hpp"
#include "qfock/rational.hpp"

namespace qfock {

// Basis symbol e_{ij}^sigma of q(n+1); sigma is the parity (0 even, 1 odd),
// indices range over 0..n.
struct GeneratorId {
  unsigned i = 0;
  unsigned j = 0;
  unsigned sigma = 0;
  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

// "e[i,j]^s" with s in {0,1}.
std::string render_generator(const GeneratorId& g);

enum class Parity { even, odd, mixed };

// Formal linear combination of generators over Q(sqrt(p)); no zero
// coefficients are stored. The radicand travels with the element so that
// scalar arithmetic stays within one quadratic extension.
class AlgebraElement {
 public:
  explicit AlgebraElement(unsigned p) : p_(p) {}

  unsigned p() const { return p_; }
  const std::map<GeneratorId, QuadScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const GeneratorId& g, const QuadScalar& c);

  // even/odd iff every stored generator has that parity; mixed otherwise.
  // The zero element counts as even.
  Parity parity() const;

  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.terms_ == y.terms_;
  }

 private:
  unsigned p_;
  std::map<GeneratorId, QuadScalar> terms_;
};

AlgebraElement ae_zero(unsigned p);
AlgebraElement ae_generator(const GeneratorId& g, unsigned p);
AlgebraElement ae_add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement ae_scale(const QuadScalar& c, const AlgebraElement& x);

// Superbracket of basis generators:
//   [[e_{ij}^s, e_{kl}^t]] = d_{jk} e_{il}^{s+t} - (-1)^{st} d_{il} e_{kj}^{s+t}.
AlgebraElement bracket(const GeneratorId& x, const GeneratorId& y, unsigned p);

// Bilinear extension; both arguments must be parity-homogeneous (the sign
// rule is undefined for mixed elements). Throws std::invalid_argument.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

// Creation/annihilation label: kind 'b' (even) or 'f' (odd), sign +1 for
// creation / -1 for annihilation, index 1..n.
struct CaoId {
  char kind = 'b';
  int sign = +1;
  unsigned index = 1;
};

// b_i^+ -> e_{i0}^0, b_i^- -> e_{0i}^0, f_i^+ -> e_{i0}^1, f_i^- -> e_{0i}^1.
GeneratorId cao_embed(const CaoId& c);

// 0 for kind 'b', 1 for kind 'f'.
unsigned cao_parity(const CaoId& c);

// All 4n creation/annihilation labels: b_1..b_n, f_1..f_n, each sign.
std::vector<CaoId> all_caos(unsigned n);

// Defining representation by matrices of order 2(n+1):
// e_{ij}^0 -> E_ij in both diagonal blocks, e_{ij}^1 -> E_ij in both
// anti-diagonal blocks.
Matrix<Rational> defining_rep(const GeneratorId& g, unsigned n);

// Linear extension of defining_rep; requires every coefficient rational.
Matrix<Rational> rep_of_element(const AlgebraElement& x, unsigned n);

struct QStatReport {
  bool ok = true;
  unsigned long long checks = 0;
  std::vector<std::string> violations;
};

// Expands the quadratic and triple relations of the creation/annihilation
// operators through the superbracket, for all index/parity tuples:
//   [[a_i^x(s), a_j^x(t)]] = 0 for like signs x;
//   [[[[a_i^+(s), a_j^-(t)]], a_k^+(w)]] =
//       d_{jk} a_i^+(s+t+w) + (-1)^{st+tw+ws} d_{ij} a_k^+(s+t+w);
//   [[[[a_i^+(s), a_j^-(t)]], a_k^-(w)]] =
//       -(-1)^{st} d_{ij} a_k^-(s+t+w) - (-1)^{tw+ws} d_{ik} a_j^-(s+t+w).
// inject_fault flips the sign of the d_{ij} term of the second relation so
// failure reporting can be exercised.
QStatReport verify_q_statistics(unsigned n, bool inject_fault = false);

// Super-antisymmetry [[x,y]] = -(-1)^{st}[[y,x]] over all generator pairs
// and the super Jacobi identity
//   [[x,[[y,z]]]] = [[[[x,y]],z]] + (-1)^{st}[[y,[[x,z]]]]
// over all generator triples.
QStatReport verify_superbracket_axioms(unsigned n);

// The representation identity
//   rep([[x,y]]) = rep(x) rep(y) - (-1)^{st} rep(y) rep(x)
// over all generator pairs.
QStatReport verify_defining_rep(unsigned n);

// Root datum: root vector in the eps-basis with its (even, odd) multiplicity.
struct RootInfo {
  std::vector<int> root;
  unsigned even_mult = 0;
  unsigned odd_mult = 0;
};

// The zero root with multiplicity (0, n+1), then eps_i - eps_j for i != j,
// each with multiplicity (1, 1).
std::vector<RootInfo> roots(unsigned n);

// eps_i - eps_j with i < j.
std::vector<RootInfo> positive_roots(unsigned n);

// Dimension of the span of the 4n creation/annihilation operators together
// with all their pairwise superbrackets (rank over Q); equals 2(n+1)^2 - 1.
std::size_t cao_span_dimension(unsigned n);

}  // namespace qfock
