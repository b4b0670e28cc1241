#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qfock/rational.hpp"

namespace qfock {

// Orders exponent vectors by descending total degree, ties broken by
// lexicographically larger vector first (graded-lexicographic, descending),
// so map iteration yields the canonical term order for rendering.
struct GrlexDesc {
  bool operator()(const std::vector<unsigned>& x, const std::vector<unsigned>& y) const;
};

// Sparse exact polynomial in a fixed number of variables; no zero
// coefficients stored, every exponent vector has length arity().
class MPoly {
 public:
  explicit MPoly(unsigned arity) : arity_(arity) {}

  static MPoly zero(unsigned arity) { return MPoly(arity); }
  static MPoly constant(unsigned arity, const Rational& c);
  static MPoly variable(unsigned arity, unsigned index);

  unsigned arity() const { return arity_; }
  const std::map<std::vector<unsigned>, Rational, GrlexDesc>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<unsigned>& expo, const Rational& c);

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& x, const MPoly& y);
  friend MPoly operator-(const MPoly& x, const MPoly& y);
  friend MPoly operator*(const MPoly& x, const MPoly& y);
  friend bool operator==(const MPoly& x, const MPoly& y) {
    return x.arity_ == y.arity_ && x.terms_ == y.terms_;
  }
  friend bool operator!=(const MPoly& x, const MPoly& y) { return !(x == y); }

  MPoly pow(unsigned e) const;
  Rational eval(const std::vector<Rational>& point) const;

 private:
  unsigned arity_;
  std::map<std::vector<unsigned>, Rational, GrlexDesc> terms_;
};

// "c * x0^a0 x1^a1 + ..." in descending graded-lexicographic term order;
// name list must match the arity.
std::string render_mpoly(const MPoly& poly, const std::vector<std::string>& names);

// Elementary symmetric polynomial e_r in nvars variables; e_0 = 1, zero for
// r < 0 or r > nvars.
MPoly elem_sym(int r, unsigned nvars);

// Complete homogeneous symmetric polynomial h_r in nvars variables; h_0 = 1,
// zero for r < 0.
MPoly complete_sym(int r, unsigned nvars);

// Schur polynomial of the Frobenius hook (a|b):
//   s_(a|b) = h_{a+1} e_b - h_{a+2} e_{b-1} + ... + (-1)^b h_{a+b+1}.
MPoly schur_hook(unsigned a, unsigned b, unsigned nvars);

}  // namespace qfock
