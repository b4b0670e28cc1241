#pragma once

#include <string>

#include "qfock/rational.hpp"

namespace qfock {

// Exact element a + b*sqrt(p) of the real quadratic extension Q(sqrt(p)),
// p a fixed positive integer. When p is a perfect square q^2 the radical is
// folded at construction time (a <- a + b*q, b <- 0), so comparisons stay
// uniform across square and non-square radicands.
//
// Two QuadScalars interoperate only when their radicands agree; the only
// exception is that an exact zero is compatible with every radicand.
class QuadScalar {
 public:
  QuadScalar() : a_(0), b_(0), p_(1) {}
  QuadScalar(Rational a, Rational b, unsigned p);

  static QuadScalar zero(unsigned p) { return QuadScalar(0, 0, p); }
  static QuadScalar one(unsigned p) { return QuadScalar(1, 0, p); }
  static QuadScalar of(const Rational& a, unsigned p) { return QuadScalar(a, 0, p); }
  // 0 + 1*sqrt(p)
  static QuadScalar sqrt_p(unsigned p) { return QuadScalar(0, 1, p); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  unsigned p() const { return p_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  QuadScalar operator-() const { return QuadScalar(-a_, -b_, p_); }
  QuadScalar& operator+=(const QuadScalar& o);
  QuadScalar& operator-=(const QuadScalar& o);
  QuadScalar& operator*=(const QuadScalar& o);
  friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
  friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
  friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    if (x.is_zero() && y.is_zero()) return true;
    return x.p_ == y.p_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

 private:
  Rational a_, b_;
  unsigned p_;
};

// Canonical form of a + b*sqrt(p); folds the radical when p is a square.
QuadScalar qs_normalize(const Rational& a, const Rational& b, unsigned p);

// Ring product; throws std::invalid_argument on radicand mismatch.
QuadScalar qs_mul(const QuadScalar& x, const QuadScalar& y);

// Multiplicative inverse via the conjugate over the norm a^2 - p b^2.
// Throws std::domain_error when x = 0.
QuadScalar qs_inv(const QuadScalar& x);

// Exact sign of the real number a + b*sqrt(p), in {-1, 0, +1}, decided by
// integer comparisons only (a^2 vs p b^2 with case analysis on signs).
int qs_sign(const QuadScalar& x);

// "a + b*sqrt(p)" with rationals rendered as "num/den"; pure-rational values
// render as just "a", pure-radical values as "b*sqrt(p)".
std::string render_quadscalar(const QuadScalar& x);

// Inverse of render_quadscalar (the radicand is part of the text).
QuadScalar parse_quadscalar(const std::string& text);

long double qs_to_ld(const QuadScalar& x);

// Field inverse hook used by the generic elimination routines.
inline QuadScalar field_inverse(const QuadScalar& x) { return qs_inv(x); }

}  // namespace qfock
