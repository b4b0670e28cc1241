#include "qfock/quadscalar.hpp"

#include <cmath>
#include <stdexcept>

namespace qfock {

namespace {

// Shared radicand of two operands; zero is compatible with any radicand.
unsigned common_radicand(const QuadScalar& x, const QuadScalar& y) {
  if (x.p() == y.p()) return x.p();
  if (x.is_zero()) return y.p();
  if (y.is_zero()) return x.p();
  throw std::invalid_argument("QuadScalar radicand mismatch: sqrt(" + std::to_string(x.p()) +
                              ") vs sqrt(" + std::to_string(y.p()) + ")");
}

int rational_sign(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

}  // namespace

QuadScalar::QuadScalar(Rational a, Rational b, unsigned p) : a_(std::move(a)), b_(std::move(b)), p_(p) {
  if (p_ == 0) throw std::invalid_argument("QuadScalar radicand must be positive");
  const unsigned long long q = isqrt_floor(p_);
  if (q * q == p_ && b_ != 0) {
    a_ += b_ * Integer(q);
    b_ = 0;
  }
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
  const unsigned p = common_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  p_ = p;
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
  const unsigned p = common_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  p_ = p;
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
  *this = qs_mul(*this, o);
  return *this;
}

QuadScalar qs_normalize(const Rational& a, const Rational& b, unsigned p) {
  return QuadScalar(a, b, p);
}

QuadScalar qs_mul(const QuadScalar& x, const QuadScalar& y) {
  const unsigned p = common_radicand(x, y);
  // (a1 + b1 sqrt(p))(a2 + b2 sqrt(p)) = (a1 a2 + p b1 b2) + (a1 b2 + a2 b1) sqrt(p)
  Rational a = x.a() * y.a() + Rational(p) * x.b() * y.b();
  Rational b = x.a() * y.b() + y.a() * x.b();
  return QuadScalar(std::move(a), std::move(b), p);
}

QuadScalar qs_inv(const QuadScalar& x) {
  if (x.is_zero()) throw std::domain_error("QuadScalar division by zero");
  // Norm a^2 - p b^2 vanishes only at zero: sqrt(p) is irrational whenever
  // b survives normalization.
  const Rational norm = x.a() * x.a() - Rational(x.p()) * x.b() * x.b();
  return QuadScalar(x.a() / norm, -x.b() / norm, x.p());
}

int qs_sign(const QuadScalar& x) {
  const int sa = rational_sign(x.a());
  const int sb = rational_sign(x.b());
  if (sb == 0) return sa;
  if (sa == 0) return sb;  // sqrt(p) > 0
  if (sa == sb) return sa;
  // Opposite signs: a + b sqrt(p) has the sign of whichever magnitude wins,
  // decided by comparing a^2 against p b^2.
  const Rational a2 = x.a() * x.a();
  const Rational pb2 = Rational(x.p()) * x.b() * x.b();
  const int cmp = a2 == pb2 ? 0 : (a2 > pb2 ? 1 : -1);
  return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
}

std::string render_quadscalar(const QuadScalar& x) {
  if (x.b() == 0) return render_rational(x.a());
  const std::string radical = render_rational(x.b() < 0 ? -x.b() : x.b()) + "*sqrt(" + std::to_string(x.p()) + ")";
  if (x.a() == 0) return (x.b() < 0 ? "-" : "") + radical;
  return render_rational(x.a()) + (x.b() < 0 ? " - " : " + ") + radical;
}

QuadScalar parse_quadscalar(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty QuadScalar literal");

  // Split an optional trailing "<b>*sqrt(<p>)" term off "a +/- b*sqrt(p)".
  const auto sq = s.find("sqrt(");
  if (sq == std::string::npos) return QuadScalar(parse_rational(s), 0, 1);
  if (s.back() != ')') throw std::invalid_argument("malformed QuadScalar literal: " + text);

  const std::string ptxt = s.substr(sq + 5, s.size() - sq - 6);
  const long long pval = std::stoll(ptxt);
  if (pval <= 0) throw std::invalid_argument("QuadScalar radicand must be positive");

  std::string head = s.substr(0, sq);  // "", "-", "b*", "a+b*", "a-b*"
  if (head.empty() || head == "+") return QuadScalar(0, 1, static_cast<unsigned>(pval));
  if (head == "-") return QuadScalar(0, -1, static_cast<unsigned>(pval));
  if (head.back() != '*') throw std::invalid_argument("malformed QuadScalar literal: " + text);
  head.pop_back();

  // Find the sign that separates the rational part from the radical part:
  // scan for '+'/'-' that is not leading and not inside "num/den" (digits
  // and '/' only, so any later sign is a separator).
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < head.size(); ++i)
    if (head[i] == '+' || head[i] == '-') split = i;
  if (split == std::string::npos) return QuadScalar(0, parse_rational(head), static_cast<unsigned>(pval));
  const Rational a = parse_rational(head.substr(0, split));
  std::string btxt = head.substr(split);  // keeps the sign
  if (btxt == "+" || btxt == "-") btxt += "1";
  return QuadScalar(a, parse_rational(btxt), static_cast<unsigned>(pval));
}

long double qs_to_ld(const QuadScalar& x) {
  const long double a = static_cast<long double>(x.a().convert_to<double>());
  const long double b = static_cast<long double>(x.b().convert_to<double>());
  return a + b * std::sqrt(static_cast<long double>(x.p()));
}

}  // namespace qfock
