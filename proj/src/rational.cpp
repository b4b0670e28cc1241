#include "qfock/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace qfock {

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Integer num = 1, den = 1;
  for (long long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

Integer falling_factorial(const Integer& a, unsigned k) {
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) r *= a - i;
  return r;
}

unsigned long long isqrt_floor(unsigned long long v) {
  if (v == 0) return 0;
  unsigned long long q = static_cast<unsigned long long>(std::sqrt(static_cast<double>(v)));
  while (q > 0 && q * q > v) --q;
  while ((q + 1) * (q + 1) <= v) ++q;
  return q;
}

std::string render_rational(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    const Integer num(s.substr(0, slash));
    const Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(std::string("malformed rational literal: ") + text);
  }
}

}  // namespace qfock
