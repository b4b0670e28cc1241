#include "qfock/mpoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qfock {

bool GrlexDesc::operator()(const std::vector<unsigned>& x,
                           const std::vector<unsigned>& y) const {
  const unsigned long long dx = std::accumulate(x.begin(), x.end(), 0ULL);
  const unsigned long long dy = std::accumulate(y.begin(), y.end(), 0ULL);
  if (dx != dy) return dx > dy;
  return x > y;
}

MPoly MPoly::constant(unsigned arity, const Rational& c) {
  MPoly out(arity);
  out.add_term(std::vector<unsigned>(arity, 0), c);
  return out;
}

MPoly MPoly::variable(unsigned arity, unsigned index) {
  if (index >= arity) throw std::out_of_range("variable index exceeds arity");
  MPoly out(arity);
  std::vector<unsigned> expo(arity, 0);
  expo[index] = 1;
  out.add_term(expo, Rational(1));
  return out;
}

void MPoly::add_term(const std::vector<unsigned>& expo, const Rational& c) {
  if (expo.size() != arity_) throw std::invalid_argument("exponent arity mismatch");
  if (c == 0) return;
  auto it = terms_.find(expo);
  if (it == terms_.end()) {
    terms_.emplace(expo, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MPoly MPoly::operator-() const {
  MPoly out(arity_);
  for (const auto& [expo, c] : terms_) out.terms_.emplace(expo, -c);
  return out;
}

MPoly operator+(const MPoly& x, const MPoly& y) {
  if (x.arity_ != y.arity_) throw std::invalid_argument("arity mismatch");
  MPoly out = x;
  for (const auto& [expo, c] : y.terms_) out.add_term(expo, c);
  return out;
}

MPoly operator-(const MPoly& x, const MPoly& y) { return x + (-y); }

MPoly operator*(const MPoly& x, const MPoly& y) {
  if (x.arity_ != y.arity_) throw std::invalid_argument("arity mismatch");
  MPoly out(x.arity_);
  std::vector<unsigned> expo(x.arity_, 0);
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      for (unsigned i = 0; i < x.arity_; ++i) expo[i] = ex[i] + ey[i];
      out.add_term(expo, cx * cy);
    }
  }
  return out;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly acc = MPoly::constant(arity_, Rational(1));
  MPoly base = *this;
  while (e > 0) {
    if (e & 1U) acc = acc * base;
    base = base * base;
    e >>= 1U;
  }
  return acc;
}

Rational MPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != arity_) throw std::invalid_argument("evaluation arity mismatch");
  Rational total(0);
  for (const auto& [expo, c] : terms_) {
    Rational term = c;
    for (unsigned i = 0; i < arity_; ++i) {
      for (unsigned e = 0; e < expo[i]; ++e) term *= point[i];
    }
    total += term;
  }
  return total;
}

std::string render_mpoly(const MPoly& poly, const std::vector<std::string>& names) {
  if (names.size() != poly.arity()) throw std::invalid_argument("name list arity mismatch");
  if (poly.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [expo, c] : poly.terms()) {
    if (!first) out << " + ";
    first = false;
    std::string vars;
    for (unsigned i = 0; i < poly.arity(); ++i) {
      if (expo[i] == 0) continue;
      if (!vars.empty()) vars += ' ';
      vars += names[i];
      if (expo[i] > 1) vars += '^' + std::to_string(expo[i]);
    }
    if (vars.empty()) {
      out << render_rational(c);
    } else {
      out << render_rational(c) << " * " << vars;
    }
  }
  return out.str();
}

MPoly elem_sym(int r, unsigned nvars) {
  if (r < 0 || r > static_cast<int>(nvars)) return MPoly::zero(nvars);
  // dp[j] = e_j of the variables processed so far; each variable may appear
  // at most once, so j updates descend.
  std::vector<MPoly> dp;
  dp.reserve(static_cast<size_t>(r) + 1);
  dp.push_back(MPoly::constant(nvars, Rational(1)));
  for (int j = 1; j <= r; ++j) dp.push_back(MPoly::zero(nvars));
  for (unsigned v = 0; v < nvars; ++v) {
    const MPoly xv = MPoly::variable(nvars, v);
    for (int j = r; j >= 1; --j) dp[j] = dp[j] + dp[j - 1] * xv;
  }
  return dp[r];
}

MPoly complete_sym(int r, unsigned nvars) {
  if (r < 0) return MPoly::zero(nvars);
  if (nvars == 0) return r == 0 ? MPoly::constant(0, Rational(1)) : MPoly::zero(0);
  // dp[j] = h_j of the variables processed so far; variables repeat, so j
  // updates ascend.
  std::vector<MPoly> dp;
  dp.reserve(static_cast<size_t>(r) + 1);
  dp.push_back(MPoly::constant(nvars, Rational(1)));
  for (int j = 1; j <= r; ++j) dp.push_back(MPoly::zero(nvars));
  for (unsigned v = 0; v < nvars; ++v) {
    const MPoly xv = MPoly::variable(nvars, v);
    for (int j = 1; j <= r; ++j) dp[j] = dp[j] + dp[j - 1] * xv;
  }
  return dp[r];
}

MPoly schur_hook(unsigned a, unsigned b, unsigned nvars) {
  MPoly total = MPoly::zero(nvars);
  for (unsigned j = 0; j <= b; ++j) {
    const MPoly term =
        complete_sym(static_cast<int>(a + 1 + j), nvars) *
        elem_sym(static_cast<int>(b - j), nvars);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

}  // namespace qfock
