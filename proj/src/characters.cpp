#include "qfock/characters.hpp"

#include <algorithm>

#include "qfock/modstruct.hpp"

namespace qfock {

MPoly char_from_weights(unsigned n, unsigned p) {
  MPoly total = MPoly::zero(n + 1);
  for (const std::vector<unsigned>& m : vp_weights(n, p)) {
    const unsigned long long mult = vp_mult(m, p);
    if (mult == 0) continue;
    const Weight w = weight_from_m(m, p);
    std::vector<unsigned> expo(n + 1, 0);
    for (unsigned i = 0; i <= n; ++i) expo[i] = static_cast<unsigned>(w[i]);
    total.add_term(expo, Rational(static_cast<long long>(mult)));
  }
  return total;
}

MPoly char_formula(unsigned n, unsigned p) {
  MPoly total = MPoly::zero(n + 1);
  for (int j = static_cast<int>(n); j >= 0; j -= 2) {
    const int hidx = static_cast<int>(p) - j;
    if (hidx < 0) continue;
    total = total + complete_sym(hidx, n + 1) * elem_sym(j, n + 1);
  }
  return total;
}

MPoly char_schur_sum(unsigned n, unsigned p) {
  MPoly total = MPoly::zero(n + 1);
  if (p == 0) return total;
  const unsigned top = std::min(n, p - 1);
  for (unsigned i = 0; i <= top; ++i) {
    total = total + schur_hook(p - 1 - i, i, n + 1);
  }
  return total;
}

}  // namespace qfock
