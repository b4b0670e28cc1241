#include "qfock/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace qfock {

namespace {

// Canonical creation word of a key: b_1 x k_1, f_1 x l_1, b_2 x k_2, ...
std::vector<CaoId> creation_word(const BasisKey& key) {
  std::vector<CaoId> word;
  for (unsigned i = 1; i <= key.k.size(); ++i) {
    for (unsigned t = 0; t < key.k[i - 1]; ++t) word.push_back(CaoId{'b', +1, i});
    if (key.l[i - 1] == 1) word.push_back(CaoId{'f', +1, i});
  }
  return word;
}

// Multiplies the creation operator c onto the front of each canonical word
// and rewrites the result in canonical order, tracking the crossing signs
// explicitly: a b never produces a sign, an f acquires -1 for every f it
// crosses and squares to zero.
FockState prepend_creation(const CaoId& c, const FockState& v) {
  FockState out(v.n(), v.p());
  const unsigned j0 = c.index - 1;
  for (const auto& [key, coeff] : v.terms()) {
    if (c.kind == 'b') {
      BasisKey t = key;
      t.k[j0] += 1;
      out.add_term(t, coeff);
      continue;
    }
    if (key.l[j0] == 1) continue;
    int sign = +1;
    for (unsigned i0 = 0; i0 < j0; ++i0)
      if (key.l[i0] == 1) sign = -sign;
    BasisKey t = key;
    t.l[j0] = 1;
    out.add_term(t, coeff * QuadScalar::of(Rational(sign), v.p()));
  }
  return out;
}

bool is_creator(const GeneratorId& x) { return x.j == 0 && x.i >= 1; }
bool is_annihilator(const GeneratorId& x) { return x.i == 0 && x.j >= 1; }

FockState oracle_word(const GeneratorId& x, const std::vector<CaoId>& word,
                      std::size_t pos, unsigned n, unsigned p) {
  if (pos == word.size()) {
    // Seed rules on the vacuum.
    FockState out(n, p);
    if (x.i == 0 && x.j == 0) {
      out.add_term(vacuum_key(n),
                   x.sigma == 0 ? QuadScalar::of(Rational(p), p) : QuadScalar::sqrt_p(p));
      return out;
    }
    if (is_creator(x)) {
      BasisKey key = vacuum_key(n);
      if (x.sigma == 0)
        key.k[x.i - 1] = 1;
      else
        key.l[x.i - 1] = 1;
      out.add_term(key, QuadScalar::one(p));
      return out;
    }
    // Annihilators and all of q(n) (both indices >= 1) kill the vacuum.
    return out;
  }

  const CaoId head = word[pos];
  const GeneratorId hg = cao_embed(head);

  FockState out(n, p);
  const AlgebraElement br = bracket(x, hg, p);
  for (const auto& [g, c] : br.terms())
    out = fs_add(out, fs_scale(c, oracle_word(g, word, pos + 1, n, p)));

  const FockState deeper = oracle_word(x, word, pos + 1, n, p);
  if (!deeper.is_zero()) {
    const int sign = (x.sigma == 1 && cao_parity(head) == 1) ? -1 : +1;
    FockState moved = prepend_creation(head, deeper);
    if (sign < 0) moved = fs_scale(QuadScalar::of(Rational(-1), p), moved);
    out = fs_add(out, moved);
  }
  return out;
}

}  // namespace

FockState oracle_apply(const GeneratorId& x, const FockState& v) {
  FockState out(v.n(), v.p());
  for (const auto& [key, coeff] : v.terms()) {
    const std::vector<CaoId> word = creation_word(key);
    out = fs_add(out, fs_scale(coeff, oracle_word(x, word, 0, v.n(), v.p())));
  }
  return out;
}

QuadScalar inner_product_via_oracle(const FockState& u, const FockState& v) {
  if (u.n() != v.n() || u.p() != v.p())
    throw std::invalid_argument("inner_product_via_oracle: module mismatch");
  const unsigned n = u.n();
  const unsigned p = u.p();
  QuadScalar acc = QuadScalar::zero(p);
  for (const auto& [ku, cu] : u.terms())
    for (const auto& [kv, cv] : v.terms()) {
      if (weight_of(ku, p) != weight_of(kv, p)) continue;
      FockState s = fs_basis(kv, p);
      for (unsigned i = 1; i <= n && !s.is_zero(); ++i) {
        for (unsigned t = 0; t < ku.k[i - 1]; ++t)
          s = oracle_apply(cao_embed(CaoId{'b', -1, i}), s);
        for (unsigned t = 0; t < ku.l[i - 1]; ++t)
          s = oracle_apply(cao_embed(CaoId{'f', -1, i}), s);
      }
      acc += cu * cv * s.coefficient(vacuum_key(n));
    }
  return acc;
}

}  // namespace qfock
