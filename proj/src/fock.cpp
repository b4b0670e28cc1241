#include "qfock/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qfock {

std::string render_key(const BasisKey& key) {
  std::ostringstream os;
  for (std::size_t i = 0; i < key.k.size(); ++i) {
    if (i) os << ';';
    os << key.k[i] << ',' << key.l[i];
  }
  return os.str();
}

BasisKey parse_key(const std::string& text) {
  BasisKey key;
  std::istringstream is(text);
  std::string pair;
  while (std::getline(is, pair, ';')) {
    const auto comma = pair.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("parse_key: expected \"k,l\" pairs");
    const unsigned k = static_cast<unsigned>(std::stoul(pair.substr(0, comma)));
    const unsigned l = static_cast<unsigned>(std::stoul(pair.substr(comma + 1)));
    if (l > 1) throw std::invalid_argument("parse_key: l entries must be 0 or 1");
    key.k.push_back(k);
    key.l.push_back(l);
  }
  if (key.k.empty()) throw std::invalid_argument("parse_key: empty key");
  return key;
}

BasisKey vacuum_key(unsigned n) {
  BasisKey key;
  key.k.assign(n, 0);
  key.l.assign(n, 0);
  return key;
}

unsigned level(const BasisKey& key) {
  unsigned sum = 0;
  for (unsigned v : key.k) sum += v;
  for (unsigned v : key.l) sum += v;
  return sum;
}

Weight weight_of(const BasisKey& key, unsigned p) {
  Weight w;
  w.reserve(key.k.size() + 1);
  w.push_back(static_cast<long long>(p) - static_cast<long long>(level(key)));
  for (std::size_t i = 0; i < key.k.size(); ++i)
    w.push_back(static_cast<long long>(key.k[i]) + key.l[i]);
  return w;
}

void FockState::add_term(const BasisKey& key, const QuadScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

QuadScalar FockState::coefficient(const BasisKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? QuadScalar::zero(p_) : it->second;
}

FockState fs_zero(unsigned n, unsigned p) { return FockState(n, p); }

FockState fs_basis(const BasisKey& key, unsigned p) {
  FockState out(static_cast<unsigned>(key.k.size()), p);
  out.add_term(key, QuadScalar::one(p));
  return out;
}

FockState fs_add(const FockState& x, const FockState& y) {
  FockState out = x;
  for (const auto& [key, c] : y.terms()) out.add_term(key, c);
  return out;
}

FockState fs_sub(const FockState& x, const FockState& y) {
  FockState out = x;
  for (const auto& [key, c] : y.terms()) out.add_term(key, -c);
  return out;
}

FockState fs_scale(const QuadScalar& c, const FockState& x) {
  FockState out(x.n(), x.p());
  for (const auto& [key, cx] : x.terms()) out.add_term(key, c * cx);
  return out;
}

namespace {

// (-1)^{l_1 + ... + l_m} with m counted 1-based; m = 0 gives +1.
int sign_pre(const BasisKey& key, unsigned m) {
  unsigned s = 0;
  for (unsigned i = 0; i < m; ++i) s += key.l[i];
  return s % 2 == 0 ? +1 : -1;
}

// (-1)^{l_{from+1} + ... + l_n} with from counted 1-based.
int sign_post(const BasisKey& key, unsigned from) {
  unsigned s = 0;
  for (std::size_t i = from; i < key.l.size(); ++i) s += key.l[i];
  return s % 2 == 0 ? +1 : -1;
}

// (-1)^{l_i + ... + l_n} with i counted 1-based (the sum includes l_i).
int sign_tail(const BasisKey& key, unsigned i) { return sign_post(key, i - 1); }

QuadScalar qs_int(long long v, unsigned p) { return QuadScalar::of(Rational(v), p); }

void annihilate_f(unsigned j0, const BasisKey& key, const QuadScalar& coeff,
                  unsigned p, FockState& out) {
  const unsigned n = static_cast<unsigned>(key.k.size());
  const long long L = level(key);
  const long long kj = key.k[j0];

  if (key.l[j0] == 1) {
    BasisKey t = key;
    t.l[j0] = 0;
    out.add_term(t, coeff * qs_int(sign_pre(key, j0) * (static_cast<long long>(p) + 1 + kj - L), p));
  }
  if (kj >= 1) {
    BasisKey t = key;
    t.k[j0] -= 1;
    out.add_term(t, coeff * qs_int(sign_pre(key, n) * kj, p) * QuadScalar::sqrt_p(p));
  }
  if (key.l[j0] == 0 && kj >= 2) {
    BasisKey t = key;
    t.k[j0] -= 2;
    t.l[j0] = 1;
    out.add_term(t, coeff * qs_int(-sign_pre(key, j0) * kj * (kj - 1), p));
  }
  if (kj >= 1) {
    for (unsigned i0 = 0; i0 < n; ++i0) {
      if (i0 == j0) continue;
      const long long ki = key.k[i0];
      if (key.l[i0] == 0 && ki >= 1) {
        BasisKey t = key;
        t.k[j0] -= 1;
        t.k[i0] -= 1;
        t.l[i0] = 1;
        out.add_term(t, coeff * qs_int(-sign_pre(key, i0) * ki * kj, p));
      } else if (key.l[i0] == 1) {
        BasisKey t = key;
        t.k[j0] -= 1;
        t.k[i0] += 1;
        t.l[i0] = 0;
        out.add_term(t, coeff * qs_int(sign_pre(key, i0) * kj, p));
      }
    }
  }
}

void annihilate_b(unsigned j0, const BasisKey& key, const QuadScalar& coeff,
                  unsigned p, FockState& out) {
  const unsigned n = static_cast<unsigned>(key.k.size());
  const long long L = level(key);
  const long long kj = key.k[j0];
  const long long lj = key.l[j0];
  const int post = sign_post(key, j0 + 1);

  if (kj >= 1) {
    BasisKey t = key;
    t.k[j0] -= 1;
    out.add_term(t, coeff * qs_int(kj * (static_cast<long long>(p) + 1 - lj - L), p));
  }
  if (lj == 1) {
    BasisKey t = key;
    t.l[j0] = 0;
    out.add_term(t, coeff * qs_int(post, p) * QuadScalar::sqrt_p(p));

    for (unsigned i0 = 0; i0 < n; ++i0) {
      if (i0 == j0) continue;
      const int theta = i0 < j0 ? +1 : -1;
      const int tail = sign_tail(key, i0 + 1);
      const long long ki = key.k[i0];
      if (key.l[i0] == 0 && ki >= 1) {
        BasisKey t2 = key;
        t2.l[j0] = 0;
        t2.k[i0] -= 1;
        t2.l[i0] = 1;
        out.add_term(t2, coeff * qs_int(post * tail * theta * ki, p));
      } else if (key.l[i0] == 1) {
        BasisKey t2 = key;
        t2.l[j0] = 0;
        t2.k[i0] += 1;
        t2.l[i0] = 0;
        out.add_term(t2, coeff * qs_int(-post * tail * theta, p));
      }
    }
  }
}

}  // namespace

FockState apply_create(const CaoId& c, const FockState& v) {
  if (c.sign <= 0) throw std::invalid_argument("apply_create: sign must be +1");
  if (c.index < 1 || c.index > v.n())
    throw std::invalid_argument("apply_create: index out of range");
  const unsigned j0 = c.index - 1;
  FockState out(v.n(), v.p());
  for (const auto& [key, coeff] : v.terms()) {
    if (c.kind == 'b') {
      BasisKey t = key;
      t.k[j0] += 1;
      out.add_term(t, coeff);
    } else {
      if (key.l[j0] == 1) continue;
      BasisKey t = key;
      t.l[j0] = 1;
      out.add_term(t, coeff * qs_int(sign_pre(key, j0), v.p()));
    }
  }
  return out;
}

FockState apply_annihilate(const CaoId& c, const FockState& v) {
  if (c.sign >= 0) throw std::invalid_argument("apply_annihilate: sign must be -1");
  if (c.index < 1 || c.index > v.n())
    throw std::invalid_argument("apply_annihilate: index out of range");
  const unsigned j0 = c.index - 1;
  FockState out(v.n(), v.p());
  for (const auto& [key, coeff] : v.terms()) {
    if (c.kind == 'f')
      annihilate_f(j0, key, coeff, v.p(), out);
    else
      annihilate_b(j0, key, coeff, v.p(), out);
  }
  return out;
}

FockState apply_cao(const CaoId& c, const FockState& v) {
  return c.sign > 0 ? apply_create(c, v) : apply_annihilate(c, v);
}

FockState x_vector(const BasisKey& key, unsigned p) {
  const unsigned n = static_cast<unsigned>(key.k.size());
  FockState out(n, p);
  out.add_term(key, qs_int(sign_pre(key, n), p) * QuadScalar::sqrt_p(p));
  for (unsigned i0 = 0; i0 < n; ++i0) {
    const int s = sign_pre(key, i0 + 1);
    if (key.l[i0] == 1) {
      BasisKey t = key;
      t.k[i0] += 1;
      t.l[i0] = 0;
      out.add_term(t, qs_int(-s, p));
    } else if (key.k[i0] >= 1) {
      BasisKey t = key;
      t.k[i0] -= 1;
      t.l[i0] = 1;
      out.add_term(t, qs_int(-s * static_cast<long long>(key.k[i0]), p));
    }
  }
  return out;
}

namespace {

QuadScalar inner_keys(const BasisKey& u, const BasisKey& v, unsigned p) {
  if (weight_of(u, p) != weight_of(v, p)) return QuadScalar::zero(p);
  FockState s = fs_basis(v, p);
  const unsigned n = static_cast<unsigned>(u.k.size());
  for (unsigned i = 1; i <= n && !s.is_zero(); ++i) {
    for (unsigned t = 0; t < u.k[i - 1]; ++t) s = apply_annihilate(CaoId{'b', -1, i}, s);
    for (unsigned t = 0; t < u.l[i - 1]; ++t) s = apply_annihilate(CaoId{'f', -1, i}, s);
  }
  return s.coefficient(vacuum_key(n));
}

}  // namespace

QuadScalar inner_product(const FockState& u, const FockState& v) {
  if (u.n() != v.n() || u.p() != v.p())
    throw std::invalid_argument("inner_product: module mismatch");
  QuadScalar acc = QuadScalar::zero(u.p());
  for (const auto& [ku, cu] : u.terms())
    for (const auto& [kv, cv] : v.terms()) acc += cu * cv * inner_keys(ku, kv, u.p());
  return acc;
}

namespace {

void enumerate_keys(unsigned n, unsigned budget, bool exact, BasisKey& cur,
                    std::vector<BasisKey>& out) {
  if (cur.k.size() == n) {
    if (!exact || budget == 0) out.push_back(cur);
    return;
  }
  for (unsigned l = 0; l <= 1 && l <= budget; ++l)
    for (unsigned k = 0; k + l <= budget; ++k) {
      cur.k.push_back(k);
      cur.l.push_back(l);
      enumerate_keys(n, budget - k - l, exact, cur, out);
      cur.k.pop_back();
      cur.l.pop_back();
    }
}

}  // namespace

std::vector<BasisKey> keys_up_to_level(unsigned n, unsigned cap) {
  std::vector<BasisKey> out;
  BasisKey cur;
  enumerate_keys(n, cap, false, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BasisKey> keys_at_level(unsigned n, unsigned lvl) {
  std::vector<BasisKey> out;
  BasisKey cur;
  enumerate_keys(n, lvl, true, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qfock
