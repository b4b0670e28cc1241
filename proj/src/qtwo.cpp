#include "qfock/qtwo.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qfock {

namespace {

QuadScalar qi(long long v, unsigned p) { return QuadScalar::of(Rational(v), p); }

QuadScalar qint(const Integer& v, unsigned p) { return QuadScalar::of(Rational(v), p); }

}  // namespace

void Q2State::add_term(const Q2Key& key, const QuadScalar& c) {
  if (key.kind != 'v' && key.kind != 'w') throw std::invalid_argument("bad kind");
  if (key.kind == 'w' && key.k == 0) throw std::invalid_argument("w needs k >= 1");
  if (c == QuadScalar::zero(p_)) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second == QuadScalar::zero(p_)) terms_.erase(it);
}

QuadScalar Q2State::coefficient(const Q2Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? QuadScalar::zero(p_) : it->second;
}

Q2State q2_zero(unsigned p) { return Q2State(p); }

Q2State q2_basis(char kind, unsigned k, unsigned p) {
  Q2State out(p);
  out.add_term(Q2Key{kind, k}, QuadScalar::one(p));
  return out;
}

Q2State q2_add(const Q2State& x, const Q2State& y) {
  if (x.p() != y.p()) throw std::invalid_argument("module mismatch");
  Q2State out = x;
  for (const auto& [key, c] : y.terms()) out.add_term(key, c);
  return out;
}

Q2State q2_scale(const QuadScalar& c, const Q2State& x) {
  Q2State out(x.p());
  for (const auto& [key, cx] : x.terms()) out.add_term(key, qs_mul(c, cx));
  return out;
}

Q2State q2_act(const CaoId& op, const Q2State& x) {
  if (op.index != 1) throw std::invalid_argument("rank-one action needs index 1");
  const unsigned p = x.p();
  const long long pp = static_cast<long long>(p);
  Q2State out(p);
  for (const auto& [key, c] : x.terms()) {
    const long long k = static_cast<long long>(key.k);
    if (op.sign > 0) {
      if (op.kind == 'b') {
        out.add_term(Q2Key{key.kind, key.k + 1}, c);
      } else if (key.kind == 'v') {
        out.add_term(Q2Key{'w', key.k + 1}, c);
      }
      continue;
    }
    if (op.kind == 'b') {
      if (key.kind == 'v') {
        if (key.k >= 1) {
          out.add_term(Q2Key{'v', key.k - 1}, qs_mul(c, qi(k * (pp - k + 1), p)));
        }
      } else {
        out.add_term(Q2Key{'v', key.k - 1}, qs_mul(c, QuadScalar::sqrt_p(p)));
        if (key.k >= 2) {
          out.add_term(Q2Key{'w', key.k - 1}, qs_mul(c, qi((k - 1) * (pp - k), p)));
        }
      }
    } else {
      if (key.kind == 'v') {
        if (key.k >= 1) {
          out.add_term(Q2Key{'v', key.k - 1},
                       qs_mul(c, qs_mul(qi(k, p), QuadScalar::sqrt_p(p))));
          if (key.k >= 2) {
            out.add_term(Q2Key{'w', key.k - 1}, qs_mul(c, qi(-k * (k - 1), p)));
          }
        }
      } else {
        out.add_term(Q2Key{'v', key.k - 1}, qs_mul(c, qi(pp, p)));
        if (key.k >= 2) {
          out.add_term(Q2Key{'w', key.k - 1},
                       qs_mul(c, qs_mul(qi(-(k - 1), p), QuadScalar::sqrt_p(p))));
        }
      }
    }
  }
  return out;
}

namespace {

// <kind_x, k | kind_y, k> with the level shared.
QuadScalar q2_pair_inner(char kx, char ky, unsigned k, unsigned p) {
  const Integer poch = falling_factorial(Integer(p), k);
  if (kx == 'v' && ky == 'v') return qint(factorial(k) * poch, p);
  if (kx == 'w' && ky == 'w') return qint(factorial(k - 1) * poch, p);
  return qs_mul(qint(factorial(k) * poch, p), qs_inv(QuadScalar::sqrt_p(p)));
}

}  // namespace

QuadScalar q2_inner(const Q2State& x, const Q2State& y) {
  if (x.p() != y.p()) throw std::invalid_argument("module mismatch");
  const unsigned p = x.p();
  QuadScalar total = QuadScalar::zero(p);
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      if (kx.k != ky.k) continue;
      total += qs_mul(qs_mul(cx, cy), q2_pair_inner(kx.kind, ky.kind, kx.k, p));
    }
  }
  return total;
}

FockState q2_to_fock(const Q2State& x) {
  FockState out(1, x.p());
  for (const auto& [key, c] : x.terms()) {
    BasisKey bk;
    if (key.kind == 'v') {
      bk.k = {key.k};
      bk.l = {0};
    } else {
      bk.k = {key.k - 1};
      bk.l = {1};
    }
    out.add_term(bk, c);
  }
  return out;
}

std::vector<Q2Primitive> q2_primitive_scan(unsigned p) {
  std::vector<Q2Primitive> found;
  const QuadScalar zero = QuadScalar::zero(p);
  for (unsigned k = 1; k <= p; ++k) {
    // Linear conditions A alpha + B beta = 0, one per lowering operator and
    // target vector, with columns read off the closed-form action.
    std::vector<std::pair<QuadScalar, QuadScalar>> eqs;
    for (char kind : {'b', 'f'}) {
      const CaoId op{kind, -1, 1};
      const Q2State av = q2_act(op, q2_basis('v', k, p));
      const Q2State aw = q2_act(op, q2_basis('w', k, p));
      std::set<Q2Key> targets;
      for (const auto& [key, c] : av.terms()) targets.insert(key);
      for (const auto& [key, c] : aw.terms()) targets.insert(key);
      for (const Q2Key& t : targets) {
        eqs.emplace_back(av.coefficient(t), aw.coefficient(t));
      }
    }
    const auto nonzero = std::find_if(eqs.begin(), eqs.end(), [&](const auto& e) {
      return !(e.first == zero) || !(e.second == zero);
    });
    QuadScalar alpha = QuadScalar::one(p);
    QuadScalar beta = zero;
    if (nonzero != eqs.end()) {
      alpha = nonzero->second;
      beta = zero - nonzero->first;
      if (alpha == zero && beta == zero) continue;
    }
    const bool solves = std::all_of(eqs.begin(), eqs.end(), [&](const auto& e) {
      return qs_mul(e.first, alpha) + qs_mul(e.second, beta) == zero;
    });
    if (!solves) continue;
    if (!(alpha == zero)) {
      const QuadScalar inv = qs_inv(alpha);
      beta = qs_mul(beta, inv);
      alpha = QuadScalar::one(p);
    } else {
      beta = QuadScalar::one(p);
    }
    found.push_back(Q2Primitive{k, alpha, beta});
  }
  return found;
}

namespace {

long double fact_ld(unsigned v) {
  long double out = 1.0L;
  for (unsigned i = 2; i <= v; ++i) out *= static_cast<long double>(i);
  return out;
}

OrthoVec make_combo(char kind, unsigned k, unsigned p) {
  const long double s = std::sqrt(static_cast<long double>(k) / p);
  const long double sign = (kind == 'p') ? 1.0L : -1.0L;
  const long double norm2 =
      2.0L * fact_ld(k) * fact_ld(p) / fact_ld(p - k) * (1.0L + sign * s);
  const long double c = 1.0L / std::sqrt(norm2);
  return OrthoVec{kind, k, c, sign * c * std::sqrt(static_cast<long double>(k))};
}

using NumState = std::map<Q2Key, long double>;

NumState num_of(const OrthoVec& v) {
  NumState out;
  out[Q2Key{'v', v.k}] = v.cv;
  if (v.k >= 1 && v.cw != 0.0L) out[Q2Key{'w', v.k}] = v.cw;
  return out;
}

NumState num_act(const CaoId& op, const NumState& x, unsigned p) {
  NumState out;
  for (const auto& [key, c] : x) {
    const Q2State img = q2_act(op, q2_basis(key.kind, key.k, p));
    for (const auto& [tkey, tc] : img.terms()) out[tkey] += c * qs_to_ld(tc);
  }
  return out;
}

long double num_inner(const NumState& x, const NumState& y, unsigned p) {
  long double total = 0.0L;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      if (kx.k != ky.k) continue;
      total += cx * cy * qs_to_ld(q2_pair_inner(kx.kind, ky.kind, kx.k, p));
    }
  }
  return total;
}

}  // namespace

std::vector<OrthoVec> q2_ortho_basis(unsigned p) {
  std::vector<OrthoVec> out;
  out.push_back(OrthoVec{'s', 0, 1.0L, 0.0L});
  for (unsigned k = 1; k <= p; ++k) out.push_back(make_combo('p', k, p));
  for (unsigned k = 1; k + 1 <= p; ++k) out.push_back(make_combo('s', k, p));
  return out;
}

long double q2_ortho_gram_residual(unsigned p) {
  const std::vector<OrthoVec> basis = q2_ortho_basis(p);
  long double worst = 0.0L;
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      const long double g = num_inner(num_of(basis[i]), num_of(basis[j]), p);
      const long double expect = (i == j) ? 1.0L : 0.0L;
      worst = std::max(worst, std::fabs(g - expect));
    }
  }
  return worst;
}

long double q2_adjointness_residual(unsigned p) {
  const std::vector<OrthoVec> basis = q2_ortho_basis(p);
  const size_t dim = basis.size();
  long double worst = 0.0L;
  for (char kind : {'b', 'f'}) {
    std::vector<std::vector<long double>> up(dim, std::vector<long double>(dim));
    std::vector<std::vector<long double>> down(dim, std::vector<long double>(dim));
    for (size_t nu = 0; nu < dim; ++nu) {
      const NumState raised = num_act(CaoId{kind, +1, 1}, num_of(basis[nu]), p);
      const NumState lowered = num_act(CaoId{kind, -1, 1}, num_of(basis[nu]), p);
      for (size_t mu = 0; mu < dim; ++mu) {
        up[mu][nu] = num_inner(num_of(basis[mu]), raised, p);
        down[mu][nu] = num_inner(num_of(basis[mu]), lowered, p);
      }
    }
    for (size_t mu = 0; mu < dim; ++mu) {
      for (size_t nu = 0; nu < dim; ++nu) {
        worst = std::max(worst, std::fabs(down[mu][nu] - up[nu][mu]));
      }
    }
  }
  return worst;
}

namespace {

OrthoVec primed(char kind, unsigned k, unsigned p) {
  if (k == 0) return OrthoVec{kind, 0, 1.0L / std::sqrt(2.0L), 0.0L};
  return make_combo(kind, k, p);
}

long double raise_formula(char op_kind, char src_kind, char dst_kind, unsigned k,
                          unsigned p) {
  const long double s = std::sqrt(static_cast<long double>(p));
  const long double a = std::sqrt(static_cast<long double>(k));
  const long double b = std::sqrt(static_cast<long double>(k) + 1.0L);
  const long double src_f = (src_kind == 'p') ? s - a : s + a;
  const long double dst_f = (dst_kind == 'p') ? s + b : s - b;
  const long double root = 0.5L * std::sqrt(src_f * dst_f);
  if (op_kind == 'f') return (dst_kind == 'p') ? root : -root;
  const bool same_branch = ((src_kind == 'p') == (dst_kind == 'p'));
  return (same_branch ? b + a : b - a) * root;
}

long double lower_formula(char dst_kind, unsigned k, unsigned p) {
  const long double s = std::sqrt(static_cast<long double>(p));
  const long double a = std::sqrt(static_cast<long double>(k) - 1.0L);
  const long double b = std::sqrt(static_cast<long double>(k));
  const long double src_f = (dst_kind == 'p') ? s - a : s + a;
  return 0.5L * std::sqrt(src_f * (s + b));
}

}  // namespace

std::vector<MatrixElementRow> q2_matrix_elements(unsigned p) {
  std::vector<MatrixElementRow> rows;
  for (unsigned k = 0; k < p; ++k) {
    for (char src_kind : {'p', 's'}) {
      const NumState src = num_of(primed(src_kind, k, p));
      for (char op_kind : {'f', 'b'}) {
        const NumState img = num_act(CaoId{op_kind, +1, 1}, src, p);
        for (char dst_kind : {'p', 's'}) {
          if (dst_kind == 's' && k + 1 == p) continue;
          MatrixElementRow row;
          row.op_kind = op_kind;
          row.op_sign = +1;
          row.src_kind = src_kind;
          row.src_k = k;
          row.dst_kind = dst_kind;
          row.dst_k = k + 1;
          row.formula = raise_formula(op_kind, src_kind, dst_kind, k, p);
          row.transported = num_inner(num_of(primed(dst_kind, k + 1, p)), img, p);
          rows.push_back(row);
        }
      }
    }
  }
  for (unsigned k = 1; k <= p; ++k) {
    const NumState src = num_of(primed('p', k, p));
    const NumState img = num_act(CaoId{'f', -1, 1}, src, p);
    for (char dst_kind : {'p', 's'}) {
      MatrixElementRow row;
      row.op_kind = 'f';
      row.op_sign = -1;
      row.src_kind = 'p';
      row.src_k = k;
      row.dst_kind = dst_kind;
      row.dst_k = k - 1;
      row.formula = lower_formula(dst_kind, k, p);
      row.transported = num_inner(num_of(primed(dst_kind, k - 1, p)), img, p);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace qfock
