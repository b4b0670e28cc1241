#include "qfock/modstruct.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "qfock/algebra.hpp"
#include "qfock/matrix_a.hpp"

namespace qfock {

namespace {

unsigned level_of_m(const std::vector<unsigned>& m) {
  return std::accumulate(m.begin(), m.end(), 0U);
}

std::vector<unsigned> nonzero_positions(const std::vector<unsigned>& m) {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < m.size(); ++i) {
    if (m[i] > 0) out.push_back(i);
  }
  return out;
}

}  // namespace

std::optional<std::vector<unsigned>> weight_m_part(const Weight& w, unsigned n,
                                                   unsigned p) {
  if (w.size() != static_cast<size_t>(n) + 1) return std::nullopt;
  std::vector<unsigned> m(n, 0);
  long long total = 0;
  for (unsigned i = 1; i <= n; ++i) {
    if (w[i] < 0) return std::nullopt;
    m[i - 1] = static_cast<unsigned>(w[i]);
    total += w[i];
  }
  if (w[0] != static_cast<long long>(p) - total) return std::nullopt;
  return m;
}

Weight weight_from_m(const std::vector<unsigned>& m, unsigned p) {
  Weight w;
  w.reserve(m.size() + 1);
  w.push_back(static_cast<long long>(p) - static_cast<long long>(level_of_m(m)));
  for (unsigned mi : m) w.push_back(static_cast<long long>(mi));
  return w;
}

unsigned nonzero_count(const std::vector<unsigned>& m) {
  return static_cast<unsigned>(nonzero_positions(m).size());
}

unsigned long long mult_bar(const std::vector<unsigned>& m) {
  return 1ULL << nonzero_count(m);
}

unsigned long long vp_mult(const std::vector<unsigned>& m, unsigned p) {
  const unsigned lvl = level_of_m(m);
  if (lvl > p) return 0;
  const unsigned r = nonzero_count(m);
  if (lvl < p) return 1ULL << r;
  return r == 0 ? 1ULL : 1ULL << (r - 1);
}

std::vector<BasisKey> weight_space_keys(const std::vector<unsigned>& m) {
  const std::vector<unsigned> pos = nonzero_positions(m);
  const unsigned r = static_cast<unsigned>(pos.size());
  std::vector<BasisKey> out;
  out.reserve(size_t{1} << r);
  for (size_t idx = 0; idx < (size_t{1} << r); ++idx) {
    BasisKey key;
    key.k.assign(m.begin(), m.end());
    key.l.assign(m.size(), 0);
    for (unsigned j = 0; j < r; ++j) {
      if ((idx >> j) & 1U) {
        key.l[pos[j]] = 1;
        key.k[pos[j]] = m[pos[j]] - 1;
      }
    }
    out.push_back(std::move(key));
  }
  return out;
}

std::vector<FockState> mp_basis(const std::vector<unsigned>& m, unsigned p) {
  const unsigned lvl = level_of_m(m);
  if (lvl < p) return {};
  const std::vector<BasisKey> keys = weight_space_keys(m);
  if (lvl > p) {
    std::vector<FockState> out;
    out.reserve(keys.size());
    for (const BasisKey& key : keys) out.push_back(fs_basis(key, p));
    return out;
  }
  std::vector<FockState> xs;
  xs.reserve(keys.size());
  for (const BasisKey& key : keys) xs.push_back(x_vector(key, p));
  Matrix<QuadScalar> coeffs(keys.size(), keys.size(), QuadScalar::zero(p));
  for (size_t row = 0; row < xs.size(); ++row) {
    for (size_t col = 0; col < keys.size(); ++col) {
      coeffs.at(row, col) = xs[row].coefficient(keys[col]);
    }
  }
  std::vector<FockState> out;
  for (size_t row : independent_rows(coeffs)) out.push_back(xs[row]);
  return out;
}

std::vector<BasisKey> vp_representatives(const std::vector<unsigned>& m, unsigned p) {
  const unsigned lvl = level_of_m(m);
  if (lvl < p) return weight_space_keys(m);
  if (lvl > p) throw std::invalid_argument("no representatives above the critical level");
  const std::vector<unsigned> pos = nonzero_positions(m);
  if (pos.empty()) return weight_space_keys(m);
  const unsigned last = pos.back();
  std::vector<unsigned> free_pos(pos.begin(), pos.end() - 1);
  const unsigned rf = static_cast<unsigned>(free_pos.size());
  std::vector<BasisKey> out;
  out.reserve(size_t{1} << rf);
  for (size_t idx = 0; idx < (size_t{1} << rf); ++idx) {
    BasisKey key;
    key.k.assign(m.begin(), m.end());
    key.l.assign(m.size(), 0);
    key.l[last] = 1;
    key.k[last] = m[last] - 1;
    for (unsigned j = 0; j < rf; ++j) {
      if ((idx >> j) & 1U) {
        key.l[free_pos[j]] = 1;
        key.k[free_pos[j]] = m[free_pos[j]] - 1;
      }
    }
    out.push_back(std::move(key));
  }
  return out;
}

Integer dim_vp(unsigned n, unsigned p) {
  Integer total = 0;
  for (unsigned i = 0; i <= n; ++i) {
    total += binomial(static_cast<long long>(p) - 1, static_cast<long long>(i)) *
             binomial(static_cast<long long>(p) + n - i, static_cast<long long>(n - i));
  }
  return total;
}

std::vector<std::vector<long long>> gl_decomposition(unsigned n, unsigned p) {
  std::vector<std::vector<long long>> out;
  if (p == 0) return out;
  const unsigned top = std::min(n, p - 1);
  for (unsigned i = 0; i <= top; ++i) {
    std::vector<long long> lambda(n + 1, 0);
    lambda[0] = static_cast<long long>(p) - i;
    for (unsigned j = 1; j <= i; ++j) lambda[j] = 1;
    out.push_back(std::move(lambda));
  }
  return out;
}

Integer weyl_dim_gl(const std::vector<long long>& lambda) {
  Rational dim(1);
  const size_t nn = lambda.size();
  for (size_t i = 0; i < nn; ++i) {
    for (size_t j = i + 1; j < nn; ++j) {
      const long long gap = static_cast<long long>(j) - static_cast<long long>(i);
      dim *= Rational(lambda[i] - lambda[j] + gap, gap);
    }
  }
  if (boost::multiprecision::denominator(dim) != 1) {
    throw std::logic_error("weyl_dim_gl: non-integer product");
  }
  return boost::multiprecision::numerator(dim);
}

namespace {

void enumerate_m(unsigned n, unsigned budget, std::vector<unsigned>& cur,
                 std::vector<std::vector<unsigned>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (unsigned v = 0; v <= budget; ++v) {
    cur.push_back(v);
    enumerate_m(n, budget - v, cur, out);
    cur.pop_back();
  }
}

GramMatrix gram_of_keys(const std::vector<unsigned>& m, unsigned p,
                        std::vector<BasisKey> keys) {
  const size_t order = keys.size();
  Matrix<QuadScalar> entries(order, order, QuadScalar::zero(p));
  std::vector<FockState> states;
  states.reserve(order);
  for (const BasisKey& key : keys) states.push_back(fs_basis(key, p));
  for (size_t i = 0; i < order; ++i) {
    for (size_t j = 0; j < order; ++j) {
      entries.at(i, j) = inner_product(states[i], states[j]);
    }
  }
  return GramMatrix{weight_from_m(m, p), order, std::move(entries), std::move(keys)};
}

}  // namespace

std::vector<std::vector<unsigned>> vp_weights(unsigned n, unsigned p) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  enumerate_m(n, p, cur, out);
  return out;
}

GramMatrix gram(const std::vector<unsigned>& m, unsigned p) {
  return gram_of_keys(m, p, vp_representatives(m, p));
}

GramMatrix gram_bar(const std::vector<unsigned>& m, unsigned p) {
  return gram_of_keys(m, p, weight_space_keys(m));
}

PositivityCertificate is_positive_definite(const GramMatrix& g) {
  PositivityCertificate cert;
  cert.positive_definite = true;
  for (size_t k = 1; k <= g.order; ++k) {
    Matrix<QuadScalar> leading(k, k, g.entries.at(0, 0));
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = 0; j < k; ++j) leading.at(i, j) = g.entries.at(i, j);
    }
    const QuadScalar minor = matrix_det(leading);
    if (qs_sign(minor) <= 0) cert.positive_definite = false;
    cert.minors.push_back(minor);
  }
  return cert;
}

FockState singular_vector(unsigned n, unsigned p) {
  BasisKey key;
  key.k.assign(n, 0);
  key.l.assign(n, 0);
  key.k[0] = p;
  return x_vector(key, p);
}

bool gram_closed_form_check(const std::vector<unsigned>& m, unsigned p) {
  const unsigned lvl = level_of_m(m);
  if (lvl >= p) throw std::invalid_argument("closed form needs level below p");
  for (unsigned mi : m) {
    if (mi == 0) throw std::invalid_argument("closed form needs every m_i nonzero");
  }
  const std::vector<BasisKey> keys = weight_space_keys(m);
  const GramMatrix h = gram_bar(m, p);
  std::vector<QuadScalar> t;
  t.reserve(m.size());
  for (unsigned mi : m) t.push_back(QuadScalar::of(Rational(mi), p));
  const Matrix<QuadScalar> a = build_A_quad(QuadScalar::sqrt_p(p), t, p);
  const auto a_inv = matrix_inverse(a);
  if (!a_inv.has_value()) return false;
  for (size_t row = 0; row < keys.size(); ++row) {
    Integer d = falling_factorial(Integer(p) - 1, lvl);
    for (unsigned ki : keys[row].k) d *= factorial(ki);
    const QuadScalar scale =
        qs_mul(QuadScalar::sqrt_p(p), QuadScalar::of(Rational(d), p));
    for (size_t col = 0; col < keys.size(); ++col) {
      if (!(h.entries.at(row, col) == qs_mul(scale, a_inv->at(col, row)))) {
        return false;
      }
    }
  }
  return true;
}

WeightSpaceInfo weight_space_info(const std::vector<unsigned>& m, unsigned n,
                                  unsigned p) {
  if (m.size() != n) throw std::invalid_argument("m-part arity mismatch");
  WeightSpaceInfo info;
  info.weight = weight_from_m(m, p);
  info.level = level_of_m(m);
  info.r = nonzero_count(m);
  info.dim_bar = mult_bar(m);
  info.dim_vp = vp_mult(m, p);
  info.basis_keys = weight_space_keys(m);
  return info;
}

unsigned long long mult_bar(const Weight& w, unsigned n, unsigned p) {
  auto m = weight_m_part(w, n, p);
  if (!m) return 0;
  return mult_bar(*m);
}

unsigned long long vp_mult(const Weight& w, unsigned n, unsigned p) {
  auto m = weight_m_part(w, n, p);
  if (!m) return 0;
  return vp_mult(*m, p);
}

std::vector<FockState> mp_basis(const Weight& w, unsigned n, unsigned p,
                                unsigned level_cap) {
  auto m = weight_m_part(w, n, p);
  if (!m) return {};
  if (level_of_m(*m) > level_cap)
    throw std::invalid_argument("weight level exceeds the level cap");
  return mp_basis(*m, p);
}

std::vector<BasisKey> vp_representatives(const Weight& w, unsigned n,
                                         unsigned p) {
  auto m = weight_m_part(w, n, p);
  if (!m) return {};
  return vp_representatives(*m, p);
}

GramMatrix gram(const Weight& w, unsigned n, unsigned p) {
  auto m = weight_m_part(w, n, p);
  if (!m) throw std::invalid_argument("weight carries no basis states");
  return gram(*m, p);
}

GramMatrix gram_bar(const Weight& w, unsigned n, unsigned p) {
  auto m = weight_m_part(w, n, p);
  if (!m) throw std::invalid_argument("weight carries no basis states");
  return gram_bar(*m, p);
}

bool gram_closed_form_check(const Weight& w, unsigned n, unsigned p) {
  auto m = weight_m_part(w, n, p);
  if (!m) throw std::invalid_argument("weight carries no basis states");
  return gram_closed_form_check(*m, p);
}

namespace {

// Per-weight echelon basis: entries sorted by pivot key, each state
// normalized to coefficient one at its pivot, every pivot absent from the
// later states' leading positions.
struct EchelonBucket {
  std::vector<std::pair<BasisKey, FockState>> rows;

  // Returns the reduced state when it opens a new direction.
  std::optional<FockState> insert(FockState state) {
    for (const auto& [pivot, vec] : rows) {
      const QuadScalar c = state.coefficient(pivot);
      if (!(c == QuadScalar::zero(state.p()))) {
        state = fs_sub(state, fs_scale(c, vec));
      }
    }
    if (state.is_zero()) return std::nullopt;
    const auto& lead = *state.terms().begin();
    const FockState normalized = fs_scale(qs_inv(lead.second), state);
    const BasisKey pivot = lead.first;
    auto it = std::lower_bound(
        rows.begin(), rows.end(), pivot,
        [](const auto& row, const BasisKey& key) { return row.first < key; });
    rows.insert(it, {pivot, normalized});
    return normalized;
  }
};

unsigned max_level(const FockState& state) {
  unsigned top = 0;
  for (const auto& [key, c] : state.terms()) top = std::max(top, level(key));
  return top;
}

}  // namespace

std::map<Weight, std::vector<FockState>> cao_closure(const FockState& seed,
                                                     unsigned level_cap) {
  const unsigned n = seed.n();
  const unsigned p = seed.p();
  const std::vector<CaoId> ops = all_caos(n);
  std::map<Weight, EchelonBucket> buckets;
  std::deque<FockState> work;

  auto offer = [&](const FockState& state) {
    if (state.is_zero() || max_level(state) > level_cap) return;
    const Weight w = weight_of(state.terms().begin()->first, p);
    if (auto reduced = buckets[w].insert(state)) work.push_back(*reduced);
  };

  offer(seed);
  while (!work.empty()) {
    const FockState state = work.front();
    work.pop_front();
    for (const CaoId& op : ops) offer(apply_cao(op, state));
  }

  std::map<Weight, std::vector<FockState>> out;
  for (auto& [w, bucket] : buckets) {
    std::vector<FockState> vecs;
    vecs.reserve(bucket.rows.size());
    for (auto& [pivot, vec] : bucket.rows) vecs.push_back(std::move(vec));
    out.emplace(w, std::move(vecs));
  }
  return out;
}

}  // namespace qfock
