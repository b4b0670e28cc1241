#include "qfock/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace qfock {

std::string render_generator(const GeneratorId& g) {
  std::ostringstream os;
  os << "e[" << g.i << "," << g.j << "]^" << g.sigma;
  return os.str();
}

void AlgebraElement::add_term(const GeneratorId& g, const QuadScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Parity AlgebraElement::parity() const {
  if (terms_.empty()) return Parity::even;
  const unsigned s = terms_.begin()->first.sigma;
  for (const auto& [g, c] : terms_)
    if (g.sigma != s) return Parity::mixed;
  return s == 0 ? Parity::even : Parity::odd;
}

AlgebraElement ae_zero(unsigned p) { return AlgebraElement(p); }

AlgebraElement ae_generator(const GeneratorId& g, unsigned p) {
  AlgebraElement out(p);
  out.add_term(g, QuadScalar::one(p));
  return out;
}

AlgebraElement ae_add(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out = x;
  for (const auto& [g, c] : y.terms()) out.add_term(g, c);
  return out;
}

AlgebraElement ae_scale(const QuadScalar& c, const AlgebraElement& x) {
  AlgebraElement out(x.p());
  for (const auto& [g, cx] : x.terms()) out.add_term(g, c * cx);
  return out;
}

AlgebraElement bracket(const GeneratorId& x, const GeneratorId& y, unsigned p) {
  AlgebraElement out(p);
  const unsigned tau = (x.sigma + y.sigma) % 2;
  if (x.j == y.i) out.add_term(GeneratorId{x.i, y.j, tau}, QuadScalar::one(p));
  if (x.i == y.j) {
    // -(-1)^{st} is +1 exactly when both generators are odd.
    const Rational c = (x.sigma == 1 && y.sigma == 1) ? 1 : -1;
    out.add_term(GeneratorId{y.i, x.j, tau}, QuadScalar::of(c, p));
  }
  return out;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.parity() == Parity::mixed || y.parity() == Parity::mixed)
    throw std::invalid_argument("bracket: arguments must be parity-homogeneous");
  AlgebraElement out(x.p());
  for (const auto& [gx, cx] : x.terms())
    for (const auto& [gy, cy] : y.terms()) {
      const AlgebraElement piece = bracket(gx, gy, x.p());
      for (const auto& [g, c] : piece.terms()) out.add_term(g, cx * cy * c);
    }
  return out;
}

GeneratorId cao_embed(const CaoId& c) {
  const unsigned sigma = cao_parity(c);
  if (c.sign > 0) return GeneratorId{c.index, 0, sigma};
  return GeneratorId{0, c.index, sigma};
}

unsigned cao_parity(const CaoId& c) { return c.kind == 'f' ? 1 : 0; }

std::vector<CaoId> all_caos(unsigned n) {
  std::vector<CaoId> out;
  for (char kind : {'b', 'f'})
    for (int sign : {+1, -1})
      for (unsigned i = 1; i <= n; ++i) out.push_back(CaoId{kind, sign, i});
  return out;
}

Matrix<Rational> defining_rep(const GeneratorId& g, unsigned n) {
  const std::size_t half = n + 1;
  Matrix<Rational> out(2 * half, 2 * half, 0);
  if (g.sigma == 0) {
    out.at(g.i, g.j) = 1;
    out.at(half + g.i, half + g.j) = 1;
  } else {
    out.at(g.i, half + g.j) = 1;
    out.at(half + g.i, g.j) = 1;
  }
  return out;
}

Matrix<Rational> rep_of_element(const AlgebraElement& x, unsigned n) {
  Matrix<Rational> out(2 * (n + 1), 2 * (n + 1), 0);
  for (const auto& [g, c] : x.terms()) {
    if (!c.is_rational())
      throw std::invalid_argument("rep_of_element: coefficients must be rational");
    out = matrix_add(out, matrix_scale(c.a(), defining_rep(g, n)));
  }
  return out;
}

namespace {

GeneratorId cao_gen(unsigned index, int sign, unsigned sigma) {
  return cao_embed(CaoId{sigma == 0 ? 'b' : 'f', sign, index});
}

std::string describe(const char* relation, unsigned i, unsigned j, unsigned k,
                     unsigned s, unsigned t, unsigned w, bool with_k) {
  std::ostringstream os;
  os << relation << " i=" << i << " j=" << j;
  if (with_k) os << " k=" << k;
  os << " sigma=" << s << " theta=" << t;
  if (with_k) os << " omega=" << w;
  return os.str();
}

}  // namespace

QStatReport verify_q_statistics(unsigned n, bool inject_fault) {
  const unsigned p = 1;
  QStatReport report;
  auto fail = [&report](const std::string& what) {
    report.ok = false;
    report.violations.push_back(what);
  };

  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j)
      for (unsigned s = 0; s <= 1; ++s)
        for (unsigned t = 0; t <= 1; ++t) {
          for (int sign : {+1, -1}) {
            ++report.checks;
            if (!bracket(cao_gen(i, sign, s), cao_gen(j, sign, t), p).is_zero())
              fail(describe(sign > 0 ? "quadratic++" : "quadratic--", i, j, 0, s, t, 0,
                            false));
          }
          const AlgebraElement inner =
              bracket(cao_gen(i, +1, s), cao_gen(j, -1, t), p);
          for (unsigned k = 1; k <= n; ++k)
            for (unsigned w = 0; w <= 1; ++w) {
              const unsigned tau = (s + t + w) % 2;

              ++report.checks;
              AlgebraElement lhs =
                  bracket(inner, ae_generator(cao_gen(k, +1, w), p));
              AlgebraElement rhs = ae_zero(p);
              if (j == k) rhs.add_term(cao_gen(i, +1, tau), QuadScalar::one(p));
              if (i == j) {
                Rational c = ((s * t + t * w + w * s) % 2 == 0) ? 1 : -1;
                if (inject_fault) c = -c;
                rhs.add_term(cao_gen(k, +1, tau), QuadScalar::of(c, p));
              }
              if (!(lhs == rhs)) fail(describe("triple+", i, j, k, s, t, w, true));

              ++report.checks;
              AlgebraElement lhs2 =
                  bracket(inner, ae_generator(cao_gen(k, -1, w), p));
              AlgebraElement rhs2 = ae_zero(p);
              if (i == j) {
                const Rational c = ((s * t) % 2 == 0) ? -1 : 1;
                rhs2.add_term(cao_gen(k, -1, tau), QuadScalar::of(c, p));
              }
              if (i == k) {
                const Rational c = ((t * w + w * s) % 2 == 0) ? -1 : 1;
                rhs2.add_term(cao_gen(j, -1, tau), QuadScalar::of(c, p));
              }
              if (!(lhs2 == rhs2)) fail(describe("triple-", i, j, k, s, t, w, true));
            }
        }
  return report;
}

namespace {

std::vector<GeneratorId> all_generators(unsigned n) {
  std::vector<GeneratorId> out;
  for (unsigned sigma = 0; sigma <= 1; ++sigma)
    for (unsigned i = 0; i <= n; ++i)
      for (unsigned j = 0; j <= n; ++j) out.push_back(GeneratorId{i, j, sigma});
  return out;
}

}  // namespace

QStatReport verify_superbracket_axioms(unsigned n) {
  const unsigned p = 1;
  QStatReport report;
  const std::vector<GeneratorId> gens = all_generators(n);

  for (const GeneratorId& x : gens)
    for (const GeneratorId& y : gens) {
      ++report.checks;
      const Rational sign = (x.sigma * y.sigma) % 2 == 0 ? -1 : 1;
      const AlgebraElement flipped =
          ae_scale(QuadScalar::of(sign, p), bracket(y, x, p));
      if (!(bracket(x, y, p) == flipped)) {
        report.ok = false;
        report.violations.push_back("antisymmetry " + render_generator(x) + " " +
                                    render_generator(y));
      }
    }

  for (const GeneratorId& x : gens)
    for (const GeneratorId& y : gens) {
      const AlgebraElement ex = ae_generator(x, p);
      const AlgebraElement xy = bracket(x, y, p);
      const Rational sign = (x.sigma * y.sigma) % 2 == 0 ? 1 : -1;
      for (const GeneratorId& z : gens) {
        ++report.checks;
        const AlgebraElement lhs = bracket(ex, bracket(y, z, p));
        const AlgebraElement rhs =
            ae_add(bracket(xy, ae_generator(z, p)),
                   ae_scale(QuadScalar::of(sign, p),
                            bracket(ae_generator(y, p), bracket(x, z, p))));
        if (!(lhs == rhs)) {
          report.ok = false;
          report.violations.push_back("jacobi " + render_generator(x) + " " +
                                      render_generator(y) + " " +
                                      render_generator(z));
        }
      }
    }
  return report;
}

QStatReport verify_defining_rep(unsigned n) {
  const unsigned p = 1;
  QStatReport report;
  const std::vector<GeneratorId> gens = all_generators(n);
  for (const GeneratorId& x : gens) {
    const Matrix<Rational> rx = defining_rep(x, n);
    for (const GeneratorId& y : gens) {
      ++report.checks;
      const Matrix<Rational> ry = defining_rep(y, n);
      const Rational sign = (x.sigma * y.sigma) % 2 == 0 ? 1 : -1;
      const Matrix<Rational> rhs =
          matrix_sub(matrix_mul(rx, ry), matrix_scale(sign, matrix_mul(ry, rx)));
      if (!(rep_of_element(bracket(x, y, p), n) == rhs)) {
        report.ok = false;
        report.violations.push_back("representation " + render_generator(x) + " " +
                                    render_generator(y));
      }
    }
  }
  return report;
}

std::vector<RootInfo> roots(unsigned n) {
  std::vector<RootInfo> out;
  RootInfo zero;
  zero.root.assign(n + 1, 0);
  zero.even_mult = 0;
  zero.odd_mult = n + 1;
  out.push_back(zero);
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; j <= n; ++j) {
      if (i == j) continue;
      RootInfo r;
      r.root.assign(n + 1, 0);
      r.root[i] = 1;
      r.root[j] = -1;
      r.even_mult = 1;
      r.odd_mult = 1;
      out.push_back(r);
    }
  return out;
}

std::vector<RootInfo> positive_roots(unsigned n) {
  std::vector<RootInfo> out;
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j) {
      RootInfo r;
      r.root.assign(n + 1, 0);
      r.root[i] = 1;
      r.root[j] = -1;
      r.even_mult = 1;
      r.odd_mult = 1;
      out.push_back(r);
    }
  return out;
}

std::size_t cao_span_dimension(unsigned n) {
  const unsigned p = 1;
  std::vector<AlgebraElement> elements;
  std::vector<GeneratorId> gens;
  for (const CaoId& c : all_caos(n)) gens.push_back(cao_embed(c));
  for (const GeneratorId& g : gens) elements.push_back(ae_generator(g, p));
  for (const GeneratorId& x : gens)
    for (const GeneratorId& y : gens) elements.push_back(bracket(x, y, p));

  // Coordinates over the full generator basis of q(n+1).
  const std::size_t dim = 2 * (n + 1) * (n + 1);
  auto coord = [n](const GeneratorId& g) {
    return std::size_t(g.sigma) * (n + 1) * (n + 1) + std::size_t(g.i) * (n + 1) + g.j;
  };
  Matrix<Rational> rows(elements.size(), dim, 0);
  for (std::size_t r = 0; r < elements.size(); ++r)
    for (const auto& [g, c] : elements[r].terms()) rows.at(r, coord(g)) = c.a();
  return matrix_rank(rows);
}

}  // namespace qfock
