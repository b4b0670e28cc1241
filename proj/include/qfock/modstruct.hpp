#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qfock/fock.hpp"
#include "qfock/linalg.hpp"
#include "qfock/quadscalar.hpp"
#include "qfock/rational.hpp"

namespace qfock {

struct WeightSpaceInfo {
  Weight weight;
  unsigned level = 0;
  unsigned r = 0;
  unsigned long long dim_bar = 0;
  unsigned long long dim_vp = 0;
  std::vector<BasisKey> basis_keys;
};

struct GramMatrix {
  Weight weight;
  std::size_t order = 0;
  Matrix<QuadScalar> entries;
  std::vector<BasisKey> basis;
};

struct PositivityCertificate {
  bool positive_definite = false;
  std::vector<QuadScalar> minors;
};

// Occupation tuple (m_1, ..., m_n) of a weight (p - L, m_1, ..., m_n) with
// every m_i >= 0 and L = sum m_i; nullopt when the weight has no such form.
std::optional<std::vector<unsigned>> weight_m_part(const Weight& w, unsigned n,
                                                   unsigned p);

Weight weight_from_m(const std::vector<unsigned>& m, unsigned p);

// Number of nonzero entries of m.
unsigned nonzero_count(const std::vector<unsigned>& m);

// Dimension 2^r of the induced-module weight space, r = nonzero_count(m).
unsigned long long mult_bar(const std::vector<unsigned>& m);

// Dimension of the simple-quotient weight space: 2^r below the critical
// level, 2^(r-1) at level p, zero above.
unsigned long long vp_mult(const std::vector<unsigned>& m, unsigned p);

// All basis keys with k_i + l_i = m_i, ordered by the binary index
// sum_j l_{z_j} 2^(j-1) over the nonzero positions z_1 < ... < z_r.
std::vector<BasisKey> weight_space_keys(const std::vector<unsigned>& m);

// Basis of the maximal-submodule slice at this weight: empty below level p,
// an independent subset of the X vectors at level p, the whole weight space
// above.
std::vector<FockState> mp_basis(const std::vector<unsigned>& m, unsigned p);

// Keys whose images span the simple-quotient weight space: every key below
// level p; at level p the keys with k_j = m_j - 1, l_j = 1 at the last
// nonzero position j and free binary choices at the other nonzero positions.
std::vector<BasisKey> vp_representatives(const std::vector<unsigned>& m, unsigned p);

// sum_{i=0}^{n} C(p-1, i) C(p+n-i, n-i).
Integer dim_vp(unsigned n, unsigned p);

// Highest weights (p-i, 1^i, 0^(n-i)) for i = 0..min(n, p-1).
std::vector<std::vector<long long>> gl_decomposition(unsigned n, unsigned p);

// prod_{i<j} (la_i - la_j + j - i) / (j - i) over all index pairs.
Integer weyl_dim_gl(const std::vector<long long>& lambda);

// Every m with sum m_i <= p, in lexicographic order.
std::vector<std::vector<unsigned>> vp_weights(unsigned n, unsigned p);

// Gram matrix of the contravariant form on the simple-quotient
// representatives at this weight.
GramMatrix gram(const std::vector<unsigned>& m, unsigned p);

// Gram matrix over the full induced-module weight space.
GramMatrix gram_bar(const std::vector<unsigned>& m, unsigned p);

// Sylvester test: all leading principal minors strictly positive.
PositivityCertificate is_positive_definite(const GramMatrix& g);

// X(p; p, 0, ..., 0), the generator of the maximal submodule.
FockState singular_vector(unsigned n, unsigned p);

// Verifies H(l, l') = sqrt(p) d(k_l) (A^{-1})_{l', l} entrywise on the full
// weight space, where d(k) = k_1! ... k_n! (p-1)(p-2)...(p-L) and A is the
// tridiagonal-type matrix with s = sqrt(p), t_i the nonzero m_i.  Requires
// level < p and every m_i nonzero.
bool gram_closed_form_check(const std::vector<unsigned>& m, unsigned p);

WeightSpaceInfo weight_space_info(const std::vector<unsigned>& m, unsigned n,
                                  unsigned p);

// Weight-based entry points.  A weight that is not of the (p - L, m_1, ...,
// m_n) form with all m_i >= 0 carries no states: the multiplicity functions
// return 0 and the basis functions return empty lists.
unsigned long long mult_bar(const Weight& w, unsigned n, unsigned p);
unsigned long long vp_mult(const Weight& w, unsigned n, unsigned p);
std::vector<FockState> mp_basis(const Weight& w, unsigned n, unsigned p,
                                unsigned level_cap);
std::vector<BasisKey> vp_representatives(const Weight& w, unsigned n,
                                         unsigned p);
GramMatrix gram(const Weight& w, unsigned n, unsigned p);
GramMatrix gram_bar(const Weight& w, unsigned n, unsigned p);
bool gram_closed_form_check(const Weight& w, unsigned n, unsigned p);

// Repeatedly applies every creation and annihilation operator to the seed,
// discarding images that reach past level_cap, and gathers an echelon basis
// of the span per weight.
std::map<Weight, std::vector<FockState>> cao_closure(const FockState& seed,
                                                     unsigned level_cap);

}  // namespace qfock
