#pragma once

#include "qfock/mpoly.hpp"

namespace qfock {

// Character of the simple quotient as a weight-multiplicity sum: for every
// occupation tuple m with sum <= p, the monomial x^(p-L, m) weighted by the
// quotient multiplicity.  Variables x_0..x_n, arity n + 1.
MPoly char_from_weights(unsigned n, unsigned p);

// h_(p-n) e_n + h_(p-n-2) e_(n-2) + ... in x_0..x_n, dropping summands whose
// complete-homogeneous index is negative.
MPoly char_formula(unsigned n, unsigned p);

// sum_{i=0}^{min(n, p-1)} s_(p-1-i | i) over x_0..x_n.
MPoly char_schur_sum(unsigned n, unsigned p);

}  // namespace qfock
