#pragma once

#include "qfock/algebra.hpp"
#include "qfock/fock.hpp"

namespace qfock {

// Action of a parity-homogeneous generator on a state, computed purely by
// supercommuting the generator past each key's creation word with the
// structure constants and the module seeds
//   e_00^0 v_0 = p v_0,  e_00^1 v_0 = sqrt(p) v_0,
//   e_ij^s v_0 = 0 for i, j >= 1,  annihilators kill v_0.
// This is the slow reference path; it shares no commutator logic with the
// closed-form actions.
FockState oracle_apply(const GeneratorId& x, const FockState& v);

// Same form as inner_product, but every annihilator application goes through
// oracle_apply. Reference path for cross-checking the fast evaluation.
QuadScalar inner_product_via_oracle(const FockState& u, const FockState& v);

}  // namespace qfock
