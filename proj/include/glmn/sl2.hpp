#ifndef GLMN_SL2_HPP
#define GLMN_SL2_HPP

#include "glmn/jordan.hpp"
#include "glmn/orbit.hpp"

namespace glmn {

// Diagonal semisimple element for the square E = e^2 of a representative.
// On the m side each Jordan block carries diag(k-1, k-3, ..., -k+1), shifted
// by +1 when the block is column-marked; the tail positions r+1..r+r1 carry
// -k_{i_p}. On the n side the shift is -1 on row-marked blocks and the tail
// positions r+1..r+r2 carry +k_{j_q}. Everything past the marker tails is 0.
SuperMatrix build_H(const OrbitParams& p);

// Nilnegative element matching build_H: block-diagonal subdiagonal blocks from
// the marked/unmarked recurrences plus the scaled marker rows (m side) and
// columns (n side).
SuperMatrix build_F(const OrbitParams& p);

// (build_H(p), square(representative(p)), build_F(p)), with the three sl2
// relations checked exactly before returning; a violation means a bug and
// raises InternalRelationFailure.
Sl2Triple sl2_triple_for(const OrbitParams& p);

} // namespace glmn

#endif
