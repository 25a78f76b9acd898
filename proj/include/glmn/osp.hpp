#ifndef GLMN_OSP_HPP
#define GLMN_OSP_HPP

#include <optional>
#include <string>
#include <vector>

#include "glmn/orbit.hpp"
#include "glmn/sl2.hpp"
#include "glmn/supermatrix.hpp"

namespace glmn {

// Generators of an osp(1|2)-subalgebra: odd e, f and even H, E, F subject to
// the twelve defining relations checked by verify_osp12.
struct Osp12Quintuple {
    SuperMatrix e;
    SuperMatrix f;
    SuperMatrix H;
    SuperMatrix E;
    SuperMatrix F;
};

struct RelationCheck {
    std::string name;
    bool holds = false;
    std::optional<SuperMatrix> residual;  // lhs - rhs, present when violated
};

struct RelationReport {
    std::vector<RelationCheck> checks;  // the twelve relations, fixed order

    bool all_hold() const;
};

// f = [F, e] = Fe - eF. Throws ParityMismatch unless e lies in the odd and F
// in the even subspace.
SuperMatrix odd_f(const SuperMatrix& e, const SuperMatrix& F);

// The marker sets partition {1..t} and s = 0.
bool is_embeddable_params(const OrbitParams& p);

// Human-readable reasons why p fails the embeddability criterion: marker
// overlaps, marker gaps, and a nonzero s. Empty exactly when embeddable.
std::vector<std::string> embeddability_violations(const OrbitParams& p);

// e = representative(p), E = e^2, (H, F) the canonical construction,
// f = [F, e]; all twelve relations are verified before returning. Throws
// NotEmbeddable when the criterion fails and InternalRelationFailure on a
// construction bug.
Osp12Quintuple construct_osp12(const OrbitParams& p);

// Evaluates the twelve defining relations exactly. Throws ParityMismatch /
// DimensionMismatch when the candidate does not even type-check.
RelationReport verify_osp12(const Osp12Quintuple& q);

// Every super Jordan block of x has odd size. Throws NotOdd / NotNilpotent.
bool is_embeddable_matrix(const SuperMatrix& x);

} // namespace glmn

#endif
