#ifndef GLMN_SRC_DENSE_HPP
#define GLMN_SRC_DENSE_HPP

// Internal helpers for exact column-vector work: kernel bases, incremental
// independence tests, and Jordan chain extraction. Not installed.

#include <vector>

#include "glmn/rational.hpp"
#include "glmn/supermatrix.hpp"

namespace glmn::detail {

using Vec = std::vector<Rational>;

Vec apply_matrix(const SuperMatrix& g, const Vec& v);

bool is_zero_vec(const Vec& v);

// Kernel basis of g, one vector per free column of the reduced row echelon
// form, ordered by free-column index ascending. For an odd g (and any of its
// powers) the linear system decouples by slot parity, so each basis vector is
// automatically homogeneous.
std::vector<Vec> kernel_basis(const SuperMatrix& g);

// Incremental row-echelon staircase over Q. insert() reduces the vector
// against the rows collected so far and keeps it when a nonzero residue
// remains; the return value is that independence verdict.
class Echelon {
public:
    bool insert(Vec v);

private:
    std::vector<Vec> rows_;  // each normalized to a leading 1, sorted by pivot
    std::vector<int> pivots_;
};

struct Chain {
    Vec generator;  // not in the image of the matrix
    int length;
};

// Jordan chain extraction through the kernel filtration ker g, ker g^2, ...
// Chains are produced longest first; generators at one filtration level are
// selected in kernel-basis order (leftmost standard pivot first), which makes
// the output deterministic. Requires g nilpotent.
std::vector<Chain> extract_chains(const SuperMatrix& g);

// generator, g generator, ..., g^{length-1} generator
std::vector<Vec> chain_vectors(const SuperMatrix& g, const Chain& chain);

} // namespace glmn::detail

#endif
