#ifndef GLMN_SUPERJORDAN_HPP
#define GLMN_SUPERJORDAN_HPP

#include <set>
#include <vector>

#include "glmn/orbit.hpp"
#include "glmn/supermatrix.hpp"

namespace glmn {

/*
 * One nilpotent chain v_1 -> v_2 = x v_1 -> ... -> v_size realized on
 * homogeneous vectors of alternating parities. generator_parity is the parity
 * of v_1, the chain start outside the image of x; the final vector v_size has
 * the same parity exactly when size is odd.
 */
struct SuperJordanBlock {
    int size = 0;
    Parity generator_parity = Parity::Even;

    friend bool operator==(const SuperJordanBlock&, const SuperJordanBlock&) = default;
};

// Canonical block order: size descending, even generators before odd.
bool block_order(const SuperJordanBlock& a, const SuperJordanBlock& b);

int even_slot_count(const SuperJordanBlock& b);
int odd_slot_count(const SuperJordanBlock& b);

struct SuperJordanType {
    std::vector<SuperJordanBlock> blocks;  // canonical order
    // Even invertible matrix whose columns are the chain vectors: each chain
    // is listed top vector (v_size) first and every vector sits in the slot
    // assigned by the canonical interleaving, so
    //     inverse(basis) * x * basis == super_jordan_matrix(blocks, m, n).
    SuperMatrix basis;
};

/*
 * Block-diagonal matrix of nilpotent super Jordan blocks, re-expressed in the
 * standard I(m|n) slot order: walking the blocks in the order given, top
 * vector first, each chain vector takes the first unused slot of its parity.
 * Throws ParityBudgetMismatch unless the chains fill (m|n) exactly.
 */
SuperMatrix super_jordan_matrix(const std::vector<SuperJordanBlock>& blocks, int m, int n);

// Graded chain decomposition of an odd nilpotent element. Deterministic:
// homogeneous generators are chosen through the graded kernel filtration with
// leftmost-pivot tie-breaking. Throws NotOdd / NotNilpotent.
SuperJordanType superjordan_decompose(const SuperMatrix& x);

std::multiset<int> block_sizes(const SuperJordanType& t);

// Inverts the chain analysis: (2k+1, even) -> column-marked block k,
// (2k+1, odd) -> row-marked block k, (2k, odd) -> unmarked block k,
// (2k+2, even) -> doubly marked block k (k >= 1), (2, even) -> one unit of s,
// size-1 blocks -> dimension padding. Output is canonical.
OrbitParams params_from_blocks(const std::vector<SuperJordanBlock>& blocks);
OrbitParams params_from_type(const SuperJordanType& t);

// Block sizes a representative of p must decompose into, by the same chain
// arithmetic run in reverse. Used for enumeration tables; cross-checked
// against superjordan_decompose in the tests.
std::multiset<int> block_sizes_of_params(const OrbitParams& p);

} // namespace glmn

#endif
