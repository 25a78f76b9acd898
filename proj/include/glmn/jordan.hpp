#ifndef GLMN_JORDAN_HPP
#define GLMN_JORDAN_HPP

#include <vector>

#include "glmn/supermatrix.hpp"

namespace glmn {

// Weakly decreasing list of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // throws BadShape

    const std::vector<int>& parts() const { return parts_; }
    int sum() const;
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<int> parts_;
};

// Even matrices satisfying [E,F] = H, [H,E] = 2E, [H,F] = -2F.
struct Sl2Triple {
    SuperMatrix H;
    SuperMatrix E;
    SuperMatrix F;
};

// Block-diagonal nilpotent Jordan matrix J_{d_1} + ... + J_{d_k}, each block
// with 1s on its superdiagonal, emitted as a SuperMatrix with odd dimension 0.
SuperMatrix jordan_matrix(const Partition& p);

// The unique partition with #{parts >= j} = rank(N^{j-1}) - rank(N^j).
Partition partition_of_nilpotent(const SuperMatrix& N);  // throws NotNilpotent

// E = jordan_matrix(p); H block-diagonal with D_{d} = diag(d-1, d-3, ..., -d+1);
// F block-diagonal with subdiagonal entries b_1 = d-1, b_j - b_{j-1} = (D_d)_jj.
Sl2Triple sl2_triple_for_partition(const Partition& p);

// Invertible P with P^{-1} N P = jordan_matrix(partition_of_nilpotent(N)).
// Requires odd dimension 0. Deterministic: chain generators come from the
// kernel filtration with leftmost-pivot tie-breaking.
SuperMatrix jordan_basis(const SuperMatrix& N);  // throws NotNilpotent

} // namespace glmn

#endif
