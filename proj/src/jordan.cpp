#include "glmn/jordan.hpp"

#include <algorithm>
#include <string>

#include "dense.hpp"
#include "glmn/error.hpp"

namespace glmn {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw BadShape("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw BadShape("partition parts must be weakly decreasing");
        }
    }
}

int Partition::sum() const {
    int total = 0;
    for (int p : parts_) {
        total += p;
    }
    return total;
}

SuperMatrix jordan_matrix(const Partition& p) {
    SuperMatrix g(p.sum(), 0);
    int offset = 0;
    for (int d : p.parts()) {
        for (int j = 0; j + 1 < d; ++j) {
            g.set(offset + j, offset + j + 1, 1);
        }
        offset += d;
    }
    return g;
}

Partition partition_of_nilpotent(const SuperMatrix& N) {
    if (!is_nilpotent(N)) {
        throw NotNilpotent("matrix is not nilpotent");
    }
    const int d = N.dim();
    std::vector<int> ranks;  // ranks[j] = rank(N^j)
    ranks.push_back(d);
    SuperMatrix p = N;
    while (ranks.back() > 0) {
        ranks.push_back(rank(p));
        p = p * N;
    }
    // counts[j] = #{parts >= j}, j = 1, 2, ...
    std::vector<int> counts;
    for (std::size_t j = 1; j < ranks.size(); ++j) {
        counts.push_back(ranks[j - 1] - ranks[j]);
    }
    std::vector<int> parts;
    if (!counts.empty()) {
        for (int i = 0; i < counts[0]; ++i) {
            int size = 0;
            for (int c : counts) {
                if (c > i) {
                    ++size;
                }
            }
            parts.push_back(size);
        }
    }
    return Partition(parts);
}

namespace {

// (D_d)_jj for 1-based j.
int weight_entry(int d, int j) { return d + 1 - 2 * j; }

} // namespace

Sl2Triple sl2_triple_for_partition(const Partition& p) {
    const int total = p.sum();
    SuperMatrix H(total, 0);
    SuperMatrix F(total, 0);
    int offset = 0;
    for (int d : p.parts()) {
        for (int j = 1; j <= d; ++j) {
            H.set(offset + j - 1, offset + j - 1, weight_entry(d, j));
        }
        Integer b(d - 1);  // b_1
        for (int j = 1; j <= d - 1; ++j) {
            if (j > 1) {
                b += weight_entry(d, j);  // b_j - b_{j-1} = (D_d)_jj
            }
            F.set(offset + j, offset + j - 1, Rational(b));
        }
        offset += d;
    }
    return Sl2Triple{std::move(H), jordan_matrix(p), std::move(F)};
}

SuperMatrix jordan_basis(const SuperMatrix& N) {
    if (N.odd_dim() != 0) {
        throw DimensionMismatch("jordan_basis expects odd dimension 0");
    }
    if (!is_nilpotent(N)) {
        throw NotNilpotent("matrix is not nilpotent");
    }
    auto chains = detail::extract_chains(N);
    std::stable_sort(chains.begin(), chains.end(),
                     [](const detail::Chain& a, const detail::Chain& b) {
                         return a.length > b.length;
                     });
    SuperMatrix P(N.even_dim(), 0);
    int col = 0;
    for (const auto& chain : chains) {
        const auto vecs = detail::chain_vectors(N, chain);
        // Chain end first, so N acts as the superdiagonal within the block.
        for (int i = chain.length - 1; i >= 0; --i) {
            for (int row = 0; row < N.dim(); ++row) {
                P.set(row, col, vecs[i][row]);
            }
            ++col;
        }
    }
    return P;
}

} // namespace glmn
