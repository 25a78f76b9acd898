#include "glmn/sl2.hpp"

#include <vector>

#include "glmn/error.hpp"

namespace glmn {

namespace {

// (D_k)_jj for 1-based j.
int weight_entry(int k, int j) { return k + 1 - 2 * j; }

} // namespace

SuperMatrix build_H(const OrbitParams& p) {
    const int m = p.even_dim();
    const int r = p.r();
    SuperMatrix H(m, p.odd_dim());
    for (int pos = 1; pos <= p.t(); ++pos) {
        const int k = p.k()[pos - 1];
        const int start = p.block_start(pos) - 1;
        const int column_shift = p.column_marked_at(pos) ? 1 : 0;
        const int row_shift = p.row_marked_at(pos) ? 1 : 0;
        for (int j = 1; j <= k; ++j) {
            H.set(start + j - 1, start + j - 1, weight_entry(k, j) + column_shift);
            H.set(m + start + j - 1, m + start + j - 1, weight_entry(k, j) - row_shift);
        }
    }
    // Marker tails: d_p + 1 = -k_{i_p} on the m side, d_q' - 1 = k_{j_q} on
    // the n side.
    int count = 0;
    for (int pos : p.column_marked()) {
        H.set(r + count, r + count, -p.k()[pos - 1]);
        ++count;
    }
    count = 0;
    for (int pos : p.row_marked()) {
        H.set(m + r + count, m + r + count, p.k()[pos - 1]);
        ++count;
    }
    return H;
}

SuperMatrix build_F(const OrbitParams& p) {
    const int m = p.even_dim();
    const int r = p.r();
    SuperMatrix F(m, p.odd_dim());
    for (int pos = 1; pos <= p.t(); ++pos) {
        const int k = p.k()[pos - 1];
        const int start = p.block_start(pos) - 1;
        if (k >= 2) {
            // m side: a_1 = k or k-1, a_j - a_{j-1} = (D_k)_jj (+1 when
            // column-marked).
            const bool cm = p.column_marked_at(pos);
            std::vector<Integer> a(k);  // a[1..k-1]
            a[1] = cm ? k : k - 1;
            for (int j = 2; j <= k - 1; ++j) {
                a[j] = a[j - 1] + weight_entry(k, j) + (cm ? 1 : 0);
            }
            for (int j = 1; j <= k - 1; ++j) {
                F.set(start + j, start + j - 1, Rational(a[j]));
            }
            // n side: defined from the bottom subdiagonal entry upward,
            // b_{k-1} = k or k-1 and the displayed piecewise difference rule.
            const bool rm = p.row_marked_at(pos);
            std::vector<Integer> b(k);  // b[1..k-1]
            b[k - 1] = rm ? k : k - 1;
            for (int beta = 2; beta <= k - 1; ++beta) {
                if (rm) {
                    b[k - beta] = b[k + 1 - beta] + weight_entry(k, beta) + 1;
                } else {
                    b[k - beta] = b[k + 1 - beta] - weight_entry(k, k + 1 - beta);
                }
            }
            for (int j = 1; j <= k - 1; ++j) {
                F.set(m + start + j, m + start + j - 1, Rational(b[j]));
            }
        }
    }
    // Marker rows below the m-side blocks and columns right of the n-side
    // blocks, both scaled by the block size.
    int count = 0;
    for (int pos : p.column_marked()) {
        F.set(r + count, p.block_end(pos) - 1, p.k()[pos - 1]);
        ++count;
    }
    count = 0;
    for (int pos : p.row_marked()) {
        F.set(m + p.block_start(pos) - 1, m + r + count, p.k()[pos - 1]);
        ++count;
    }
    return F;
}

Sl2Triple sl2_triple_for(const OrbitParams& p) {
    Sl2Triple triple{build_H(p), square(representative(p)), build_F(p)};
    const SuperMatrix two_E = Rational(2) * triple.E;
    const SuperMatrix two_F = Rational(2) * triple.F;
    if (!(supercommutator(triple.E, triple.F) == triple.H) ||
        !(supercommutator(triple.H, triple.E) == two_E) ||
        !(supercommutator(triple.H, triple.F) == -two_F)) {
        throw InternalRelationFailure("constructed triple violates an sl2 relation");
    }
    return triple;
}

} // namespace glmn
