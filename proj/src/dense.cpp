#include "dense.hpp"

#include <cassert>
#include <utility>

namespace glmn::detail {

Vec apply_matrix(const SuperMatrix& g, const Vec& v) {
    const int d = g.dim();
    assert(static_cast<int>(v.size()) == d);
    Vec out(d, Rational(0));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (g.at(i, j) != 0 && v[j] != 0) {
                out[i] += g.at(i, j) * v[j];
            }
        }
    }
    return out;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

std::vector<Vec> kernel_basis(const SuperMatrix& g) {
    const int d = g.dim();
    std::vector<Vec> rows(d, Vec(d, Rational(0)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            rows[i][j] = g.at(i, j);
        }
    }
    // Reduced row echelon form.
    std::vector<int> pivot_cols;
    int pr = 0;
    for (int col = 0; col < d && pr < d; ++col) {
        int pivot = -1;
        for (int i = pr; i < d; ++i) {
            if (rows[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        std::swap(rows[pr], rows[pivot]);
        const Rational inv = 1 / rows[pr][col];
        for (int j = col; j < d; ++j) {
            rows[pr][j] *= inv;
        }
        for (int i = 0; i < d; ++i) {
            if (i == pr || rows[i][col] == 0) {
                continue;
            }
            const Rational factor = rows[i][col];
            for (int j = col; j < d; ++j) {
                rows[i][j] -= factor * rows[pr][j];
            }
        }
        pivot_cols.push_back(col);
        ++pr;
    }
    std::vector<bool> is_pivot(d, false);
    for (int c : pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<Vec> basis;
    for (int free = 0; free < d; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        Vec v(d, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
            v[pivot_cols[r]] = -rows[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool Echelon::insert(Vec v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (v[pivots_[r]] != 0) {
            const Rational factor = v[pivots_[r]];
            for (std::size_t j = 0; j < v.size(); ++j) {
                v[j] -= factor * rows_[r][j];
            }
        }
    }
    int pivot = -1;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] != 0) {
            pivot = static_cast<int>(j);
            break;
        }
    }
    if (pivot < 0) {
        return false;
    }
    const Rational inv = 1 / v[pivot];
    for (auto& x : v) {
        x *= inv;
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot) {
        ++pos;
    }
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, pivot);
    return true;
}

std::vector<Chain> extract_chains(const SuperMatrix& g) {
    // Powers up to the nilpotency index.
    std::vector<SuperMatrix> powers;
    powers.push_back(SuperMatrix::identity(g.even_dim(), g.odd_dim()));
    while (!powers.back().is_zero()) {
        powers.push_back(powers.back() * g);
    }
    const int index = static_cast<int>(powers.size()) - 1;

    std::vector<Chain> chains;
    std::vector<Vec> carried;  // images of longer chains at the current level
    for (int level = index; level >= 1; --level) {
        Echelon blocked;
        for (auto& v : kernel_basis(powers[level - 1])) {
            blocked.insert(std::move(v));
        }
        for (const auto& v : carried) {
            blocked.insert(v);
        }
        std::vector<Vec> next_carried;
        for (const auto& v : carried) {
            next_carried.push_back(apply_matrix(g, v));
        }
        for (auto& cand : kernel_basis(powers[level])) {
            if (blocked.insert(cand)) {
                next_carried.push_back(apply_matrix(g, cand));
                chains.push_back(Chain{std::move(cand), level});
            }
        }
        carried = std::move(next_carried);
    }
    return chains;
}

std::vector<Vec> chain_vectors(const SuperMatrix& g, const Chain& chain) {
    std::vector<Vec> vecs;
    vecs.push_back(chain.generator);
    for (int i = 1; i < chain.length; ++i) {
        vecs.push_back(apply_matrix(g, vecs.back()));
    }
    return vecs;
}

} // namespace glmn::detail
