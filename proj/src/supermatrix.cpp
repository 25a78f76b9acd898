#include "glmn/supermatrix.hpp"

#include <string>
#include <utility>

namespace glmn {

const char* to_string(Parity p) {
    return p == Parity::Even ? "even" : "odd";
}

SuperMatrix::SuperMatrix(int m, int n) : m_(m), n_(n) {
    if (m < 0 || n < 0) {
        throw DimensionMismatch("negative dimension");
    }
    entries_.assign(static_cast<std::size_t>(dim()) * dim(), Rational(0));
}

SuperMatrix SuperMatrix::from_grid(int m, int n,
                                   const std::vector<std::vector<Rational>>& grid) {
    SuperMatrix g(m, n);
    const int d = g.dim();
    if (static_cast<int>(grid.size()) != d) {
        throw DimensionMismatch("expected " + std::to_string(d) + " rows, got " +
                                std::to_string(grid.size()));
    }
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(grid[i].size()) != d) {
            throw DimensionMismatch("row " + std::to_string(i) + " has " +
                                    std::to_string(grid[i].size()) + " cells, expected " +
                                    std::to_string(d));
        }
        for (int j = 0; j < d; ++j) {
            g.set(i, j, grid[i][j]);
        }
    }
    return g;
}

SuperMatrix SuperMatrix::zero(int m, int n) { return SuperMatrix(m, n); }

SuperMatrix SuperMatrix::identity(int m, int n) {
    SuperMatrix g(m, n);
    for (int i = 0; i < g.dim(); ++i) {
        g.set(i, i, 1);
    }
    return g;
}

SuperMatrix SuperMatrix::basis_unit(int m, int n, int row, int col) {
    SuperMatrix g(m, n);
    g.set(row, col, 1);
    return g;
}

const Rational& SuperMatrix::at(int row, int col) const {
    if (row < 0 || row >= dim() || col < 0 || col >= dim()) {
        throw DimensionMismatch("index out of range");
    }
    return entries_[static_cast<std::size_t>(row) * dim() + col];
}

void SuperMatrix::set(int row, int col, Rational value) {
    if (row < 0 || row >= dim() || col < 0 || col >= dim()) {
        throw DimensionMismatch("index out of range");
    }
    entries_[static_cast<std::size_t>(row) * dim() + col] = std::move(value);
}

bool SuperMatrix::is_zero() const {
    for (const auto& e : entries_) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

bool SuperMatrix::in_even_subspace() const {
    for (int i = 0; i < dim(); ++i) {
        for (int j = 0; j < dim(); ++j) {
            if (slot_parity(i) != slot_parity(j) && at(i, j) != 0) {
                return false;
            }
        }
    }
    return true;
}

bool SuperMatrix::in_odd_subspace() const {
    for (int i = 0; i < dim(); ++i) {
        for (int j = 0; j < dim(); ++j) {
            if (slot_parity(i) == slot_parity(j) && at(i, j) != 0) {
                return false;
            }
        }
    }
    return true;
}

SuperMatrix SuperMatrix::even_component() const {
    SuperMatrix g(m_, n_);
    for (int i = 0; i < dim(); ++i) {
        for (int j = 0; j < dim(); ++j) {
            if (slot_parity(i) == slot_parity(j)) {
                g.set(i, j, at(i, j));
            }
        }
    }
    return g;
}

SuperMatrix SuperMatrix::odd_component() const {
    SuperMatrix g(m_, n_);
    for (int i = 0; i < dim(); ++i) {
        for (int j = 0; j < dim(); ++j) {
            if (slot_parity(i) != slot_parity(j)) {
                g.set(i, j, at(i, j));
            }
        }
    }
    return g;
}

bool operator==(const SuperMatrix& x, const SuperMatrix& y) {
    return x.m_ == y.m_ && x.n_ == y.n_ && x.entries_ == y.entries_;
}

namespace {

void require_same_shape(const SuperMatrix& x, const SuperMatrix& y) {
    if (x.even_dim() != y.even_dim() || x.odd_dim() != y.odd_dim()) {
        throw DimensionMismatch("operands have different (m|n) gradings");
    }
}

} // namespace

SuperMatrix SuperMatrix::operator-() const {
    SuperMatrix g(m_, n_);
    for (int i = 0; i < dim(); ++i) {
        for (int j = 0; j < dim(); ++j) {
            g.set(i, j, -at(i, j));
        }
    }
    return g;
}

SuperMatrix operator+(const SuperMatrix& x, const SuperMatrix& y) {
    require_same_shape(x, y);
    SuperMatrix g(x.m_, x.n_);
    for (std::size_t i = 0; i < g.entries_.size(); ++i) {
        g.entries_[i] = x.entries_[i] + y.entries_[i];
    }
    return g;
}

SuperMatrix operator-(const SuperMatrix& x, const SuperMatrix& y) {
    require_same_shape(x, y);
    SuperMatrix g(x.m_, x.n_);
    for (std::size_t i = 0; i < g.entries_.size(); ++i) {
        g.entries_[i] = x.entries_[i] - y.entries_[i];
    }
    return g;
}

SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y) {
    require_same_shape(x, y);
    const int d = x.dim();
    SuperMatrix g(x.m_, x.n_);
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) {
            const Rational& xik = x.at(i, k);
            if (xik == 0) {
                continue;
            }
            for (int j = 0; j < d; ++j) {
                if (y.at(k, j) != 0) {
                    g.set(i, j, g.at(i, j) + xik * y.at(k, j));
                }
            }
        }
    }
    return g;
}

SuperMatrix operator*(const Rational& c, const SuperMatrix& x) {
    SuperMatrix g(x.m_, x.n_);
    for (std::size_t i = 0; i < g.entries_.size(); ++i) {
        g.entries_[i] = c * x.entries_[i];
    }
    return g;
}

std::optional<Parity> parity_of(const SuperMatrix& g) {
    const bool even = g.in_even_subspace();
    const bool odd = g.in_odd_subspace();
    if (even) {
        return Parity::Even;  // the zero matrix lands here
    }
    if (odd) {
        return Parity::Odd;
    }
    return std::nullopt;
}

SuperMatrix supercommutator(const SuperMatrix& x, const SuperMatrix& y) {
    require_same_shape(x, y);
    SuperMatrix result(x.even_dim(), x.odd_dim());
    const SuperMatrix x_parts[2] = {x.even_component(), x.odd_component()};
    const SuperMatrix y_parts[2] = {y.even_component(), y.odd_component()};
    for (int i = 0; i < 2; ++i) {
        if (x_parts[i].is_zero()) {
            continue;
        }
        for (int j = 0; j < 2; ++j) {
            if (y_parts[j].is_zero()) {
                continue;
            }
            // odd-odd picks up the + sign
            if (i == 1 && j == 1) {
                result = result + x_parts[i] * y_parts[j] + y_parts[j] * x_parts[i];
            } else {
                result = result + x_parts[i] * y_parts[j] - y_parts[j] * x_parts[i];
            }
        }
    }
    return result;
}

Rational supertrace(const SuperMatrix& g) {
    Rational t(0);
    for (int i = 0; i < g.even_dim(); ++i) {
        t += g.at(i, i);
    }
    for (int i = g.even_dim(); i < g.dim(); ++i) {
        t -= g.at(i, i);
    }
    return t;
}

SuperMatrix power(const SuperMatrix& g, int exponent) {
    if (exponent < 0) {
        throw Error("negative matrix power");
    }
    SuperMatrix result = SuperMatrix::identity(g.even_dim(), g.odd_dim());
    SuperMatrix base = g;
    int e = exponent;
    while (e > 0) {
        if (e & 1) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

bool is_nilpotent(const SuperMatrix& g) {
    if (g.dim() == 0) {
        return true;
    }
    return power(g, g.dim()).is_zero();
}

int rank(const SuperMatrix& g) {
    const int d = g.dim();
    // Clear denominators row by row; rank is unchanged.
    std::vector<std::vector<Integer>> a(d, std::vector<Integer>(d));
    for (int i = 0; i < d; ++i) {
        Integer l(1);
        for (int j = 0; j < d; ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g.at(i, j).get_den().get_mpz_t());
        }
        for (int j = 0; j < d; ++j) {
            a[i][j] = g.at(i, j).get_num() * (l / g.at(i, j).get_den());
        }
    }
    // Bareiss elimination with first-nonzero pivoting; every division below is
    // exact by the Sylvester determinant identity.
    Integer prev(1);
    int pr = 0;
    for (int pc = 0; pc < d && pr < d; ++pc) {
        int pivot_row = -1;
        for (int i = pr; i < d; ++i) {
            if (a[i][pc] != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) {
            continue;
        }
        std::swap(a[pr], a[pivot_row]);
        for (int i = pr + 1; i < d; ++i) {
            for (int j = pc + 1; j < d; ++j) {
                a[i][j] = (a[pr][pc] * a[i][j] - a[i][pc] * a[pr][j]) / prev;
            }
            a[i][pc] = 0;
        }
        prev = a[pr][pc];
        ++pr;
    }
    return pr;
}

SuperMatrix inverse(const SuperMatrix& p) {
    const int d = p.dim();
    // Gauss-Jordan on [p | I].
    std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(2 * d, Rational(0)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            rows[i][j] = p.at(i, j);
        }
        rows[i][d + i] = 1;
    }
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int i = col; i < d; ++i) {
            if (rows[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            throw Singular("matrix is not invertible");
        }
        std::swap(rows[col], rows[pivot]);
        const Rational inv = 1 / rows[col][col];
        for (int j = col; j < 2 * d; ++j) {
            rows[col][j] *= inv;
        }
        for (int i = 0; i < d; ++i) {
            if (i == col || rows[i][col] == 0) {
                continue;
            }
            const Rational factor = rows[i][col];
            for (int j = col; j < 2 * d; ++j) {
                rows[i][j] -= factor * rows[col][j];
            }
        }
    }
    SuperMatrix result(p.even_dim(), p.odd_dim());
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            result.set(i, j, rows[i][d + j]);
        }
    }
    return result;
}

SuperMatrix conjugate(const SuperMatrix& g, const SuperMatrix& p) {
    require_same_shape(g, p);
    if (parity_of(p) != Parity::Even) {
        throw NotEven("conjugating matrix must be even");
    }
    return p * g * inverse(p);
}

} // namespace glmn
