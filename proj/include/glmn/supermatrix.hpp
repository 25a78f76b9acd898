#ifndef GLMN_SUPERMATRIX_HPP
#define GLMN_SUPERMATRIX_HPP

#include <optional>
#include <vector>

#include "glmn/error.hpp"
#include "glmn/rational.hpp"

namespace glmn {

enum class Parity { Even, Odd };

constexpr Parity operator+(Parity a, Parity b) {
    return a == b ? Parity::Even : Parity::Odd;
}
constexpr Parity opposite(Parity p) {
    return p == Parity::Even ? Parity::Odd : Parity::Even;
}
const char* to_string(Parity p);

/*
 * Square matrix over Q with an (m|n) block grading. Rows and columns follow
 * the basis order I(m|n): indices 0..m-1 span the even subspace, m..m+n-1 the
 * odd one. The quadrants of
 *
 *     ( a  b )      a: m x m,  b: m x n,
 *     ( c  d )      c: n x m,  d: n x n
 *
 * split the matrix into its even part (a, d) and odd part (b, c).
 */
class SuperMatrix {
public:
    SuperMatrix(int m, int n);  // zero matrix

    // Throws DimensionMismatch unless the grid is exactly (m+n) x (m+n).
    static SuperMatrix from_grid(int m, int n,
                                 const std::vector<std::vector<Rational>>& grid);
    static SuperMatrix zero(int m, int n);
    static SuperMatrix identity(int m, int n);
    // Elementary matrix with a single 1 at (row, col), 0-based.
    static SuperMatrix basis_unit(int m, int n, int row, int col);

    int even_dim() const { return m_; }
    int odd_dim() const { return n_; }
    int dim() const { return m_ + n_; }

    const Rational& at(int row, int col) const;
    void set(int row, int col, Rational value);

    Parity slot_parity(int index) const {
        return index < m_ ? Parity::Even : Parity::Odd;
    }

    bool is_zero() const;
    // Membership in the graded subspaces; the zero matrix lies in both.
    bool in_even_subspace() const;  // b = c = 0
    bool in_odd_subspace() const;   // a = d = 0

    SuperMatrix even_component() const;  // diagonal quadrants only
    SuperMatrix odd_component() const;   // off-diagonal quadrants only

    friend bool operator==(const SuperMatrix& x, const SuperMatrix& y);

    SuperMatrix operator-() const;
    friend SuperMatrix operator+(const SuperMatrix& x, const SuperMatrix& y);
    friend SuperMatrix operator-(const SuperMatrix& x, const SuperMatrix& y);
    friend SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y);
    friend SuperMatrix operator*(const Rational& c, const SuperMatrix& x);

private:
    int m_;
    int n_;
    std::vector<Rational> entries_;  // row-major, (m+n)^2 cells
};

// Even when b = c = 0, odd when a = d = 0, absent when neither holds.
// The zero matrix reports even.
std::optional<Parity> parity_of(const SuperMatrix& g);

// [x, y] = xy - (-1)^{|x||y|} yx on homogeneous elements, extended bilinearly
// over the homogeneous decomposition of inhomogeneous inputs.
SuperMatrix supercommutator(const SuperMatrix& x, const SuperMatrix& y);

Rational supertrace(const SuperMatrix& g);  // tr(a) - tr(d)

SuperMatrix power(const SuperMatrix& g, int exponent);

bool is_nilpotent(const SuperMatrix& g);  // g^(m+n) = 0

// Exact rank via fraction-free (Bareiss) elimination on the integer matrix
// obtained by clearing denominators row by row.
int rank(const SuperMatrix& g);

SuperMatrix inverse(const SuperMatrix& p);  // throws Singular

// p g p^{-1}. Throws NotEven unless parity_of(p) is even, Singular when p has
// no inverse.
SuperMatrix conjugate(const SuperMatrix& g, const SuperMatrix& p);

} // namespace glmn

#endif
