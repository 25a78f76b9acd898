#ifndef GLMN_ORBIT_HPP
#define GLMN_ORBIT_HPP

#include <set>
#include <vector>

#include "glmn/supermatrix.hpp"

namespace glmn {

// Marker classes in canonical order: among blocks of equal size, positions are
// sorted column+row < column-only < row-only < unmarked.
enum class MarkerClass { ColumnAndRow = 0, ColumnOnly = 1, RowOnly = 2, Unmarked = 3 };

/*
 * Combinatorial datum behind an odd nilpotent orbit representative of
 * gl(m|n): a weakly decreasing list k of Jordan block sizes, sets of
 * column-/row-marked block positions (1-based), and the identity tail size s.
 *
 * Derived quantities: r = sum of k, r1/r2 = number of column/row markers.
 * Validity requires r + r1 + s <= m and r + r2 + s <= n.
 *
 * Markers are stored as block positions rather than the absolute index values
 * i_p = k_1+...+k_i (column) and j_q = 1+k_1+...+k_{i-1} (row); conversions in
 * both directions are provided below.
 */
class OrbitParams {
public:
    // Canonicalizes (equal-size blocks reordered by marker class) or throws
    // BadShape / BadMarker / DimensionOverflow.
    static OrbitParams validate(int m, int n, std::vector<int> k,
                                const std::set<int>& column_marked,
                                const std::set<int>& row_marked, int s);

    // Markers given as the absolute index values used by C_{r1} and R_{r2}.
    static OrbitParams from_index_values(int m, int n, std::vector<int> k,
                                         const std::set<int>& column_index_values,
                                         const std::set<int>& row_index_values, int s);

    int even_dim() const { return m_; }
    int odd_dim() const { return n_; }
    int tail() const { return s_; }
    const std::vector<int>& k() const { return k_; }
    int t() const { return static_cast<int>(k_.size()); }
    int r() const;
    int r1() const { return static_cast<int>(column_marked_.size()); }
    int r2() const { return static_cast<int>(row_marked_.size()); }

    const std::set<int>& column_marked() const { return column_marked_; }
    const std::set<int>& row_marked() const { return row_marked_; }
    bool column_marked_at(int pos) const { return column_marked_.count(pos) > 0; }
    bool row_marked_at(int pos) const { return row_marked_.count(pos) > 0; }
    MarkerClass marker_class(int pos) const;

    // 1-based row index of the first/last row of block pos inside the r x r
    // Jordan corner; block_end(pos) is the absolute column index value i_p
    // and block_start(pos) the row index value j_q.
    int block_start(int pos) const;
    int block_end(int pos) const;

    std::set<int> column_index_values() const;
    std::set<int> row_index_values() const;

    friend bool operator==(const OrbitParams& a, const OrbitParams& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.s_ == b.s_ && a.k_ == b.k_ &&
               a.column_marked_ == b.column_marked_ && a.row_marked_ == b.row_marked_;
    }

private:
    OrbitParams() = default;

    int m_ = 0;
    int n_ = 0;
    int s_ = 0;
    std::vector<int> k_;
    std::set<int> column_marked_;
    std::set<int> row_marked_;
};

// The odd nilpotent representative: b-quadrant carries I_r padded with zeros,
// c-quadrant the Jordan blocks J_{k_1}, ..., J_{k_t}, the marker columns/rows
// and the identity tail I_s.
SuperMatrix representative(const OrbitParams& p);

// E = e^2 for an element of the odd subspace. Throws NotOdd otherwise.
SuperMatrix square(const SuperMatrix& e);

// Every canonical OrbitParams valid for (m, n), exactly once, ordered
// lexicographically by (r asc, k in descending-lex partition order, marker
// class vector asc, s asc). The order is deterministic across runs.
std::vector<OrbitParams> enumerate_params(int m, int n);

} // namespace glmn

#endif
