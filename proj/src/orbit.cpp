#include "glmn/orbit.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "glmn/error.hpp"

namespace glmn {

int OrbitParams::r() const {
    int sum = 0;
    for (int ki : k_) {
        sum += ki;
    }
    return sum;
}

MarkerClass OrbitParams::marker_class(int pos) const {
    const bool col = column_marked_at(pos);
    const bool row = row_marked_at(pos);
    if (col && row) {
        return MarkerClass::ColumnAndRow;
    }
    if (col) {
        return MarkerClass::ColumnOnly;
    }
    if (row) {
        return MarkerClass::RowOnly;
    }
    return MarkerClass::Unmarked;
}

int OrbitParams::block_start(int pos) const {
    int start = 1;
    for (int i = 1; i < pos; ++i) {
        start += k_[i - 1];
    }
    return start;
}

int OrbitParams::block_end(int pos) const {
    int end = 0;
    for (int i = 1; i <= pos; ++i) {
        end += k_[i - 1];
    }
    return end;
}

std::set<int> OrbitParams::column_index_values() const {
    std::set<int> values;
    for (int pos : column_marked_) {
        values.insert(block_end(pos));
    }
    return values;
}

std::set<int> OrbitParams::row_index_values() const {
    std::set<int> values;
    for (int pos : row_marked_) {
        values.insert(block_start(pos));
    }
    return values;
}

OrbitParams OrbitParams::validate(int m, int n, std::vector<int> k,
                                  const std::set<int>& column_marked,
                                  const std::set<int>& row_marked, int s) {
    if (m < 0 || n < 0) {
        throw BadShape("m and n must be non-negative");
    }
    if (s < 0) {
        throw BadShape("s must be non-negative");
    }
    const int t = static_cast<int>(k.size());
    for (int i = 0; i < t; ++i) {
        if (k[i] < 1) {
            throw BadShape("block sizes must be positive");
        }
        if (i > 0 && k[i] > k[i - 1]) {
            throw BadShape("block sizes must be weakly decreasing");
        }
    }
    for (int pos : column_marked) {
        if (pos < 1 || pos > t) {
            throw BadMarker("column marker position " + std::to_string(pos) +
                            " outside 1.." + std::to_string(t));
        }
    }
    for (int pos : row_marked) {
        if (pos < 1 || pos > t) {
            throw BadMarker("row marker position " + std::to_string(pos) + " outside 1.." +
                            std::to_string(t));
        }
    }

    OrbitParams p;
    p.m_ = m;
    p.n_ = n;
    p.s_ = s;
    p.k_ = std::move(k);

    // Canonical order among equal-size blocks: sort each run of equal sizes by
    // marker class, then reassign positions run by run.
    std::vector<MarkerClass> classes(t);
    for (int pos = 1; pos <= t; ++pos) {
        const bool col = column_marked.count(pos) > 0;
        const bool row = row_marked.count(pos) > 0;
        classes[pos - 1] = col && row   ? MarkerClass::ColumnAndRow
                           : col        ? MarkerClass::ColumnOnly
                           : row        ? MarkerClass::RowOnly
                                        : MarkerClass::Unmarked;
    }
    int run_begin = 0;
    while (run_begin < t) {
        int run_end = run_begin;
        while (run_end < t && p.k_[run_end] == p.k_[run_begin]) {
            ++run_end;
        }
        std::sort(classes.begin() + run_begin, classes.begin() + run_end);
        run_begin = run_end;
    }
    for (int pos = 1; pos <= t; ++pos) {
        switch (classes[pos - 1]) {
            case MarkerClass::ColumnAndRow:
                p.column_marked_.insert(pos);
                p.row_marked_.insert(pos);
                break;
            case MarkerClass::ColumnOnly:
                p.column_marked_.insert(pos);
                break;
            case MarkerClass::RowOnly:
                p.row_marked_.insert(pos);
                break;
            case MarkerClass::Unmarked:
                break;
        }
    }

    if (p.r() + p.r1() + p.s_ > m) {
        throw DimensionOverflow("r + r1 + s = " + std::to_string(p.r() + p.r1() + p.s_) +
                                " exceeds m = " + std::to_string(m));
    }
    if (p.r() + p.r2() + p.s_ > n) {
        throw DimensionOverflow("r + r2 + s = " + std::to_string(p.r() + p.r2() + p.s_) +
                                " exceeds n = " + std::to_string(n));
    }
    return p;
}

OrbitParams OrbitParams::from_index_values(int m, int n, std::vector<int> k,
                                           const std::set<int>& column_index_values,
                                           const std::set<int>& row_index_values, int s) {
    const int t = static_cast<int>(k.size());
    std::set<int> column_marked;
    std::set<int> row_marked;
    int cumulative = 0;
    for (int pos = 1; pos <= t; ++pos) {
        const int start = cumulative + 1;
        cumulative += k[pos - 1];
        if (column_index_values.count(cumulative) > 0) {
            column_marked.insert(pos);
        }
        if (row_index_values.count(start) > 0) {
            row_marked.insert(pos);
        }
    }
    for (int v : column_index_values) {
        int check = 0;
        bool found = false;
        for (int pos = 1; pos <= t && !found; ++pos) {
            check += k[pos - 1];
            found = check == v;
        }
        if (!found) {
            throw BadMarker("column index value " + std::to_string(v) +
                            " is not a partial sum of k");
        }
    }
    for (int v : row_index_values) {
        int check = 1;
        bool found = false;
        for (int pos = 1; pos <= t && !found; ++pos) {
            found = check == v;
            check += k[pos - 1];
        }
        if (!found) {
            throw BadMarker("row index value " + std::to_string(v) +
                            " is not 1 plus a partial sum of k");
        }
    }
    return validate(m, n, std::move(k), column_marked, row_marked, s);
}

SuperMatrix representative(const OrbitParams& p) {
    const int m = p.even_dim();
    const int n = p.odd_dim();
    const int r = p.r();
    SuperMatrix e(m, n);
    // b-quadrant: I_r padded with zeros.
    for (int i = 0; i < r; ++i) {
        e.set(i, m + i, 1);
    }
    // c-quadrant, written via e.set(m + row, col) with 0-based (row, col).
    for (int pos = 1; pos <= p.t(); ++pos) {
        const int start = p.block_start(pos) - 1;
        for (int j = 0; j + 1 < p.k()[pos - 1]; ++j) {
            e.set(m + start + j, start + j + 1, 1);
        }
    }
    int count = 0;
    for (int pos : p.column_marked()) {
        e.set(m + p.block_end(pos) - 1, r + count, 1);
        ++count;
    }
    count = 0;
    for (int pos : p.row_marked()) {
        e.set(m + r + count, p.block_start(pos) - 1, 1);
        ++count;
    }
    for (int u = 0; u < p.tail(); ++u) {
        e.set(m + r + p.r2() + u, r + p.r1() + u, 1);
    }
    return e;
}

SuperMatrix square(const SuperMatrix& e) {
    if (!e.in_odd_subspace()) {
        throw NotOdd("square expects an element of the odd subspace");
    }
    return e * e;
}

namespace {

void partitions_of(int total, int max_part, std::vector<int>& current,
                   std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(max_part, total); part >= 1; --part) {
        current.push_back(part);
        partitions_of(total - part, part, current, out);
        current.pop_back();
    }
}

void class_vectors(const std::vector<int>& k, std::size_t pos, std::vector<MarkerClass>& current,
                   std::vector<std::vector<MarkerClass>>& out) {
    if (pos == k.size()) {
        out.push_back(current);
        return;
    }
    // Canonical ordering: within a run of equal sizes, classes never decrease.
    int first = 0;
    if (pos > 0 && k[pos] == k[pos - 1]) {
        first = static_cast<int>(current.back());
    }
    for (int c = first; c <= static_cast<int>(MarkerClass::Unmarked); ++c) {
        current.push_back(static_cast<MarkerClass>(c));
        class_vectors(k, pos + 1, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<OrbitParams> enumerate_params(int m, int n) {
    if (m < 0 || n < 0) {
        throw BadShape("m and n must be non-negative");
    }
    std::vector<OrbitParams> result;
    const int r_max = std::min(m, n);
    for (int r = 0; r <= r_max; ++r) {
        std::vector<std::vector<int>> partitions;
        std::vector<int> scratch;
        partitions_of(r, r, scratch, partitions);
        if (r == 0) {
            partitions.assign(1, {});
        }
        for (const auto& k : partitions) {
            std::vector<std::vector<MarkerClass>> assignments;
            std::vector<MarkerClass> scratch_classes;
            class_vectors(k, 0, scratch_classes, assignments);
            for (const auto& classes : assignments) {
                std::set<int> column_marked;
                std::set<int> row_marked;
                for (std::size_t i = 0; i < classes.size(); ++i) {
                    const int pos = static_cast<int>(i) + 1;
                    if (classes[i] == MarkerClass::ColumnAndRow ||
                        classes[i] == MarkerClass::ColumnOnly) {
                        column_marked.insert(pos);
                    }
                    if (classes[i] == MarkerClass::ColumnAndRow ||
                        classes[i] == MarkerClass::RowOnly) {
                        row_marked.insert(pos);
                    }
                }
                const int r1 = static_cast<int>(column_marked.size());
                const int r2 = static_cast<int>(row_marked.size());
                if (r + r1 > m || r + r2 > n) {
                    continue;
                }
                const int s_max = std::min(m - r - r1, n - r - r2);
                for (int s = 0; s <= s_max; ++s) {
                    result.push_back(
                        OrbitParams::validate(m, n, k, column_marked, row_marked, s));
                }
            }
        }
    }
    return result;
}

} // namespace glmn
