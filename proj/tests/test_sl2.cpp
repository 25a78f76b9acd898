#include <doctest.h>

#include "glmn/sl2.hpp"
#include "test_util.hpp"

using namespace glmn;
using test::from_int_grid;

namespace {

SuperMatrix even_quadrant(const SuperMatrix& g) {
    SuperMatrix out(g.even_dim(), 0);
    for (int i = 0; i < g.even_dim(); ++i) {
        for (int j = 0; j < g.even_dim(); ++j) {
            out.set(i, j, g.at(i, j));
        }
    }
    return out;
}

SuperMatrix odd_quadrant(const SuperMatrix& g) {
    SuperMatrix out(g.odd_dim(), 0);
    for (int i = 0; i < g.odd_dim(); ++i) {
        for (int j = 0; j < g.odd_dim(); ++j) {
            out.set(i, j, g.at(g.even_dim() + i, g.even_dim() + j));
        }
    }
    return out;
}

void check_sl2_relations(const SuperMatrix& H, const SuperMatrix& E, const SuperMatrix& F) {
    const Rational two(2);
    CHECK(supercommutator(E, F) == H);
    CHECK(supercommutator(H, E) == two * E);
    CHECK(supercommutator(H, F) == -(two * F));
}

} // namespace

TEST_CASE("build_H: frozen examples") {
    const OrbitParams fundamental = OrbitParams::validate(2, 1, {1}, {1}, {}, 0);
    CHECK(build_H(fundamental) == from_int_grid(2, 1, {{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}));

    CHECK(build_H(OrbitParams::validate(2, 2, {}, {}, {}, 0)).is_zero());

    // row marker shifts the n-side block by -1 and parks +k on the tail
    const OrbitParams row_marked = OrbitParams::validate(3, 3, {1}, {}, {1}, 0);
    SuperMatrix expected(3, 3);
    expected.set(3, 3, -1);
    expected.set(4, 4, 1);
    CHECK(build_H(row_marked) == expected);
}

TEST_CASE("build_F: frozen examples") {
    const OrbitParams fundamental = OrbitParams::validate(2, 1, {1}, {1}, {}, 0);
    CHECK(build_F(fundamental) == from_int_grid(2, 1, {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}));

    CHECK(build_F(OrbitParams::validate(3, 2, {}, {}, {}, 1)).is_zero());

    // k=[2] unmarked: one recurrence step on each side
    const OrbitParams unmarked = OrbitParams::validate(2, 2, {2}, {}, {}, 0);
    SuperMatrix expected(2, 2);
    expected.set(1, 0, 1);
    expected.set(3, 2, 1);
    CHECK(build_F(unmarked) == expected);
}

TEST_CASE("sl2_triple_for: frozen fundamental case") {
    const OrbitParams fundamental = OrbitParams::validate(2, 1, {1}, {1}, {}, 0);
    const Sl2Triple t = sl2_triple_for(fundamental);
    CHECK(t.H == from_int_grid(2, 1, {{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}));
    CHECK(t.E == from_int_grid(2, 1, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}));
    CHECK(t.F == from_int_grid(2, 1, {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}));
    check_sl2_relations(t.H, t.E, t.F);

    const Sl2Triple zero = sl2_triple_for(OrbitParams::validate(2, 3, {}, {}, {}, 0));
    CHECK(zero.H.is_zero());
    CHECK(zero.E.is_zero());
    CHECK(zero.F.is_zero());
}

TEST_CASE("triple construction across the small enumeration") {
    const Rational two(2);
    for (int m = 0; m <= 6; ++m) {
        for (int n = 0; n <= 6 - m; ++n) {
            for (const auto& p : enumerate_params(m, n)) {
                const Sl2Triple t = sl2_triple_for(p);
                check_sl2_relations(t.H, t.E, t.F);

                CHECK(t.H.in_even_subspace());
                CHECK(t.F.in_even_subspace());
                for (int i = 0; i < t.H.dim(); ++i) {
                    for (int j = 0; j < t.H.dim(); ++j) {
                        if (i != j) {
                            CHECK(t.H.at(i, j) == 0);
                        }
                    }
                    CHECK(is_integer(t.H.at(i, i)));
                }

                // closed forms for the subdiagonal recurrences, derived by
                // telescoping: a_j = j(k+1-j) on marked, j(k-j) on unmarked
                // blocks (m side); b_j = (j+1)(k-j) on marked, j(k-j) on
                // unmarked blocks (n side)
                for (int pos = 1; pos <= p.t(); ++pos) {
                    const int k = p.k()[pos - 1];
                    const int start = p.block_start(pos) - 1;
                    for (int j = 1; j <= k - 1; ++j) {
                        const int a_expected =
                            p.column_marked_at(pos) ? j * (k + 1 - j) : j * (k - j);
                        CHECK(t.F.at(start + j, start + j - 1) == a_expected);
                        const int b_expected =
                            p.row_marked_at(pos) ? (j + 1) * (k - j) : j * (k - j);
                        CHECK(t.F.at(m + start + j, m + start + j - 1) == b_expected);
                    }
                }

                // each quadrant is an sl2 triple in its own right
                check_sl2_relations(even_quadrant(t.H), even_quadrant(t.E),
                                    even_quadrant(t.F));
                check_sl2_relations(odd_quadrant(t.H), odd_quadrant(t.E),
                                    odd_quadrant(t.F));
            }
        }
    }
}
