#include <doctest.h>

#include <random>
#include <vector>

#include "glmn/jordan.hpp"
#include "glmn/orbit.hpp"
#include "test_util.hpp"

using namespace glmn;
using test::from_int_grid;
using test::naive_rank;

namespace {

void all_partitions_of(int total, int max_part, std::vector<int>& current,
                       std::vector<Partition>& out) {
    if (total == 0) {
        out.push_back(Partition(current));
        return;
    }
    for (int part = std::min(max_part, total); part >= 1; --part) {
        current.push_back(part);
        all_partitions_of(total - part, part, current, out);
        current.pop_back();
    }
}

std::vector<Partition> partitions_up_to(int limit) {
    std::vector<Partition> out;
    for (int total = 0; total <= limit; ++total) {
        std::vector<int> scratch;
        all_partitions_of(total, total, scratch, out);
    }
    return out;
}

// Independent oracle: partition from the rank sequence of powers, ranks by
// plain row reduction.
Partition partition_by_rank_sequence(const SuperMatrix& N) {
    std::vector<int> counts;
    SuperMatrix p = SuperMatrix::identity(N.even_dim(), N.odd_dim());
    int prev = N.dim();
    while (prev > 0) {
        p = p * N;
        const int cur = naive_rank(p);
        counts.push_back(prev - cur);
        prev = cur;
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

} // namespace

TEST_CASE("partition invariants") {
    CHECK(Partition({3, 2, 2, 1}).sum() == 8);
    CHECK(Partition().empty());
    CHECK_THROWS_AS(Partition({2, 3}), BadShape);
    CHECK_THROWS_AS(Partition({1, 0}), BadShape);
}

TEST_CASE("jordan_matrix lays out superdiagonal blocks") {
    const SuperMatrix j3 = jordan_matrix(Partition({3}));
    CHECK(j3 == from_int_grid(3, 0, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));

    CHECK(jordan_matrix(Partition({1})).is_zero());

    const SuperMatrix j21 = jordan_matrix(Partition({2, 1}));
    CHECK(j21 == from_int_grid(3, 0, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}));
}

TEST_CASE("partition_of_nilpotent") {
    CHECK(partition_of_nilpotent(jordan_matrix(Partition({3}))) == Partition({3}));
    CHECK(partition_of_nilpotent(SuperMatrix::zero(4, 0)) == Partition({1, 1, 1, 1}));
    CHECK(partition_of_nilpotent(SuperMatrix::zero(0, 0)) == Partition());

    CHECK_THROWS_AS(partition_of_nilpotent(SuperMatrix::identity(2, 0)), NotNilpotent);

    // square of a marked representative: one column marker on the first block
    // of k = [2,1] extends the m-side chain, the n side keeps [2,1]
    const OrbitParams p = OrbitParams::validate(5, 3, {2, 1}, {1}, {}, 0);
    const SuperMatrix E = square(representative(p));
    CHECK(partition_of_nilpotent(E) == partition_by_rank_sequence(E));
    CHECK(partition_of_nilpotent(E) == Partition({3, 2, 1, 1, 1}));
}

TEST_CASE("partition round-trips through jordan_matrix up to size 8") {
    for (const auto& p : partitions_up_to(8)) {
        const SuperMatrix N = jordan_matrix(p);
        CHECK(partition_of_nilpotent(N) == p);
        CHECK(partition_by_rank_sequence(N) == p);
    }
}

TEST_CASE("sl2 triple for a partition: frozen examples") {
    const Sl2Triple t3 = sl2_triple_for_partition(Partition({3}));
    CHECK(t3.H == from_int_grid(3, 0, {{2, 0, 0}, {0, 0, 0}, {0, 0, -2}}));
    CHECK(t3.E == jordan_matrix(Partition({3})));
    CHECK(t3.F == from_int_grid(3, 0, {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}}));

    const Sl2Triple t1 = sl2_triple_for_partition(Partition({1}));
    CHECK(t1.H.is_zero());
    CHECK(t1.E.is_zero());
    CHECK(t1.F.is_zero());

    const Sl2Triple t2 = sl2_triple_for_partition(Partition({2}));
    CHECK(t2.H == from_int_grid(2, 0, {{1, 0}, {0, -1}}));
    CHECK(t2.F == from_int_grid(2, 0, {{0, 0}, {1, 0}}));
}

TEST_CASE("sl2 triple satisfies the relations for every partition up to 8") {
    const Rational two(2);
    for (const auto& p : partitions_up_to(8)) {
        const Sl2Triple t = sl2_triple_for_partition(p);
        CHECK(supercommutator(t.E, t.F) == t.H);
        CHECK(supercommutator(t.H, t.E) == two * t.E);
        CHECK(supercommutator(t.H, t.F) == -(two * t.F));

        // H is integer diagonal with trace 0
        Rational trace(0);
        for (int i = 0; i < t.H.dim(); ++i) {
            for (int j = 0; j < t.H.dim(); ++j) {
                if (i != j) {
                    CHECK(t.H.at(i, j) == 0);
                }
            }
            CHECK(is_integer(t.H.at(i, i)));
            trace += t.H.at(i, i);
        }
        CHECK(trace == 0);

        // subdiagonal closed form: b_j = j (d - j) within each block
        int offset = 0;
        for (int d : p.parts()) {
            for (int j = 1; j <= d - 1; ++j) {
                CHECK(t.F.at(offset + j, offset + j - 1) == j * (d - j));
            }
            offset += d;
        }
    }
}

TEST_CASE("jordan_basis realizes the similarity") {
    // already canonical: the defining equation is the contract
    const SuperMatrix j3 = jordan_matrix(Partition({3}));
    const SuperMatrix p3 = jordan_basis(j3);
    CHECK(inverse(p3) * j3 * p3 == j3);

    // transpose of J_2: the order-reversing permutation works
    const SuperMatrix n = from_int_grid(2, 0, {{0, 0}, {1, 0}});
    const SuperMatrix p = jordan_basis(n);
    CHECK(p == from_int_grid(2, 0, {{0, 1}, {1, 0}}));
    CHECK(inverse(p) * n * p == jordan_matrix(Partition({2})));

    CHECK_THROWS_AS(jordan_basis(SuperMatrix::identity(2, 0)), NotNilpotent);

    std::mt19937 rng(31);
    for (const auto& part : partitions_up_to(5)) {
        const SuperMatrix canonical = jordan_matrix(part);
        const SuperMatrix s = test::random_even_unimodular(rng, canonical.dim(), 0, 14);
        const SuperMatrix conjugated = s * canonical * inverse(s);
        const SuperMatrix basis = jordan_basis(conjugated);
        CHECK(inverse(basis) * conjugated * basis == canonical);
        CHECK(partition_of_nilpotent(conjugated) == part);
    }
}
