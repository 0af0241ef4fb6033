#include <doctest.h>

#include <kshape/skew.hpp>

using namespace kshape;

TEST_CASE("k-boundary keeps exactly the cells with hook at most k") {
    const Partition p({4, 2, 2, 1});
    const SkewShape b = k_boundary(p, 2);
    // Hooks of p: row 0 is (7,5,2,1), row 1 is (4,2), row 2 is (3,1), row 3 is (1).
    CHECK(b.cell_count() == 5);
    CHECK(b.occupies(Cell{0, 2}));
    CHECK(b.occupies(Cell{0, 3}));
    CHECK(b.occupies(Cell{1, 1}));
    CHECK(b.occupies(Cell{2, 1}));
    CHECK(b.occupies(Cell{3, 0}));
    CHECK(!b.occupies(Cell{0, 0}));
    CHECK(!b.occupies(Cell{1, 0}));

    CHECK(b.num_cols() == 4);
    CHECK(b.column(0) == ColumnSpan{1, 3});
    CHECK(b.column(1) == ColumnSpan{2, 1});
    CHECK(b.column(2) == ColumnSpan{1, 0});
    CHECK(b.column(3) == ColumnSpan{1, 0});
    CHECK(b.row_profile() == std::vector<int>{2, 1, 1, 1});
    CHECK(b.col_profile() == std::vector<int>{1, 2, 1, 1});
}

TEST_CASE("boundary of a small partition can be the whole diagram") {
    const Partition p({2, 1});
    const SkewShape b = k_boundary(p, 3);
    CHECK(b.cell_count() == p.cell_count());
    CHECK(canonical_partition(b) == p);
}

TEST_CASE("canonical partition fills below and to the left") {
    const Partition p({12, 9, 7, 6, 5, 3, 3, 2, 1, 1, 1, 1});
    for (int k = 4; k <= 7; ++k) {
        CHECK(canonical_partition(k_boundary(p, k)) == p);
    }
    // For k <= 3 the boundary of this partition skips whole rows, so the
    // filling is no longer determined.
    CHECK_THROWS_AS(canonical_partition(k_boundary(p, 2)), PreconditionError);
    CHECK_THROWS_AS(canonical_partition(k_boundary(p, 3)), PreconditionError);
}

TEST_CASE("canonical partition requires a continuous lower border") {
    // Column 1 ends strictly below the bottom of column 0: the border is broken.
    const SkewShape gap(std::vector<ColumnSpan>{{1, 2}, {1, 0}});
    CHECK(!gap.lower_border_continuous());
    CHECK_THROWS_AS(canonical_partition(gap), PreconditionError);

    // Two columns touching only at a corner still connect.
    const SkewShape corner(std::vector<ColumnSpan>{{1, 1}, {1, 0}});
    CHECK(corner.lower_border_continuous());
    CHECK(canonical_partition(corner) == Partition({2, 1}));
}

TEST_CASE("k-shape test checks both boundary profiles") {
    CHECK(is_k_shape(Partition(std::vector<int>{}), 1));
    CHECK(is_k_shape(Partition(std::vector<int>{}), 5));
    CHECK(is_k_shape(Partition({2, 1}), 3));
    CHECK(is_k_shape(Partition({2, 2}), 3));
    CHECK(is_k_shape(Partition({12, 9, 7, 6, 5, 3, 3, 2, 1, 1, 1, 1}), 6));
    // The 2-boundary of (4,2,2,1) has column profile (1,2,1,1): not a 2-shape.
    CHECK(!is_k_shape(Partition({4, 2, 2, 1}), 2));
    // The 1-boundary of (2,2) is the single top-right cell: row profile (0,1).
    CHECK(!is_k_shape(Partition({2, 2}), 1));
}
