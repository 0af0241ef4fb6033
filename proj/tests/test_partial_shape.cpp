#include <doctest.h>

#include <kshape/partial_shape.hpp>

using namespace kshape;

namespace {

PartialKShape make(int k, std::vector<LabeledColumn> cols) {
    return PartialKShape(k, std::move(cols));
}

} // namespace

TEST_CASE("partial-shape construction validates ordering and hook bounds") {
    CHECK_NOTHROW(make(4, {{3, 0, 1}, {2, 0, 1}}));
    CHECK_NOTHROW(make(3, {{2, 1, 1}, {1, 0, 2}}));
    CHECK_THROWS_AS(PartialKShape(1), DomainError);
    CHECK_THROWS_AS(make(4, {{2, 0, 1}, {3, 0, 1}}), DomainError);  // heights increase
    CHECK_THROWS_AS(make(4, {{3, 0, 1}, {3, 1, 1}}), DomainError);  // bottoms increase
    CHECK_THROWS_AS(make(4, {{3, 0, 1}, {2, 2, 1}}), DomainError);  // tops increase
    CHECK_THROWS_AS(make(4, {{3, 0, 3}}), DomainError);             // bad label
    // A label-2 column tolerates a bottom hook of only k-1.
    CHECK_NOTHROW(make(3, {{2, 0, 1}, {1, 0, 2}}));
    CHECK_THROWS_AS(make(3, {{2, 0, 2}, {1, 0, 2}}), DomainError);
}

TEST_CASE("row and hook queries") {
    const PartialKShape s = make(6, {{4, 1, 1}, {3, 0, 2}, {3, 0, 2}});
    CHECK(s.num_rows() == 5);
    CHECK(s.min_height() == 3);
    CHECK(s.first_col_of_row(0) == 1);
    CHECK(s.last_col_of_row(0) == 2);
    CHECK(s.first_col_of_row(1) == 0);
    CHECK(s.last_col_of_row(1) == 2);
    CHECK(s.first_col_of_row(4) == 0);
    CHECK(s.last_col_of_row(4) == 0);
    CHECK(s.first_col_of_row(5) == -1);
    CHECK(s.row_length(1) == 3);
    CHECK(s.bottom_cell_hook(0) == 6);  // leg 3, arm 2
    CHECK(s.bottom_cell_hook(1) == 4);
    CHECK(s.leftmost_cell_hook_of_row(0) == 4);
    CHECK(s.leftmost_cell_hook_of_row(1) == 6);
}

TEST_CASE("saturation reads the leftmost cell of the bottom row") {
    // Column 0 is rooted in row 0 whose leftmost cell it owns: hook 3 = k.
    const PartialKShape s = make(3, {{2, 0, 1}, {1, 0, 2}});
    CHECK(s.column_saturated(0));
    CHECK(!s.column_saturated(1));  // label 2 never counts
    CHECK(s.is_saturated_in(1));
    CHECK(s.fully_saturated());
    CHECK(s.unsaturated_count() == 0);

    const PartialKShape t = make(3, {{2, 0, 1}});
    CHECK(!t.column_saturated(0));  // hook 2 < 3
    CHECK(!t.is_saturated_in(1));
    CHECK(t.unsaturated_count() == 1);

    // Saturation in an index with no columns of that height holds vacuously.
    CHECK(t.is_saturated_in(2));
}

TEST_CASE("site parameters alternate") {
    CHECK(site_label(1) == 2);
    CHECK(site_label(2) == 1);
    CHECK(site_label(7) == 2);
    CHECK(site_column_height(1) == 1);
    CHECK(site_column_height(2) == 2);
    CHECK(site_column_height(3) == 2);
    CHECK(site_column_height(4) == 3);
    CHECK(site_column_height(8) == 5);
    CHECK_THROWS_AS(site_label(0), DomainError);
}

TEST_CASE("gluing glues at the level of the last column") {
    const PartialKShape empty(4);
    const PartialKShape one = oplus(empty, 4, 1);
    CHECK(one == make(4, {{3, 0, 1}}));
    CHECK(oplus(one, 4, 0) == one);

    // After a lift, later columns glue at the lifted level.
    const PartialKShape lifted = make(4, {{3, 2, 1}});
    CHECK(oplus(lifted, 3, 1) == make(4, {{3, 2, 1}, {2, 2, 2}}));
}

TEST_CASE("rule 1 lifts an overloaded corner") {
    // Gluing two height-1 columns pushes the hook of the first column to 4 > 3.
    const PartialKShape s = make(3, {{2, 0, 1}});
    CHECK(oplus(s, 1, 1) == make(3, {{2, 0, 1}, {1, 0, 2}}));
    CHECK(oplus(s, 1, 2) == make(3, {{2, 1, 1}, {1, 0, 2}, {1, 0, 2}}));
}

TEST_CASE("rule 2 pulls the row left of a mismatched neighbour") {
    // The height-2 column lands next to the height-3 column rooted in the
    // same row; the height-3 column is pushed up one row.
    const PartialKShape s = make(4, {{3, 0, 1}});
    CHECK(oplus(s, 2, 1) == make(4, {{3, 1, 1}, {2, 0, 1}}));
}

TEST_CASE("rule 3 restores the saturation of an entry-saturated column") {
    // k = 5: column 0 is saturated (row-1 hook 5).  Gluing three height-1
    // columns first overloads column 1 (rule 1), whose new neighbourhood
    // pushes column 0 up (rule 2) and momentarily breaks its saturation;
    // the restoration pulls column 2 into the vacated row.
    const PartialKShape s = make(5, {{3, 1, 1}, {2, 0, 1}, {2, 0, 1}});
    REQUIRE(s.column_saturated(0));

    const PartialKShape two = oplus(s, 1, 2);
    CHECK(two == make(5, {{3, 1, 1}, {2, 0, 1}, {2, 0, 1}, {1, 0, 2}, {1, 0, 2}}));
    CHECK(two.is_saturated_in(1));

    const PartialKShape three = oplus(s, 1, 3);
    CHECK(three == make(5, {{3, 2, 1}, {2, 1, 1}, {2, 1, 1}, {1, 0, 2}, {1, 0, 2}, {1, 0, 2}}));
    CHECK(three.column_saturated(0));
    CHECK(!three.is_saturated_in(1));
}

TEST_CASE("unique saturating multiplicity") {
    const PartialKShape s = make(3, {{2, 0, 1}});
    CHECK(saturating_z(s, 1, 1) == 1);

    const PartialKShape t = make(5, {{3, 1, 1}, {2, 0, 1}, {2, 0, 1}});
    CHECK(saturating_z(t, 1, 1) == 2);

    // Asking to saturate an index that is already saturated is an error.
    const PartialKShape u = make(3, {{2, 0, 1}, {1, 0, 2}});
    CHECK_THROWS_AS(saturating_z(u, 1, 1), PreconditionError);
}

TEST_CASE("gluing preconditions") {
    const PartialKShape s = make(3, {{1, 0, 2}});
    CHECK_THROWS_AS(oplus(s, 2, 1), PreconditionError);  // columns too short
    CHECK_THROWS_AS(oplus(PartialKShape(4), 0, 1), DomainError);
    CHECK_THROWS_AS(oplus(PartialKShape(4), 5, 1), DomainError);
    CHECK_THROWS_AS(oplus(PartialKShape(4), 1, -1), DomainError);
}

TEST_CASE("all scan orders reach the same fixpoint") {
    const PartialKShape s = make(5, {{3, 1, 1}, {2, 0, 1}, {2, 0, 1}});
    for (int z = 1; z <= 3; ++z) {
        const PartialKShape base = oplus(s, 1, z, ScanOrder::RightToLeft);
        CHECK(base == oplus(s, 1, z, ScanOrder::LeftToRight));
        CHECK(base == oplus(s, 1, z, ScanOrder::RuleMajor));
    }
}

TEST_CASE("partial-shape printing") {
    CHECK(make(4, {{3, 0, 1}, {2, 0, 2}}).to_string() == "k=4 [(3,0,1),(2,0,2)]");
    CHECK(PartialKShape(4).to_string() == "k=4 []");
}
