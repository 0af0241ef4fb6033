#include <doctest.h>

#include <kshape/shape_stats.hpp>

using namespace kshape;

TEST_CASE("cell classes of a small shape") {
    const auto classes = cell_classes(Partition({2, 1}), 3);
    REQUIRE(classes.size() == 3);
    CHECK(classes.at(CellClassKey{1, 2}).cells == std::vector<Cell>{{1, 0}});
    CHECK(classes.at(CellClassKey{1, 2}).steps == 0);
    CHECK(classes.at(CellClassKey{2, 1}).cells == std::vector<Cell>{{0, 1}});
    CHECK(classes.at(CellClassKey{2, 1}).steps == 1);
    CHECK(classes.at(CellClassKey{2, 2}).cells == std::vector<Cell>{{0, 0}});
    CHECK(classes.at(CellClassKey{2, 2}).steps == 1);
}

TEST_CASE("irreducibility bounds the steps of each critical class") {
    CHECK(is_irreducible(Partition(std::vector<int>{}), 3));
    CHECK(is_irreducible(Partition({1}), 3));
    CHECK(is_irreducible(Partition({2, 1}), 3));
    // Both border steps of (2,2) land in class (2,2): two is one too many.
    CHECK(!is_irreducible(Partition({2, 2}), 3));
    CHECK(is_irreducible(Partition({12, 9, 7, 6, 5, 3, 3, 2, 1, 1, 1, 1}), 6));
    CHECK_THROWS_AS(is_irreducible(Partition({4, 2, 2, 1}), 2), PreconditionError);
}

TEST_CASE("border statistics of the worked example") {
    const Partition p({12, 9, 7, 6, 5, 3, 3, 2, 1, 1, 1, 1});
    const ShapeStats st = shape_stats(p, 6);
    CHECK(st.k == 6);
    CHECK(st.x == std::vector<int>{2, 3, 0, 1});
    CHECK(st.y == std::vector<int>{3, 1, 2, 0});
    CHECK(st.z == std::vector<int>{3, 2, 1, 3, 2, 0, 0, 1});
    CHECK(st.fr_vector == std::vector<int>{0, 0, 1, 0});
    CHECK(st.fr() == 1);

    // z interleaves y and x by construction.
    for (int i = 1; i <= 4; ++i) {
        CHECK(st.z[static_cast<std::size_t>(2 * i - 2)] == st.y[static_cast<std::size_t>(i - 1)]);
        CHECK(st.z[static_cast<std::size_t>(2 * i - 1)] == st.x[static_cast<std::size_t>(i - 1)]);
    }
}

TEST_CASE("border statistics reject invalid inputs") {
    CHECK_THROWS_AS(shape_stats(Partition({2, 2}), 3), PreconditionError);
    CHECK_THROWS_AS(shape_stats(Partition({1}), 2), PreconditionError);
}

TEST_CASE("statistics of the empty shape are all zero") {
    const ShapeStats st = shape_stats(Partition(std::vector<int>{}), 4);
    CHECK(st.x == std::vector<int>{0, 0});
    CHECK(st.y == std::vector<int>{0, 0});
    CHECK(st.z == std::vector<int>{0, 0, 0, 0});
    CHECK(st.fr_vector == std::vector<int>{1, 1});
    CHECK(st.fr() == 2);
}
