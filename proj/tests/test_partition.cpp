#include <doctest.h>

#include <kshape/partition.hpp>

using namespace kshape;

TEST_CASE("partition construction validates its parts") {
    CHECK_NOTHROW(Partition(std::vector<int>{}));
    CHECK_NOTHROW(Partition({4, 2, 2, 1}));
    CHECK_NOTHROW(Partition({1}));
    CHECK_THROWS_AS(Partition({3, 1, 2}), DomainError);   // not weakly decreasing
    CHECK_THROWS_AS(Partition({2, 0}), DomainError);      // trailing zero
    CHECK_THROWS_AS(Partition({-1}), DomainError);        // negative part
}

TEST_CASE("partition basic geometry") {
    const Partition p({4, 2, 2, 1});
    CHECK(p.rows() == 4);
    CHECK(p.cols() == 4);
    CHECK(p.cell_count() == 9);
    CHECK(p.contains(Cell{0, 3}));
    CHECK(!p.contains(Cell{0, 4}));
    CHECK(!p.contains(Cell{1, 2}));
    CHECK(!p.contains(Cell{4, 0}));

    const Partition empty;
    CHECK(empty.empty());
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 0);
    CHECK(empty.cell_count() == 0);
    CHECK(!empty.contains(Cell{0, 0}));
}

TEST_CASE("conjugate transposes the diagram") {
    CHECK(Partition({4, 2, 2, 1}).conjugate() == Partition({4, 3, 1, 1}));
    CHECK(Partition({4, 3, 1, 1}).conjugate() == Partition({4, 2, 2, 1}));
    CHECK(Partition(std::vector<int>{}).conjugate() == Partition(std::vector<int>{}));
    CHECK(Partition({5}).conjugate() == Partition({1, 1, 1, 1, 1}));
}

TEST_CASE("hook lengths") {
    const Partition p({4, 2, 2, 1});
    CHECK(p.hook(Cell{0, 0}) == 7);  // arm 3, leg 3
    CHECK(p.hook(Cell{0, 1}) == 5);
    CHECK(p.hook(Cell{0, 2}) == 2);
    CHECK(p.hook(Cell{0, 3}) == 1);
    CHECK(p.hook(Cell{1, 0}) == 4);
    CHECK(p.hook(Cell{1, 1}) == 2);
    CHECK(p.hook(Cell{2, 0}) == 3);
    CHECK(p.hook(Cell{2, 1}) == 1);
    CHECK(p.hook(Cell{3, 0}) == 1);
    CHECK(hook_length(p, Cell{0, 0}) == 7);
    CHECK_THROWS_AS(p.hook(Cell{1, 2}), DomainError);
    CHECK(p.arm(Cell{0, 0}) == 3);
    CHECK(p.leg(Cell{0, 0}) == 3);
}

TEST_CASE("partition printing") {
    CHECK(Partition({4, 2, 2, 1}).to_string() == "(4,2,2,1)");
    CHECK(Partition(std::vector<int>{}).to_string() == "()");
}
