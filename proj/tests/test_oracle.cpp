#include <doctest.h>

#include <algorithm>
#include <set>

#include <kshape/oracle.hpp>

using namespace kshape;

TEST_CASE("box enumeration visits every partition exactly once") {
    std::set<Partition> seen;
    long long calls = 0;
    for_each_partition_in_box(BoxBound{2, 2}, [&](const Partition& p) {
        ++calls;
        seen.insert(p);
        CHECK(p.rows() <= 2);
        CHECK(p.cols() <= 2);
    });
    CHECK(calls == 6);  // (), (1), (2), (1,1), (2,1), (2,2)
    CHECK(seen.size() == 6);
}

TEST_CASE("brute-force irreducible shapes match the construction images") {
    for (int k = 3; k <= 4; ++k) {
        const std::vector<Partition> found =
            box_enumerate_irreducible(k, BoxBound{6, 6});
        std::set<Partition> images;
        enumerate_pistols(k - 1,
                          [&](const Pistol& f) { images.insert(varphi(f)); });
        CHECK(found.size() == images.size());
        CHECK(std::set<Partition>(found.begin(), found.end()) == images);
    }
}

TEST_CASE("a too-small box finds fewer shapes") {
    CHECK(box_enumerate_irreducible(3, BoxBound{6, 6}).size() == 3);
    CHECK(box_enumerate_irreducible(3, BoxBound{1, 1}).size() == 2);
}

TEST_CASE("rewriting is confluent over every instance of small heights") {
    for (int k = 3; k <= 4; ++k) {
        const ConfluenceReport report = check_confluence(k);
        CHECK(report.ok());
        CHECK(report.divergences == 0);
        CHECK(report.pistols == static_cast<long long>(count_pistols(k - 1)));
        CHECK(report.glue_calls > 0);
        CHECK(report.comparisons == 2 * report.glue_calls);  // two alternative orders
    }
}

TEST_CASE("confluence check honours its pistol budget") {
    const ConfluenceReport report = check_confluence(4, 5);
    CHECK(report.pistols == 5);
    CHECK(report.ok());
}
