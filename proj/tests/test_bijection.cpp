#include <doctest.h>

#include <map>
#include <set>

#include <kshape/bijection.hpp>

using namespace kshape;

TEST_CASE("the three height-2 pistols and their images") {
    CHECK(varphi(Pistol({2, 2, 4, 4})) == Partition(std::vector<int>{}));
    CHECK(varphi(Pistol({2, 4, 4, 4})) == Partition({2, 1}));
    CHECK(varphi(Pistol({4, 2, 4, 4})) == Partition({1}));
    CHECK(phi(Partition(std::vector<int>{}), 3) == Pistol({2, 2, 4, 4}));
    CHECK(phi(Partition({2, 1}), 3) == Pistol({2, 4, 4, 4}));
    CHECK(phi(Partition({1}), 3) == Pistol({4, 2, 4, 4}));
}

TEST_CASE("gluing sequence of a small shape") {
    const auto seq = s_sequence_shape(Partition({2, 1}), 3);
    REQUIRE(seq.size() == 3);
    CHECK(seq[2] == PartialKShape(3));  // starting point
    CHECK(seq[1] == PartialKShape(3, {{2, 0, 1}}));               // after site 2
    CHECK(seq[0] == PartialKShape(3, {{2, 0, 1}, {1, 0, 2}}));    // after site 1
    CHECK(seq[0].fully_saturated());
}

TEST_CASE("boundary labeling distinguishes full and short rows") {
    const PartialKShape b = boundary_with_canonical_labels(Partition({2, 1}), 3);
    CHECK(b == PartialKShape(3, {{2, 0, 1}, {1, 0, 2}}));
    CHECK(boundary_with_canonical_labels(Partition(std::vector<int>{}), 5) == PartialKShape(5));
}

TEST_CASE("round trip over every pistol of small heights") {
    for (int h = 2; h <= 4; ++h) {
        const int k = h + 1;
        std::set<Partition> images;
        enumerate_pistols(h, [&](const Pistol& f) {
            const Partition image = varphi(f);
            CHECK(phi(image, k) == f);
            images.insert(image);
        });
        CHECK(images.size() == static_cast<std::size_t>(count_pistols(h)));
    }
}

TEST_CASE("fixed positions map to free sites") {
    enumerate_pistols(4, [](const Pistol& f) {
        VarphiTrace trace;
        const Partition image = varphi(f, ScanOrder::RightToLeft, &trace);
        const ShapeStats st = shape_stats(image, 5);
        CHECK(st.fr_vector == point_stats(f).fix_vector);
        CHECK(st.z == trace.z);
    });
}

TEST_CASE("worked example at k = 6") {
    const Pistol f({2, 8, 4, 10, 10, 6, 8, 10, 10, 10});
    const Partition expected({12, 9, 7, 6, 5, 3, 3, 2, 1, 1, 1, 1});

    VarphiTrace trace;
    CHECK(varphi(f, ScanOrder::RightToLeft, &trace) == expected);
    CHECK(trace.z == std::vector<int>{3, 2, 1, 3, 2, 0, 0, 1});
    CHECK(phi(expected, 6) == f);

    const ShapeStats st = shape_stats(expected, 6);
    CHECK(st.fr_vector == std::vector<int>{0, 0, 1, 0});

    const SiteClassification cls = classify_sites(expected, 6);
    CHECK(cls.i_seq == std::vector<int>{1, 2, 4});
    CHECK(cls.j_seq == std::vector<int>{1, 3, 2});
    CHECK(cls.unchained == std::vector<int>{4, 5, 6, 7, 8});
    CHECK(cls.chained == std::vector<int>{1, 2, 3});
    CHECK(cls.ful == 3);
    CHECK(cls.fro == 1);
    CHECK(cls.sch == 2);
}

TEST_CASE("saturating sites of the worked example") {
    const Pistol f({2, 8, 4, 10, 10, 6, 8, 10, 10, 10});
    VarphiTrace trace;
    varphi(f, ScanOrder::RightToLeft, &trace);
    // Sites are processed from 2k-4 = 8 down to 1; only the smallest
    // preimages of values 2i with f(2i) > 2i saturate.
    std::vector<bool> expected(8, false);
    expected[0] = expected[1] = expected[2] = true;  // sites 1, 2, 3
    CHECK(trace.saturating_case == expected);
}

TEST_CASE("fix-vector histograms coincide at height 3") {
    std::map<std::vector<int>, int> pistol_side;
    std::map<std::vector<int>, int> shape_side;
    enumerate_pistols(3, [&](const Pistol& f) {
        ++pistol_side[point_stats(f).fix_vector];
        ++shape_side[shape_stats(varphi(f), 4).fr_vector];
    });
    CHECK(pistol_side == shape_side);
}
