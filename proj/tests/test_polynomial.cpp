#include <doctest.h>

#include <kshape/polynomial.hpp>

using namespace kshape;

namespace {

MultiPoly x_power(int e) { return MultiPoly::variable(VarX, e); }

} // namespace

TEST_CASE("printing pins the term order") {
    CHECK(MultiPoly().to_string() == "0");
    CHECK(MultiPoly::constant(5).to_string() == "5");
    CHECK(MultiPoly::constant(-1).to_string() == "-1");
    CHECK(gandhi(2).to_string() == "2*x^3 + x^2");
    CHECK(dumont_foata(2).to_string() == "x*y + x*z + y*z");
    CHECK(generalized_dumont_foata(2).to_string() == "z*xb + x*yb + y*zb");
    const MultiPoly mixed = x_power(1) - MultiPoly::variable(VarY) * 2;
    CHECK(mixed.to_string() == "x - 2*y");
}

TEST_CASE("arithmetic") {
    const MultiPoly x = MultiPoly::variable(VarX);
    const MultiPoly y = MultiPoly::variable(VarY);
    CHECK((x + y) * (x + y) == x * x + x * y * 2 + y * y);
    CHECK((x - x).is_zero());
    CHECK((-x) + x == MultiPoly());
    CHECK(x * MultiPoly() == MultiPoly());
    CHECK((x * 0) == MultiPoly());
    CHECK(MultiPoly::constant(0) == MultiPoly());
    CHECK(x.total_degree() == 1);
    CHECK((x * y * x).total_degree() == 3);
    CHECK(MultiPoly().total_degree() == -1);
}

TEST_CASE("shift substitutes var + 1") {
    // (x+1)^2 = x^2 + 2x + 1
    CHECK(x_power(2).shift_var(VarX) ==
          x_power(2) + x_power(1) * 2 + MultiPoly::constant(1));
    // Shifting an unused variable changes nothing.
    CHECK(x_power(2).shift_var(VarY) == x_power(2));
}

TEST_CASE("substitution and specialization") {
    const MultiPoly x = MultiPoly::variable(VarX);
    const MultiPoly y = MultiPoly::variable(VarY);
    CHECK((x * y).substitute_var(VarX, VarY) == y * y);
    CHECK((x * y + x).specialize(VarY, 3) == x * 4);
    CHECK(gandhi(2).specialize(VarX, 1) == MultiPoly::constant(3));

    std::array<BigInt, kNumVars> point{};
    point.fill(1);
    CHECK(gandhi(3).evaluate(point) == 17);
}

TEST_CASE("coefficient lookup") {
    const MultiPoly g = gandhi(2);  // 2*x^3 + x^2
    Exponents e{};
    e[VarX] = 3;
    CHECK(g.coefficient(e) == 2);
    e[VarX] = 2;
    CHECK(g.coefficient(e) == 1);
    e[VarX] = 1;
    CHECK(g.coefficient(e) == 0);
}

TEST_CASE("the quadratic recursion counts pistols") {
    const std::vector<long long> expected{1, 3, 17, 155, 2073, 38227, 929569};
    for (int k = 2; k <= 8; ++k) {
        CHECK(genocchi(k) == expected[static_cast<std::size_t>(k - 2)]);
    }
}

TEST_CASE("pistol sums match the recursions for small heights") {
    for (int k = 1; k <= 4; ++k) {
        CHECK(poly_from_pistols(k, PistolWeighting::GandhiFixed) == gandhi(k));
    }
    for (int k = 1; k <= 4; ++k) {
        CHECK(poly_from_pistols(k, PistolWeighting::MaxFixSurfixed) == dumont_foata(k));
        CHECK(poly_from_pistols(k, PistolWeighting::MaxFixProminent) == dumont_foata(k));
        CHECK(poly_from_pistols(k, PistolWeighting::SixVariable) ==
              generalized_dumont_foata(k));
    }
}

TEST_CASE("diagonal of the six-variable family") {
    for (int k = 1; k <= 4; ++k) {
        const MultiPoly diag = generalized_dumont_foata(k)
                                   .substitute_var(VarXBar, VarX)
                                   .substitute_var(VarYBar, VarY)
                                   .substitute_var(VarZBar, VarZ);
        CHECK(diag == dumont_foata(k));
    }
}

TEST_CASE("three-variable symmetry") {
    for (int k = 1; k <= 4; ++k) {
        CHECK(is_symmetric_xyz(dumont_foata(k)));
    }
    CHECK(!is_symmetric_xyz(MultiPoly::variable(VarX)));
    CHECK(is_symmetric_xyz(MultiPoly::constant(7)));
}

TEST_CASE("fixed-point specialization links the two families") {
    for (int k = 1; k <= 5; ++k) {
        const MultiPoly spec =
            (x_power(2) * dumont_foata(k)).specialize(VarY, 1).specialize(VarZ, 1);
        CHECK(spec == gandhi(k));
    }
}

TEST_CASE("shape sums match the recursion for small k") {
    for (int k = 2; k <= 4; ++k) {
        CHECK(poly_from_shapes(k, ShapeWeighting::SiteTriple) == dumont_foata(k));
        CHECK(poly_from_shapes(k, ShapeWeighting::GandhiFree) == gandhi(k));
    }
}
