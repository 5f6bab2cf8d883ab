#include "doctest.h"
#include "drg/param_core.hpp"

using namespace drg;

namespace {
std::vector<Int> ints(std::initializer_list<long> xs) {
    std::vector<Int> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}
}  // namespace

TEST_CASE("gaussian brackets") {
    CHECK(gaussian_bracket(0, Rat(2)) == 0);
    CHECK(gaussian_bracket(3, Rat(2)) == 7);
    CHECK(gaussian_bracket(3, Rat(1)) == 3);  // degenerate base counts plainly
    CHECK(gaussian_bracket(2, Rat(-2)) == -1);
    CHECK(gaussian_bracket(4, make_rat(1, 2)) == make_rat(15, 8));
}

TEST_CASE("classical parameters expand to intersection arrays") {
    struct Row {
        ClassicalParameterSet cp;
        std::vector<Int> b, c;
    };
    const Row rows[] = {
        // triangular-family point, subspace-family point, cube-family point, matrix-family point
        {{3, Rat(1), Rat(1), Rat(3)}, ints({9, 4, 1}), ints({1, 4, 9})},
        {{3, Rat(2), Rat(2), Rat(14)}, ints({98, 72, 32}), ints({1, 9, 49})},
        {{3, Rat(1), Rat(0), Rat(2)}, ints({6, 4, 2}), ints({1, 2, 3})},
        {{3, Rat(1), Rat(1), Rat(5)}, ints({15, 8, 3}), ints({1, 4, 9})},
        {{3, Rat(2), Rat(1), Rat(7)}, ints({49, 36, 16}), ints({1, 6, 28})},
    };
    for (const auto& row : rows) {
        auto arr = classical_to_array(row.cp);
        REQUIRE(arr.ok());
        CHECK(arr->b == row.b);
        CHECK(arr->c == row.c);
    }
}

TEST_CASE("classical validation rejects fractional and forbidden bases") {
    CHECK(validate(ClassicalParameterSet{3, make_rat(3, 2), Rat(1), Rat(5)}).has_value());
    CHECK(validate(ClassicalParameterSet{3, Rat(0), Rat(1), Rat(5)}).has_value());
    CHECK(validate(ClassicalParameterSet{3, Rat(-1), Rat(1), Rat(5)}).has_value());
    CHECK_FALSE(validate(ClassicalParameterSet{3, Rat(-2), Rat(1), Rat(5)}).has_value());
    CHECK_FALSE(validate(ClassicalParameterSet{2, make_rat(3, 2), Rat(1), Rat(5)}).has_value());
}

TEST_CASE("distance shell counts") {
    auto arr = classical_to_array(ClassicalParameterSet{3, Rat(1), Rat(1), Rat(5)});
    REQUIRE(arr.ok());
    auto counts = derive_counts(*arr);
    REQUIRE(counts.ok());
    CHECK(counts->k == ints({1, 15, 30, 10}));
    CHECK(counts->n == 56);

    auto arr2 = classical_to_array(ClassicalParameterSet{3, Rat(2), Rat(2), Rat(14)});
    REQUIRE(arr2.ok());
    auto counts2 = derive_counts(*arr2);
    REQUIRE(counts2.ok());
    CHECK(counts2->k == ints({1, 98, 784, 512}));
    CHECK(counts2->n == 1395);

    // c_{i+1} must divide b_i k_i
    IntersectionArray bad{2, ints({5, 2}), ints({1, 3})};
    CHECK_FALSE(derive_counts(bad).ok());
}

TEST_CASE("line parameters expand to arrays and invert") {
    GeometricArray geo{3, ints({1, 2, 3}), ints({1, 2, 3}), Int(5)};
    REQUIRE_FALSE(validate(geo).has_value());
    auto arr = geometric_to_array(geo);
    REQUIRE(arr.ok());
    CHECK(arr->b == ints({15, 8, 3}));
    CHECK(arr->c == ints({1, 4, 9}));

    auto back = array_to_geometric(*arr, Int(3));
    REQUIRE(back.ok());
    CHECK(back->phi == geo.phi);
    CHECK(back->tau == geo.tau);
    CHECK(back->beta == geo.beta);

    // wrong clique count: 2 does not divide 15
    auto wrong = array_to_geometric(*arr, Int(2));
    CHECK_FALSE(wrong.ok());
    CHECK(wrong.failure().identity == "r | k");
}

TEST_CASE("line parameters for the cube-family point") {
    GeometricArray geo{3, ints({1, 1, 1}), ints({1, 2, 3}), Int(2)};
    auto arr = geometric_to_array(geo);
    REQUIRE(arr.ok());
    CHECK(arr->b == ints({6, 4, 2}));
    CHECK(arr->c == ints({1, 2, 3}));
}

TEST_CASE("classical parameter sets induce line parameters when b >= 2") {
    auto geo = classical_geometric(ClassicalParameterSet{3, Rat(2), Rat(2), Rat(14)});
    REQUIRE(geo.ok());
    CHECK(geo->phi == ints({1, 3, 7}));
    CHECK(geo->tau == ints({1, 3, 7}));
    CHECK(geo->beta == 14);

    auto geo2 = classical_geometric(ClassicalParameterSet{3, Rat(2), Rat(1), Rat(7)});
    REQUIRE(geo2.ok());
    CHECK(geo2->phi == ints({1, 2, 4}));
    CHECK(geo2->tau == ints({1, 3, 7}));
    CHECK(geo2->beta == 7);

    // below the base threshold the pattern is not forced
    CHECK_FALSE(classical_geometric(ClassicalParameterSet{3, Rat(1), Rat(1), Rat(5)}).ok());
}

TEST_CASE("pattern recognition recovers classical parameters") {
    GeometricArray grassmann_like{3, ints({1, 3, 7}), ints({1, 3, 7}), Int(14)};
    auto cp = classical_from_geometric(grassmann_like);
    REQUIRE(cp.has_value());
    CHECK(cp->D == 3);
    CHECK(cp->b == 2);
    CHECK(cp->alpha == 2);
    CHECK(cp->beta == 14);

    GeometricArray johnson_like{3, ints({1, 2, 3}), ints({1, 2, 3}), Int(5)};
    auto cp2 = classical_from_geometric(johnson_like);
    REQUIRE(cp2.has_value());
    CHECK(cp2->b == 1);
    CHECK(cp2->alpha == 1);

    // tau_2 = 3 with tau_3 = 4 matches no bracket sequence
    GeometricArray off{3, ints({1, 2, 3}), ints({1, 3, 4}), Int(9)};
    CHECK_FALSE(classical_from_geometric(off).has_value());
}

TEST_CASE("parsers round-trip the brace syntax") {
    auto arr = parse_intersection_array("{15,8,3;1,4,9}");
    REQUIRE(arr.has_value());
    CHECK(arr->D == 3);
    CHECK(arr->b == ints({15, 8, 3}));
    CHECK(arr->c == ints({1, 4, 9}));
    CHECK(arr->str() == "{15,8,3;1,4,9}");
    CHECK(parse_intersection_array("{15,8,3 ; 1,4,9}").has_value());
    CHECK_FALSE(parse_intersection_array("{15,8,3;1,4}").has_value());
    CHECK_FALSE(parse_intersection_array("15,8,3;1,4,9").has_value());

    auto geo = parse_geometric_array("{1,2,3;1,2,3}", Int(5));
    REQUIRE(geo.has_value());
    CHECK(geo->D == 3);
    CHECK(geo->beta == 5);
    // parsing is syntax only; semantics are validate()'s job
    auto off = parse_geometric_array("{2,2,3;1,2,3}", Int(5));
    REQUIRE(off.has_value());
    CHECK(validate(*off).has_value());  // phi_0 != 1
}
