#include <doctest.h>

#include "forkalg/json_io.hpp"

using namespace forkalg;

TEST_CASE("exports are byte stable") {
    DiagramAlgebra a1(3, 2), a2(3, 2);
    a1.build_table(false);
    a2.build_table(true);
    CHECK(algebra_to_json(a1) == algebra_to_json(a2));
}

TEST_CASE("round trip through json") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= n; ++k) {
            DiagramAlgebra a(n, k);
            a.build_table(false);
            AlgebraDump before = dump_algebra(a);
            AlgebraDump after = parse_algebra_json(algebra_to_json(a));
            CHECK(before == after);
        }
}

TEST_CASE("malformed json is rejected") {
    CHECK_THROWS(parse_algebra_json("not json"));
    CHECK_THROWS(parse_algebra_json("{\"n\": 2}"));
    CHECK_THROWS(parse_algebra_json("{\"n\": 2, \"k\": 1, \"basis\": [{}], \"products\": []}"));
}

TEST_CASE("tiny block export shape") {
    DiagramAlgebra a(1, 1);
    a.build_table(false);
    AlgebraDump d = dump_algebra(a);
    CHECK(d.n == 1);
    CHECK(d.k == 1);
    REQUIRE(d.basis.size() == 1);
    CHECK(d.basis[0].lower == "^");
    CHECK(d.basis[0].degree == 0);
    REQUIRE(d.products.size() == 1);
}
