/// @file test_examples.cpp
/// @brief Fixture construction: Cayley tables, group algebras, Sweedler algebra.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfyd/examples.hpp"

using namespace hopfyd;

TEST_CASE("builtin Cayley tables are valid groups") {
    for (const char* g : {"C2", "C3", "C4", "V4", "S3"}) {
        CAPTURE(g);
        CHECK_NOTHROW(builtinGroup(g).validate());
    }
    CHECK_THROWS_AS(builtinGroup("C5"), std::invalid_argument);
}

TEST_CASE("S3 composition table oracle") {
    auto g = builtinGroup("S3");
    CHECK(g.order() == 6);
    CHECK(g.identity() == 0);
    // p102 ∘ p021 maps 0->1, 1->0, 2->... compute: p102(p021(x)):
    // x=0: p021(0)=0, p102(0)=1; x=1: p021(1)=2, p102(2)=2; x=2: p021(2)=1 -> 0.
    // That is one-line 120, index 3.
    CHECK(g.table[2][1] == 3);
    // The other order differs: p021 ∘ p102 = 201, index 4 (noncommutative).
    CHECK(g.table[1][2] == 4);
    // Inverses: transpositions are involutions, p120⁻¹ = p201.
    CHECK(g.inverse(1) == 1);
    CHECK(g.inverse(2) == 2);
    CHECK(g.inverse(5) == 5);
    CHECK(g.inverse(3) == 4);
}

TEST_CASE("a broken Cayley table is rejected") {
    GroupTable g;
    g.name = "bad";
    g.labels = {"e", "a"};
    g.table = {{0, 1}, {1, 1}};  // a*a = a: no inverse / not a group
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}

TEST_CASE("group algebra structure constants") {
    auto h = groupAlgebra(builtinGroup("C4"), 0);
    LegList one{h.space()};
    auto g1 = TensorElement::basis(one, {1}, 0), g3 = TensorElement::basis(one, {3}, 0);
    CHECK(h.product(g1, g3) == TensorElement::basis(one, {0}, 0));
    CHECK(h.comult().apply(g1) == g1.tensorWith(g1));
    CHECK(h.counit().apply(g3).asScalar().isOne());
    CHECK(h.antipode().apply(g1) == g3);
    CHECK(h.unit() == TensorElement::basis(one, {0}, 0));
}

TEST_CASE("function algebra of V4 is the pointwise product on delta functions") {
    auto f = functionAlgebra(builtinGroup("V4"), 0);
    LegList one{f.space()};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            auto prod = f.product(TensorElement::basis(one, {i}, 0),
                                  TensorElement::basis(one, {j}, 0));
            if (i == j)
                CHECK(prod == TensorElement::basis(one, {i}, 0));
            else
                CHECK(prod.isZero());
        }
    // Unit is the constant function 1 = sum of all delta functions.
    for (int i = 0; i < 4; ++i) CHECK(f.unit().coeff({i}).isOne());
}

TEST_CASE("Sweedler multiplication oracle: xg = -gx and nilpotency") {
    auto h = sweedlerH4(0);
    LegList one{h.space()};
    auto g = TensorElement::basis(one, {1}, 0), x = TensorElement::basis(one, {2}, 0);
    auto gx = TensorElement::basis(one, {3}, 0);
    CHECK(h.product(g, x) == gx);
    CHECK(h.product(x, g) == -gx);
    CHECK(h.product(x, x).isZero());
    CHECK(h.product(g, g) == h.unit());
    CHECK(h.product(gx, gx).isZero());
    // Δ(x) = x⊗1 + g⊗x.
    auto unit = h.unit();
    CHECK(h.comult().apply(x) == x.tensorWith(unit) + g.tensorWith(x));
    // ε(x) = 0, ε(g) = 1.
    CHECK(h.counit().apply(x).asScalar().isZero());
    CHECK(h.counit().apply(g).asScalar().isOne());
}

TEST_CASE("fixture lookup by name") {
    CHECK(hopfFixture("group:S3", 0).space()->dim() == 6);
    CHECK(hopfFixture("fn:C3", 7).space()->dim() == 3);
    CHECK(hopfFixture("sweedler4", 0).space()->dim() == 4);
    CHECK_THROWS_AS(hopfFixture("nope", 0), std::invalid_argument);
    CHECK(hopfFixtureNames().size() == 11);
}
