/// @file test_hopf.cpp
/// @brief Hopf axiom verification, duals, op/cop variants, antipode solving.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfyd/examples.hpp"
#include "hopfyd/hopf.hpp"

using namespace hopfyd;

static void requireAllPass(const Report& r) {
    for (const auto& item : r.items) {
        INFO(r.suite, ".", item.id, " witness: ", item.witness);
        CHECK(item.pass);
    }
}

TEST_CASE("group algebras satisfy all Hopf axioms") {
    for (const char* g : {"C2", "C3", "C4", "V4", "S3"}) {
        for (long p : {0L, 5L, 7L}) {
            CAPTURE(g);
            CAPTURE(p);
            requireAllPass(verifyHopfAxioms(groupAlgebra(builtinGroup(g), p)));
        }
    }
}

TEST_CASE("function algebras (duals) satisfy all Hopf axioms") {
    for (const char* g : {"C2", "V4", "S3"}) {
        CAPTURE(g);
        requireAllPass(verifyHopfAxioms(functionAlgebra(builtinGroup(g), 0)));
    }
}

TEST_CASE("Sweedler algebra satisfies all Hopf axioms over Q, F3, F5") {
    for (long p : {0L, 3L, 5L}) {
        CAPTURE(p);
        requireAllPass(verifyHopfAxioms(sweedlerH4(p)));
    }
    CHECK_THROWS_AS(sweedlerH4(2), BadCharacteristic);
}

TEST_CASE("Sweedler antipode has order four") {
    auto h = sweedlerH4(0);
    auto s = h.antipode();
    auto s2 = s.compose(s);
    auto id = StructureMap::identity({h.space()}, 0);
    CHECK(s2 != id);
    CHECK(s2.compose(s2) == id);
    // S² is conjugation-like on x: S²(x) = -x.
    auto x = TensorElement::basis({h.space()}, {2}, 0);
    CHECK(s2.apply(x) == -x);
    // S⁻¹ as computed equals S³.
    CHECK(h.antipodeInverse() == s2.compose(s));
}

TEST_CASE("S3 is noncommutative and its function algebra is noncocommutative") {
    auto h = groupAlgebra(builtinGroup("S3"), 0);
    LegList one{h.space()};
    auto a = TensorElement::basis(one, {1}, 0), b = TensorElement::basis(one, {2}, 0);
    CHECK(h.product(a, b) != h.product(b, a));
    auto f = functionAlgebra(builtinGroup("S3"), 0);
    LegList two{f.space(), f.space()};
    auto flip = StructureMap::permutation(two, {1, 0}, 0);
    CHECK(f.comult() != flip.compose(f.comult()));
}

TEST_CASE("double dual has the original structure constants") {
    auto h = sweedlerH4(0);
    auto dd = h.dual().dual();
    CHECK(dd.mult().denseMatrix() == h.mult().denseMatrix());
    CHECK(dd.comult().denseMatrix() == h.comult().denseMatrix());
    CHECK(dd.counit().denseMatrix() == h.counit().denseMatrix());
    CHECK(dd.antipode().denseMatrix() == h.antipode().denseMatrix());
}

TEST_CASE("op, cop and op-cop variants are Hopf algebras with the right antipode") {
    auto h = sweedlerH4(0);
    requireAllPass(verifyHopfAxioms(h.opposite(), "op"));
    requireAllPass(verifyHopfAxioms(h.coopposite(), "cop"));
    requireAllPass(verifyHopfAxioms(h.oppositeCoopposite(), "opcop"));
    CHECK(h.opposite().antipode() == h.antipodeInverse());
    CHECK(h.coopposite().antipode() == h.antipodeInverse());
    CHECK(h.oppositeCoopposite().antipode() == h.antipode());
}

TEST_CASE("the antipode is a Hopf morphism into the op-cop algebra") {
    for (const char* name : {"group:S3", "sweedler4"}) {
        CAPTURE(name);
        auto h = hopfFixture(name, 0);
        requireAllPass(verifyHopfMorphism(h, h.oppositeCoopposite(), h.antipode()));
    }
}

TEST_CASE("solveAntipode recovers the antipode from the bialgebra data") {
    for (const char* name : {"group:S3", "fn:V4", "sweedler4"}) {
        CAPTURE(name);
        auto h = hopfFixture(name, 0);
        auto s = solveAntipode(h.algebra(), h.comult(), h.counit());
        REQUIRE(s.has_value());
        CHECK(*s == h.antipode());
    }
}

TEST_CASE("a bialgebra without antipode is detected") {
    // The monoid algebra of ({0,1}, max) is a bialgebra but not Hopf: the
    // absorbing element cannot have a convolution inverse.
    auto v = Space::make("kM2", {"e", "m"});
    long p = 0;
    LegList one{v}, two{v, v};
    StructureMap mult(two, one, p);
    mult.addEntry({0}, {0, 0}, Scalar::one(p));
    mult.addEntry({1}, {0, 1}, Scalar::one(p));
    mult.addEntry({1}, {1, 0}, Scalar::one(p));
    mult.addEntry({1}, {1, 1}, Scalar::one(p));
    TensorElement unit = TensorElement::basis(one, {0}, p);
    StructureMap comult(one, two, p);
    comult.addEntry({0, 0}, {0}, Scalar::one(p));
    comult.addEntry({1, 1}, {1}, Scalar::one(p));
    StructureMap counit(one, {}, p);
    counit.addEntry({}, {0}, Scalar::one(p));
    counit.addEntry({}, {1}, Scalar::one(p));
    CHECK(!solveAntipode(AlgebraData(v, mult, unit), comult, counit).has_value());
}

TEST_CASE("transpose morphisms flip matrices between dual spaces") {
    // T : kC2 -> kC4, g -> r² (a group morphism); T̂ is the matrix transpose.
    auto c2 = groupAlgebra(builtinGroup("C2"), 0);
    auto c4 = groupAlgebra(builtinGroup("C4"), 0);
    StructureMap t({c2.space()}, {c4.space()}, 0);
    t.addEntry({0}, {0}, Scalar::one(0));
    t.addEntry({2}, {1}, Scalar::one(0));
    requireAllPass(verifyHopfMorphism(c2, c4, t));
    auto c2d = c2.dual(), c4d = c4.dual();
    auto tHat = transposeMorphism(t, c2d.space(), c4d.space());
    CHECK(tHat.entry({1}, {2}) == Scalar::one(0));
    CHECK(tHat.entry({0}, {0}) == Scalar::one(0));
    CHECK(tHat.entry({1}, {1}).isZero());
    // T̂ is a Hopf morphism from the dual of the codomain to the dual of the domain.
    requireAllPass(verifyHopfMorphism(c4d, c2d, tHat));
}

TEST_CASE("negative control: a wrong antipode sign breaks exactly the antipode laws") {
    auto h = sweedlerH4(0);
    // Flip the sign of S on x (a deliberate corruption).
    StructureMap bad = h.antipode();
    bad.addEntry({3}, {2}, Scalar::integer(2, 0));
    auto broken = HopfAlgebraData::make(h.algebra(), h.comult(), h.counit(), bad);
    auto rep = verifyHopfAxioms(broken);
    for (const auto& item : rep.items) {
        if (item.id == "antipode-left" || item.id == "antipode-right") {
            CHECK(!item.pass);
            // The minimal witness is the first broken basis vector, x.
            CHECK(item.witness.find("input x") != std::string::npos);
        } else {
            CHECK(item.pass);
        }
    }
}
