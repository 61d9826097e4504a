/// @file test_pairing.cpp
/// @brief Canonical pairings, canonical elements, twisted conjugation, slices.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfyd/examples.hpp"
#include "hopfyd/pairing.hpp"

using namespace hopfyd;

static void requireAllPass(const Report& r) {
    for (const auto& item : r.items) {
        INFO(r.suite, ".", item.id, " witness: ", item.witness);
        CHECK(item.pass);
    }
}

TEST_CASE("canonical pairing laws hold for every fixture") {
    for (const auto& name : hopfFixtureNames()) {
        CAPTURE(name);
        auto p = canonicalPairing(hopfFixture(name, 0));
        requireAllPass(verifyPairing(p));
    }
}

TEST_CASE("canonical element laws hold for every fixture (Q and F5)") {
    for (const auto& name : hopfFixtureNames()) {
        for (long q : {0L, 5L}) {
            CAPTURE(name);
            CAPTURE(q);
            auto p = canonicalPairing(hopfFixture(name, q));
            requireAllPass(verifyCanonicalElement(p));
        }
    }
}

TEST_CASE("the canonical element of kC2 is the dual basis sum and inverts via S") {
    auto h = groupAlgebra(builtinGroup("C2"), 0);
    auto p = canonicalPairing(h);
    // U = 1⊗1^ + g⊗g^.
    CHECK(p.U.coeff({0, 0}).isOne());
    CHECK(p.U.coeff({1, 1}).isOne());
    CHECK(p.U.coeffs().size() == 2);
    std::vector<AlgebraData> pair{p.left.algebra(), p.right.algebra()};
    auto uinv = invertElement(pair, p.U);
    REQUIRE(uinv.has_value());
    CHECK(*uinv == p.left.antipode().embed({}, {p.right.space()}).apply(p.U));
}

TEST_CASE("twisted conjugation identities (antipode of order four included)") {
    for (const char* name : {"group:C4", "group:S3", "fn:S3", "sweedler4"}) {
        CAPTURE(name);
        auto p = canonicalPairing(hopfFixture(name, 0));
        requireAllPass(verifyCircCanonical(p));
    }
}

TEST_CASE("sandwich slice identities hold on commutative and noncommutative fixtures") {
    for (const char* name : {"group:C3", "group:S3", "sweedler4"}) {
        CAPTURE(name);
        auto p = canonicalPairing(hopfFixture(name, 0));
        requireAllPass(verifySliceIdentities(p));
    }
}

TEST_CASE("regular actions against the dual basis are shifts on group algebras") {
    // On kG with dual basis {g^}: h ▶ ω picks coproduct legs; for kC3,
    // g1 ▶ g2^ = g2^(g1 · ?) ... concretely: (g1 ▶ ω)(h) = ω(h g1), so
    // g1 ▶ g2^ = (g2 g1⁻¹)^ = g1^.
    auto p = canonicalPairing(groupAlgebra(builtinGroup("C3"), 0));
    auto act = leftRegularOnRight(p);
    CHECK(act.column({1, 2}) ==
          TensorElement::basis({p.right.space()}, {1}, 0));
    // ω ◀ h: (ω ◀ g1)(h) = ω(g1 h), so g2^ ◀ g1 = g1^.
    auto actR = rightRegularOnRight(p);
    CHECK(actR.column({2, 1}) ==
          TensorElement::basis({p.right.space()}, {1}, 0));
}

TEST_CASE("transpose compatibility with the canonical pairings") {
    auto c2 = groupAlgebra(builtinGroup("C2"), 0);
    auto c4 = groupAlgebra(builtinGroup("C4"), 0);
    StructureMap t({c2.space()}, {c4.space()}, 0);
    t.addEntry({0}, {0}, Scalar::one(0));
    t.addEntry({2}, {1}, Scalar::one(0));
    auto pH = canonicalPairing(c2), pHp = canonicalPairing(c4);
    auto tHat = transposeMorphism(t, pH.right.space(), pHp.right.space());
    requireAllPass(verifyTransposeCompatibility(pH, pHp, t, tHat));
}

TEST_CASE("negative control: a degenerate form is rejected") {
    auto h = groupAlgebra(builtinGroup("C2"), 0);
    auto dual = h.dual();
    StructureMap form({h.space(), dual.space()}, {}, 0);
    form.addEntry({}, {0, 0}, Scalar::one(0));  // rank 1: degenerate
    CHECK_THROWS_AS(makePairing(h, dual, form), DegeneratePairing);
}

TEST_CASE("negative control: perturbing U breaks the defining slice property first") {
    auto p = canonicalPairing(groupAlgebra(builtinGroup("C2"), 0));
    Pairing bad = p;
    bad.U.addTerm({0, 1}, Scalar::one(0));
    auto rep = verifyCanonicalElement(bad);
    bool sawFail = false;
    for (const auto& item : rep.items) {
        if (item.id == "defining-slice-property") {
            CHECK(!item.pass);
            // Lexicographically smallest failing pair.
            CHECK(item.witness == "h=g1, ω=g0^");
            sawFail = true;
        }
    }
    CHECK(sawFail);
}
