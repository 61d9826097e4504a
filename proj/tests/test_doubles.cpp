/// @file test_doubles.cpp
/// @brief Heisenberg doubles, Drinfeld doubles/codoubles, and cocycle twists.
///
/// Oracles are computed by hand for the smallest group algebras (kC2, kC3);
/// larger fixtures are covered by exhaustive law checks and by the built-in
/// cross-check of the two independent double constructions.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "hopfyd/doubles.hpp"
#include "hopfyd/examples.hpp"

using namespace hopfyd;

namespace {

Pairing fixturePairing(const std::string& name, long q = 0) {
    return canonicalPairing(hopfFixture(name, q));
}

const std::vector<DoubleKind> kAllKinds{DoubleKind::Radford, DoubleKind::Majid,
                                        DoubleKind::Taipe};

}  // namespace

TEST_CASE("Heisenberg double laws and alternate product form") {
    for (const char* name : {"group:C2", "group:C3", "sweedler4"}) {
        CAPTURE(name);
        Report rep = verifyHeisenbergDouble(fixturePairing(name));
        INFO(rep.str());
        CHECK(rep.allPass());
    }
    Report repF5 = verifyHeisenbergDouble(fixturePairing("group:C2", 5));
    CHECK(repF5.allPass());
}

TEST_CASE("Heisenberg double of kC2: hand-computed product") {
    Pairing p = fixturePairing("group:C2");
    SmashProduct hh = heisenbergDouble(p);
    CHECK(hh.algebra.space->dim() == 4);
    long q = 0;
    LegList flat{hh.algebra.space};
    // (g # δ_1)(g # δ_g) = g(δ_1' ▶ g) # δ_1'' δ_g: only the δ_g ⊗ δ_g term of
    // Δ(δ_1) survives, giving g·g # δ_g = 1 # δ_g.
    TensorElement x = TensorElement::basis(flat, {2}, q);  // g # δ_1
    TensorElement y = TensorElement::basis(flat, {3}, q);  // g # δ_g
    CHECK(hh.algebra.product(x, y) == TensorElement::basis(flat, {1}, q));  // 1 # δ_g
    // Unit is 1 # ε̂ = 1 # Σ δ.
    TensorElement unit = TensorElement::basis(flat, {0}, q) +
                         TensorElement::basis(flat, {1}, q);
    CHECK(hh.algebra.unit == unit);
}

TEST_CASE("Heisenberg anti-isomorphisms L1, L2") {
    for (const char* name : {"group:C2", "group:C3", "fn:S3", "sweedler4"}) {
        CAPTURE(name);
        Report rep = verifyHeisenbergAntiIsos(fixturePairing(name));
        INFO(rep.str());
        CHECK(rep.allPass());
    }
    CHECK(verifyHeisenbergAntiIsos(fixturePairing("group:C2", 5)).allPass());
}

TEST_CASE("Exchange map: alternate written forms agree") {
    for (const char* name : {"group:C3", "sweedler4"}) {
        CAPTURE(name);
        Pairing p = fixturePairing(name);
        for (DoubleKind kind : kAllKinds) {
            CAPTURE(kindTag(kind));
            Report rep = verifyExchangeFormulas(p, kind);
            INFO(rep.str());
            CHECK(rep.allPass());
        }
    }
}

TEST_CASE("Exchange map of an abelian group algebra is the plain flip") {
    Pairing p = fixturePairing("group:C3");
    long q = p.field();
    LegList dom{p.left.space(), p.right.space()};
    StructureMap flip = StructureMap::permutation(dom, {1, 0}, q);
    for (DoubleKind kind : kAllKinds) {
        CAPTURE(kindTag(kind));
        CHECK(checkMapEqual("flip", exchangeMap(p, kind), flip).pass);
    }
}

TEST_CASE("Drinfeld codoubles are Hopf algebras") {
    for (const char* name : {"group:C2", "group:V4", "sweedler4"}) {
        CAPTURE(name);
        Pairing p = fixturePairing(name);
        for (DoubleKind kind : kAllKinds) {
            CAPTURE(kindTag(kind));
            DoubleHopf t = drinfeldCodouble(p, kind);
            CHECK(t.hopf.space()->dim() ==
                  p.left.space()->dim() * p.left.space()->dim());
            Report rep = verifyHopfAxioms(t.hopf, "codouble");
            INFO(rep.str());
            CHECK(rep.allPass());
        }
    }
    CHECK(verifyHopfAxioms(
              drinfeldCodouble(fixturePairing("group:C2", 5), DoubleKind::Radford).hopf)
              .allPass());
}

TEST_CASE("Codouble coproduct is the plain tensor coproduct iff the middle twist dies") {
    // Commutative + cocommutative: conjugation by the canonical element is
    // trivial, so the coproduct is untwisted.
    for (const char* name : {"group:C2", "group:C3", "group:V4"}) {
        CAPTURE(name);
        Pairing p = fixturePairing(name);
        DoubleHopf t = drinfeldCodouble(p, DoubleKind::Radford);
        long q = p.field();
        const SpacePtr& hs = p.left.space();
        const SpacePtr& bs = p.right.space();
        StructureMap swapHB = StructureMap::permutation({hs, bs}, {1, 0}, q);
        StructureMap plainPairs =
            swapHB.embed({hs}, {bs})
                .compose(p.left.comult().tensorWith(p.right.comult()));
        StructureMap plain = t.fromPair.tensorWith(t.fromPair)
                                 .compose(plainPairs)
                                 .compose(t.fromPair.transposed());
        CHECK(checkMapEqual("plain", t.hopf.comult(), plain).pass);
    }
    // kS3 is cocommutative but not commutative: the twist does not die.
    {
        Pairing p = fixturePairing("group:S3");
        DoubleHopf t = drinfeldCodouble(p, DoubleKind::Radford);
        long q = p.field();
        const SpacePtr& hs = p.left.space();
        const SpacePtr& bs = p.right.space();
        StructureMap swapHB = StructureMap::permutation({hs, bs}, {1, 0}, q);
        StructureMap plainPairs =
            swapHB.embed({hs}, {bs})
                .compose(p.left.comult().tensorWith(p.right.comult()));
        StructureMap plain = t.fromPair.tensorWith(t.fromPair)
                                 .compose(plainPairs)
                                 .compose(t.fromPair.transposed());
        CHECK_FALSE(checkMapEqual("plain", t.hopf.comult(), plain).pass);
    }
}

TEST_CASE("Drinfeld doubles: direct crossproduct equals dual of codouble") {
    for (const char* name : {"group:C2", "group:C4", "sweedler4"}) {
        CAPTURE(name);
        Pairing p = fixturePairing(name);
        for (DoubleKind kind : kAllKinds) {
            CAPTURE(kindTag(kind));
            DoubleHopf d = drinfeldDouble(p, kind);  // throws on mismatch
            CHECK(d.hopf.space()->dim() ==
                  p.left.space()->dim() * p.left.space()->dim());
            Report rep = verifyHopfAxioms(d.hopf, "double");
            INFO(rep.str());
            CHECK(rep.allPass());
        }
    }
    CHECK(verifyHopfAxioms(
              drinfeldDouble(fixturePairing("sweedler4", 5), DoubleKind::Radford).hopf)
              .allPass());
}

TEST_CASE("Drinfeld double of kC2 is the tensor-product Hopf algebra") {
    Pairing p = fixturePairing("group:C2");
    DoubleHopf d = drinfeldDouble(p, DoubleKind::Radford);
    long q = p.field();
    const SpacePtr& hs = p.left.space();
    const SpacePtr& bs = p.right.space();
    StructureMap plainPairs =
        p.right.mult().tensorWith(p.left.mult())
            .compose(StructureMap::permutation({bs, hs, bs, hs}, {0, 2, 1, 3}, q));
    StructureMap fromFlat = d.fromPair.transposed();
    StructureMap plain = d.fromPair.compose(plainPairs)
                             .compose(fromFlat.tensorWith(fromFlat));
    CHECK(checkMapEqual("tensor-mult", d.hopf.mult(), plain).pass);
}

TEST_CASE("Tampering with the canonical element breaks the cross-check") {
    Pairing p = fixturePairing("sweedler4");
    p.U.addTerm({1, 0}, Scalar::one(0));
    CHECK_THROWS_AS(drinfeldDouble(p, DoubleKind::Majid), std::runtime_error);
}

TEST_CASE("Evaluation pairing between double and codouble") {
    for (const char* name : {"group:C3", "sweedler4"}) {
        CAPTURE(name);
        Pairing p = fixturePairing(name);
        DoubleHopf dr = drinfeldDoubleDirect(p, DoubleKind::Radford);
        DoubleHopf tr = drinfeldCodouble(p, DoubleKind::Radford);
        Pairing big = doublePairing(p, dr, tr);
        Report rep = verifyPairing(big);
        INFO(rep.str());
        CHECK(rep.allPass());

        // Canonical element U₂ ⋈ U₁ ⊗ U₁ ⊗ U₂ built from two independent
        // copies of the base canonical element, checked against the
        // Gram-computed one.
        long q = p.field();
        int n = p.left.space()->dim(), m = p.right.space()->dim();
        LegList big2{dr.hopf.space(), tr.hopf.space()};
        TensorElement w = TensorElement::zero(big2, q);
        for (const auto& [ij, ci] : p.U.coeffs())
            for (const auto& [kl, cj] : p.U.coeffs())
                w.addTerm({kl[1] * n + ij[0], kl[0] * m + ij[1]}, ci * cj);
        CHECK(big.U == w);
    }
}

TEST_CASE("Trivial cocycle twists to the original product") {
    for (const char* name : {"group:C3", "sweedler4"}) {
        CAPTURE(name);
        HopfAlgebraData h = hopfFixture(name, 0);
        for (Chirality c : {Chirality::Left, Chirality::Right}) {
            CocycleData cd = cocycleCheck(h, trivialCocycle(h), c);
            CHECK(cd.normal);
            AlgebraData tw = cocycleTwist(h, cd);
            CHECK(checkMapEqual("trivial-twist", tw.mult, h.mult()).pass);
        }
    }
}

TEST_CASE("A non-cocycle form is rejected with a minimal witness") {
    HopfAlgebraData h = hopfFixture("group:C2", 0);
    StructureMap form({h.space(), h.space()}, {}, 0);
    form.addEntry({}, {0, 0}, Scalar::one(0));
    form.addEntry({}, {0, 1}, Scalar::integer(2, 0));
    form.addEntry({}, {1, 0}, Scalar::one(0));
    form.addEntry({}, {1, 1}, Scalar::one(0));
    try {
        cocycleCheck(h, form, Chirality::Left);
        FAIL("expected NotACocycle");
    } catch (const NotACocycle& e) {
        CHECK(std::string(e.what()).find("g0⊗g0⊗g1") != std::string::npos);
    }
}

TEST_CASE("Twist theorems: Heisenberg doubles as cocycle twists") {
    for (const char* name : {"group:C2", "group:C3", "sweedler4"}) {
        CAPTURE(name);
        Report rep = verifyTwistTheorems(fixturePairing(name));
        INFO(rep.str());
        CHECK(rep.allPass());
    }
    CHECK(verifyTwistTheorems(fixturePairing("group:C2", 5)).allPass());
}

TEST_CASE("Coordinate comparisons between the three doubles") {
    for (const char* name : {"group:C2", "group:C3", "sweedler4"}) {
        CAPTURE(name);
        Report rep = doubleComparisons(fixturePairing(name));
        INFO(rep.str());
        CHECK(rep.allPass());
    }
}
