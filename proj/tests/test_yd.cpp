/// @file test_yd.cpp
/// @brief Yetter--Drinfeld algebras: both characterizations, braidings,
///        conversions, dual-opposites, double equivalences, category functors,
///        and the concrete families (trivial, adjoint, coideal, Heisenberg
///        over the double).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfyd/examples.hpp"
#include "hopfyd/examples_yd.hpp"
#include "hopfyd/yd.hpp"

using namespace hopfyd;

static void requireAllPass(const Report& r) {
    for (const auto& item : r.items) {
        INFO(r.suite, ".", item.id, " witness: ", item.witness);
        CHECK(item.pass);
    }
}

static const std::vector<YdVariant> kVariants = {YdVariant::LL, YdVariant::LR,
                                                 YdVariant::RR, YdVariant::RL};

/// The one-dimensional Hopf algebra, used as the target of a counit morphism.
static HopfAlgebraData trivialHopf(long q) {
    auto s = Space::make("k1", {"1"});
    StructureMap mult({s, s}, {s}, q);
    mult.addEntry({0}, {0, 0}, Scalar::one(q));
    auto unit = TensorElement::basis({s}, {0}, q);
    StructureMap comult({s}, {s, s}, q);
    comult.addEntry({0, 0}, {0}, Scalar::one(q));
    StructureMap counit({s}, {}, q);
    counit.addEntry({}, {0}, Scalar::one(q));
    auto antipode = StructureMap::identity({s}, q);
    return HopfAlgebraData::make(AlgebraData(s, mult, unit), comult, counit, antipode);
}

TEST_CASE("adjoint instances satisfy both characterizations in all variants") {
    for (const auto& name : {"sweedler4", "group:C3", "fn:S3"}) {
        CAPTURE(name);
        auto h = hopfFixture(name, 0);
        auto p = canonicalPairing(h);
        for (auto v : kVariants) {
            CAPTURE(variantTag(v));
            auto pair = adjointYd(p, v);
            requireAllPass(checkStandardYd(pair.standard));
            requireAllPass(checkBraidedStandard(pair.standard));
            requireAllPass(checkCoactionYd(pair.coaction));
            requireAllPass(verifyConversion(pair.coaction));
        }
    }
}

TEST_CASE("adjoint instances over a prime field") {
    auto h = hopfFixture("sweedler4", 7);
    auto p = canonicalPairing(h);
    for (auto v : {YdVariant::LL, YdVariant::RR}) {
        CAPTURE(variantTag(v));
        auto pair = adjointYd(p, v);
        requireAllPass(checkStandardYd(pair.standard));
        requireAllPass(checkCoactionYd(pair.coaction));
        requireAllPass(verifyConversion(pair.coaction));
    }
}

TEST_CASE("conjugation coactions slice to the adjoint actions") {
    for (const auto& name : {"sweedler4", "group:S3", "fn:S3"}) {
        CAPTURE(name);
        auto p = canonicalPairing(hopfFixture(name, 0));
        requireAllPass(verifyAdjointCoactionIdentities(p));
    }
}

TEST_CASE("dual-opposite is an involution preserving the YD property") {
    auto p = canonicalPairing(hopfFixture("sweedler4", 0));
    for (auto v : kVariants) {
        CAPTURE(variantTag(v));
        requireAllPass(verifyDualOpposite(adjointYd(p, v).coaction));
    }
}

TEST_CASE("module/comodule algebras over the double recover the YD data") {
    for (const auto& name : {"sweedler4", "group:C3"}) {
        CAPTURE(name);
        auto p = canonicalPairing(hopfFixture(name, 0));
        for (auto v : kVariants) {
            CAPTURE(variantTag(v));
            auto pair = adjointYd(p, v);
            requireAllPass(doubleEquivalence(pair.coaction));
            requireAllPass(doubleEquivalence(pair.standard, p));
        }
    }
}

TEST_CASE("braided commutativity via Heisenberg products and double actions") {
    auto p = canonicalPairing(hopfFixture("sweedler4", 0));
    for (auto v : kVariants) {
        CAPTURE(variantTag(v));
        auto pair = adjointYd(p, v);
        requireAllPass(checkBraidedCoaction(pair.coaction));
        requireAllPass(lambdaBraidedCheck(pair.standard, p));
    }
}

TEST_CASE("algebra-object formulation agrees with the coaction compatibility") {
    for (const auto& name : {"sweedler4", "group:C3"}) {
        CAPTURE(name);
        auto p = canonicalPairing(hopfFixture(name, 0));
        requireAllPass(algebraObjectCheck(adjointYd(p, YdVariant::LL).coaction));
    }
}

TEST_CASE("category functors preserve the YD property and round-trip") {
    auto p = canonicalPairing(hopfFixture("sweedler4", 0));
    struct Arrow {
        YdVariant from, to;
        HopfTwist tw;
    };
    const std::vector<Arrow> arrows = {
        {YdVariant::LR, YdVariant::RL, HopfTwist::Op},
        {YdVariant::RL, YdVariant::LR, HopfTwist::Op},
        {YdVariant::LR, YdVariant::RL, HopfTwist::Cop},
        {YdVariant::RL, YdVariant::LR, HopfTwist::Cop},
        {YdVariant::RR, YdVariant::LL, HopfTwist::Op},
        {YdVariant::LL, YdVariant::RR, HopfTwist::Op},
        {YdVariant::RR, YdVariant::LL, HopfTwist::Cop},
        {YdVariant::LL, YdVariant::RR, HopfTwist::Cop},
        {YdVariant::LR, YdVariant::LL, HopfTwist::None},
        {YdVariant::LL, YdVariant::LR, HopfTwist::None},
        {YdVariant::LR, YdVariant::RR, HopfTwist::Op},
        {YdVariant::RR, YdVariant::LR, HopfTwist::Op},
    };
    for (const auto& a : arrows) {
        CAPTURE(variantTag(a.from));
        CAPTURE(variantTag(a.to));
        CAPTURE(static_cast<int>(a.tw));
        auto s = adjointYd(p, a.from).standard;
        requireAllPass(verifyCategoryFunctor(s, a.to, a.tw));
    }
    CHECK_THROWS_AS(
        categoryFunctor(adjointYd(p, YdVariant::LL).standard, YdVariant::RL,
                        HopfTwist::None),
        UnknownFunctor);
}

TEST_CASE("coaction functors and the four-corner equivalence") {
    auto p = canonicalPairing(hopfFixture("sweedler4", 0));
    for (auto v : {YdVariant::LL, YdVariant::RR}) {
        CAPTURE(variantTag(v));
        auto c = adjointYd(p, v).coaction;
        requireAllPass(verifyCoactionFunctor(c, HopfTwist::None));
        requireAllPass(verifyCoactionFunctor(c, HopfTwist::Op));
    }
    requireAllPass(verifyFourCorner(adjointYd(p, YdVariant::RL).coaction));
    CHECK_THROWS_AS(coactionFunctor(adjointYd(p, YdVariant::LR).coaction,
                                    HopfTwist::None),
                    UnknownFunctor);
}

TEST_CASE("trivial structure is YD; braided iff the carrier commutes") {
    auto h = hopfFixture("group:S3", 0);
    auto p = canonicalPairing(h);
    auto commutative = hopfFixture("group:C4", 0).algebra();
    for (auto v : kVariants) {
        CAPTURE(variantTag(v));
        auto s = trivialStandardYd(h, commutative, v);
        requireAllPass(checkStandardYd(s));
        requireAllPass(checkBraidedStandard(s));
        auto c = trivialCoactionYd(p, commutative, v);
        requireAllPass(checkCoactionYd(c));
        requireAllPass(checkBraidedCoaction(c));
    }
    // A noncommutative carrier stays YD but loses braided commutativity; the
    // first offending pair of basis vectors is reported deterministically.
    auto noncomm = hopfFixture("group:S3", 0).algebra();
    auto s = trivialStandardYd(h, noncomm, YdVariant::LL);
    requireAllPass(checkStandardYd(s));
    auto bc = checkBraidedStandard(s);
    CHECK_FALSE(bc.allPass());
    REQUIRE_FALSE(bc.items.empty());
    CHECK_FALSE(bc.items[0].pass);
    CHECK(bc.items[0].id == "product-tau");
    CHECK(bc.items[0].witness ==
          "input p021⊗p102: lhs = (1)*p201, rhs = (1)*p120");
}

TEST_CASE("trivial builders verify their hypotheses") {
    auto s3 = hopfFixture("group:S3", 0);       // cocommutative, noncommutative
    auto fnS3 = hopfFixture("fn:S3", 0);        // commutative, noncocommutative
    auto x = hopfFixture("group:C4", 0).algebra();
    // Commutative Hopf algebra: the trivial action pairs with any coaction.
    auto sc = trivialYdWithCoaction(fnS3, fnS3.algebra(), fnS3.comult(),
                                    YdVariant::LL);
    requireAllPass(checkStandardYd(sc));
    // Cocommutative Hopf algebra: any action pairs with the trivial coaction.
    auto sa = trivialYdWithAction(s3, s3.algebra(), leftAdjointAction(s3),
                                  YdVariant::LL);
    requireAllPass(checkStandardYd(sa));
    CHECK_THROWS_AS(trivialYdWithCoaction(s3, x, s3.comult(), YdVariant::LL),
                    HypothesisNotMet);
    CHECK_THROWS_AS(trivialYdWithAction(fnS3, fnS3.algebra(),
                                        leftAdjointAction(fnS3), YdVariant::LL),
                    HypothesisNotMet);
}

TEST_CASE("negative control: adjoint action with the trivial coaction") {
    auto h = hopfFixture("sweedler4", 0);
    auto x = h.algebra();
    StandardYd bad{YdVariant::LL, h, x, leftAdjointAction(h),
                   StructureMap::fromElement(h.unit()).tensorWith(
                       StructureMap::identity({x.space}, 0))};
    auto r = checkStandardYd(bad);
    CHECK_FALSE(r.allPass());
    for (const auto& item : r.items) {
        if (item.pass) continue;
        CHECK(item.id == "compat-symmetric");
        CHECK(item.witness ==
              "input x⊗g: lhs = (-2)*g⊗gx + (1)*x⊗g, rhs = (-2)*1⊗gx + (1)*x⊗g");
        break;
    }
}

TEST_CASE("negative control: mismatched coaction pair") {
    auto h = hopfFixture("sweedler4", 0);
    auto p = canonicalPairing(h);
    auto adj = adjointYd(p, YdVariant::LR);
    CoactionYd bad{YdVariant::LR, p, h.algebra(), adj.coaction.alpha,
                   StructureMap::identity({h.space()}, 0).tensorWith(
                       StructureMap::fromElement(p.right.unit()))};
    auto r = checkCoactionYd(bad);
    CHECK_FALSE(r.allPass());
    for (const auto& item : r.items) {
        if (item.pass) continue;
        CHECK(item.id == "compat-square");
        CHECK(item.witness ==
              "input g: lhs = (1)*g⊗g⊗1^ + (1)*g⊗g⊗g^, rhs = (1)*g⊗g⊗1^ + "
              "(1)*g⊗g⊗g^ + (-2)*gx⊗g⊗x^ + (2)*gx⊗g⊗gx^");
        break;
    }
}

TEST_CASE("coideal subalgebras carry braided YD structure") {
    auto h = hopfFixture("group:S3", 0);
    auto p = canonicalPairing(h);

    // The identity morphism cuts out the scalars.
    auto scalars = rightCoidealYd(p, h, StructureMap::identity({h.space()}, 0));
    CHECK(scalars.algebra.space->dim() == 1);
    requireAllPass(checkCoactionYd(scalars.yd));

    // The counit morphism onto the trivial Hopf algebra keeps everything.
    auto one = trivialHopf(0);
    StructureMap toOne({h.space()}, {one.space()}, 0);
    for (int i = 0; i < h.space()->dim(); ++i)
        toOne.addEntry({0}, {i}, Scalar::one(0));
    auto full = rightCoidealYd(p, one, toOne);
    CHECK(full.algebra.space->dim() == h.space()->dim());
    requireAllPass(checkCoactionYd(full.yd));
    requireAllPass(checkBraidedCoaction(full.yd));

    // The sign morphism kS3 -> kC2 cuts out the even permutations: a
    // three-dimensional coideal subalgebra on either side.
    auto c2 = hopfFixture("group:C2", 0);
    StructureMap sign({h.space()}, {c2.space()}, 0);
    const std::vector<int> parity = {0, 1, 1, 0, 0, 1};  // p012 p021 p102 p120 p201 p210
    for (int i = 0; i < 6; ++i)
        sign.addEntry({parity[i]}, {i}, Scalar::one(0));
    auto right = rightCoidealYd(p, c2, sign);
    CHECK(right.algebra.space->dim() == 3);
    requireAllPass(checkCoactionYd(right.yd));
    requireAllPass(checkBraidedCoaction(right.yd));
    requireAllPass(checkStandardYd(toStandard(right.yd)));
    auto left = leftCoidealYd(p, c2, sign);
    CHECK(left.algebra.space->dim() == 3);
    requireAllPass(checkCoactionYd(left.yd));
    requireAllPass(checkBraidedCoaction(left.yd));

    // A linear map that is not a Hopf morphism is rejected.
    StructureMap notMorphism({h.space()}, {c2.space()}, 0);
    notMorphism.addEntry({1}, {0}, Scalar::one(0));
    CHECK_THROWS_AS(rightCoidealYd(p, c2, notMorphism), NotAHopfMorphism);
}

TEST_CASE("the Heisenberg algebra is braided YD over the Drinfeld double") {
    auto p = canonicalPairing(hopfFixture("group:C2", 0));
    requireAllPass(heisenbergOverDouble(p));
    CHECK(heisenbergOverDoubleBraided(p));
}
