/// @file suite.cpp
/// @brief The verification matrix: every law of the library run over the
///        built-in catalog, with frozen-witness negative controls.

#include "hopfyd/suite.hpp"

#include "hopfyd/checks.hpp"
#include "hopfyd/examples_yd.hpp"

namespace hopfyd {

namespace {

constexpr YdVariant kVariants[] = {YdVariant::LL, YdVariant::LR, YdVariant::RR,
                                   YdVariant::RL};

/// Catalog names surviving the filter; sweedler4 drops out in characteristic 2.
std::vector<std::string> fixtures(long p, const std::string& filter) {
    std::vector<std::string> out;
    for (const auto& n : hopfFixtureNames()) {
        if (!filter.empty() && n != filter) continue;
        if (n == "sweedler4" && p == 2) continue;
        out.push_back(n);
    }
    return out;
}

/// The counit viewed as a Hopf morphism onto the one-dimensional Hopf algebra.
StructureMap counitMorphism(const HopfAlgebraData& h, const HopfAlgebraData& one) {
    StructureMap pi({h.space()}, {one.space()}, h.field());
    for (int i = 0; i < h.space()->dim(); ++i)
        pi.addEntry({0}, {i}, h.counit().entry({}, {i}));
    return pi;
}

/// The parity morphism kS3 → kC2 (even permutations to the identity).
StructureMap signMorphism(const HopfAlgebraData& s3, const HopfAlgebraData& c2) {
    const int parity[6] = {0, 1, 1, 0, 0, 1};  // p012 p021 p102 p120 p201 p210
    StructureMap pi({s3.space()}, {c2.space()}, s3.field());
    for (int i = 0; i < 6; ++i)
        pi.addEntry({parity[i]}, {i}, Scalar::one(s3.field()));
    return pi;
}

/// Structural equality of two Hopf algebras, map by map.
Report hopfEqual(const std::string& suite, const HopfAlgebraData& a,
                 const HopfAlgebraData& b) {
    Report rep{suite, {}};
    rep.add("same-labels", a.space()->basisLabels == b.space()->basisLabels);
    rep.add(checkMapEqual("same-mult", a.mult(), b.mult()));
    rep.add(checkMapEqual("same-comult", a.comult(), b.comult()));
    rep.add(checkMapEqual("same-counit", a.counit(), b.counit()));
    rep.add(checkMapEqual("same-antipode", a.antipode(), b.antipode()));
    rep.add("same-unit", a.unit() == b.unit());
    return rep;
}

/// All YD checks of one coaction instance plus agreement of the three
/// braided-commutativity formulations (as booleans, whatever they are).
Report ydInstanceChecks(const CoactionYd& c) {
    Report rep{"yd", {}};
    rep.merge(checkCoactionYd(c));
    rep.merge(verifyConversion(c));
    auto s = toStandard(c);
    rep.merge(checkStandardYd(s));
    bool viaTau = checkBraidedStandard(s).allPass();
    bool viaHeis = checkBraidedCoaction(c).allPass();
    bool viaLambda = lambdaBraidedCheck(s, c.pairing).allPass();
    rep.add("braided-formulations-agree", viaTau == viaHeis && viaHeis == viaLambda,
            "tau/heisenberg/lambda disagree");
    return rep;
}

}  // namespace

Report suiteHopfKernel(long p, const std::string& filter) {
    Report rep{"hopf-kernel", {}};
    for (const auto& name : fixtures(p, filter)) {
        auto h = hopfFixture(name, p);
        rep.mergePrefixed(name, verifyHopfAxioms(h, name));
        rep.mergePrefixed(name + ".dual", verifyHopfAxioms(h.dual(), name));
        rep.mergePrefixed(name + ".op", verifyHopfAxioms(h.opposite(), name));
        rep.mergePrefixed(name + ".cop", verifyHopfAxioms(h.coopposite(), name));
        rep.mergePrefixed(name + ".dual-dual", hopfEqual(name, h.dual().dual(), h));
    }
    return rep;
}

Report suiteCanonicalElement(long p, const std::string& filter) {
    Report rep{"canonical-element", {}};
    for (const auto& name : fixtures(p, filter)) {
        auto pr = canonicalPairing(hopfFixture(name, p));
        rep.mergePrefixed(name, verifyPairing(pr));
        rep.mergePrefixed(name, verifyCanonicalElement(pr));
        rep.mergePrefixed(name, verifyCircCanonical(pr));
        rep.mergePrefixed(name, verifySliceIdentities(pr));
    }
    return rep;
}

Report suiteDoubles(long p, int maxDim, const std::string& filter) {
    Report rep{"doubles", {}};
    for (const auto& name : fixtures(p, filter)) {
        auto h = hopfFixture(name, p);
        int d = h.space()->dim();
        if (d * d > maxDim) {
            rep.add(name + ".skipped-over-max-dim", true);
            continue;
        }
        auto pr = canonicalPairing(h);
        rep.mergePrefixed(name, verifyHeisenbergDouble(pr));
        rep.mergePrefixed(name, verifyHeisenbergAntiIsos(pr));
        for (auto kind : {DoubleKind::Radford, DoubleKind::Majid, DoubleKind::Taipe}) {
            std::string tag = name + "." + kindTag(kind);
            rep.mergePrefixed(tag, verifyExchangeFormulas(pr, kind));
            try {
                auto dbl = drinfeldDouble(pr, kind);  // direct vs via-dual cross-check
                rep.add(tag + ".dimension",
                        dbl.hopf.space()->dim() == d * d,
                        "dim D != (dim H)^2");
                rep.mergePrefixed(tag + ".double", verifyHopfAxioms(dbl.hopf, tag));
            } catch (const std::exception& e) {
                rep.add(tag + ".cross-check", false, e.what());
            }
        }
        rep.mergePrefixed(name, doubleComparisons(pr));
        rep.mergePrefixed(name, verifyTwistTheorems(pr));
    }
    return rep;
}

Report suiteYdEquivalences(long p, const std::string& filter) {
    Report rep{"yd-equivalences", {}};
    auto want = [&](const std::string& n) { return filter.empty() || n == filter; };

    // Trivial family: commutative carrier braids, any carrier satisfies YD.
    if (want("trivial")) {
        auto h = hopfFixture("group:S3", p);
        auto pr = canonicalPairing(h);
        auto commutative = hopfFixture("group:C4", p).algebra();
        for (auto v : kVariants)
            rep.mergePrefixed("trivial." + variantTag(v),
                              ydInstanceChecks(trivialCoactionYd(pr, commutative, v)));
    }

    // All eight adjoint instances (four variants, both characterizations).
    for (const auto& name : {std::string("sweedler4"), std::string("group:S3")}) {
        if (!want(name)) continue;
        if (name == "sweedler4" && p == 2) continue;
        auto pr = canonicalPairing(hopfFixture(name, p));
        rep.mergePrefixed(name, verifyAdjointCoactionIdentities(pr));
        for (auto v : kVariants) {
            auto pair = adjointYd(pr, v);
            std::string tag = name + ".adjoint-" + variantTag(v);
            rep.mergePrefixed(tag, ydInstanceChecks(pair.coaction));
            rep.mergePrefixed(tag + ".standard", checkStandardYd(pair.standard));
            rep.mergePrefixed(tag + ".standard", checkBraidedStandard(pair.standard));
        }
    }

    // Coideal subalgebras for the counit, the identity, and the sign morphism.
    if (want("coideal")) {
        auto h = hopfFixture(p == 2 ? "group:C4" : "sweedler4", p);
        auto pr = canonicalPairing(h);
        auto one = trivialHopfAlgebra(p);
        auto eps = rightCoidealYd(pr, one, counitMorphism(h, one));
        rep.add("coideal.eps.full-dimension",
                eps.algebra.space->dim() == h.space()->dim());
        rep.mergePrefixed("coideal.eps", ydInstanceChecks(eps.yd));
        auto idm = rightCoidealYd(pr, h, StructureMap::identity({h.space()}, p));
        rep.add("coideal.id.scalar-dimension", idm.algebra.space->dim() == 1);
        rep.mergePrefixed("coideal.id", ydInstanceChecks(idm.yd));
        auto s3 = hopfFixture("group:S3", p);
        auto prS3 = canonicalPairing(s3);
        auto c2 = hopfFixture("group:C2", p);
        auto pi = signMorphism(s3, c2);
        auto right = rightCoidealYd(prS3, c2, pi);
        rep.add("coideal.sign.right-dimension", right.algebra.space->dim() == 3);
        rep.mergePrefixed("coideal.sign.right", ydInstanceChecks(right.yd));
        auto left = leftCoidealYd(prS3, c2, pi);
        rep.add("coideal.sign.left-dimension", left.algebra.space->dim() == 3);
        rep.mergePrefixed("coideal.sign.left", ydInstanceChecks(left.yd));
    }
    return rep;
}

Report suiteDualities(long p, const std::string& filter) {
    Report rep{"dualities", {}};
    std::vector<std::string> names;
    for (const auto& n : {std::string("group:C3"), std::string("sweedler4")}) {
        if (!filter.empty() && n != filter) continue;
        if (n == "sweedler4" && p == 2) continue;
        names.push_back(n);
    }
    for (const auto& name : names) {
        auto pr = canonicalPairing(hopfFixture(name, p));
        for (auto v : kVariants) {
            auto pair = adjointYd(pr, v);
            std::string tag = name + ".adjoint-" + variantTag(v);
            rep.mergePrefixed(tag, doubleEquivalence(pair.coaction));
            rep.mergePrefixed(tag + ".standard", doubleEquivalence(pair.standard, pr));
        }
        // Slice test for the canonical element of the double pairing.
        auto dbl = drinfeldDouble(pr, DoubleKind::Radford);
        auto codbl = drinfeldCodouble(pr, DoubleKind::Radford);
        auto dp = doublePairing(pr, dbl, codbl);
        rep.mergePrefixed(name + ".double-pairing", verifyCanonicalElement(dp));
        rep.mergePrefixed(name + ".double-pairing", verifySliceIdentities(dp));
    }
    return rep;
}

Report suiteFunctors(long p) {
    Report rep{"functors", {}};
    auto pr = canonicalPairing(hopfFixture(p == 2 ? "group:S3" : "sweedler4", p));
    struct Arrow {
        YdVariant from, to;
        HopfTwist tw;
        const char* tag;
    };
    const Arrow arrows[] = {
        {YdVariant::LR, YdVariant::RL, HopfTwist::Op, "lr-rl-op"},
        {YdVariant::RL, YdVariant::LR, HopfTwist::Op, "rl-lr-op"},
        {YdVariant::LR, YdVariant::RL, HopfTwist::Cop, "lr-rl-cop"},
        {YdVariant::RL, YdVariant::LR, HopfTwist::Cop, "rl-lr-cop"},
        {YdVariant::LR, YdVariant::LL, HopfTwist::None, "lr-ll"},
        {YdVariant::LL, YdVariant::LR, HopfTwist::None, "ll-lr"},
        {YdVariant::LR, YdVariant::RR, HopfTwist::Op, "lr-rr-op"},
        {YdVariant::RR, YdVariant::LR, HopfTwist::Op, "rr-lr-op"},
        {YdVariant::RR, YdVariant::LL, HopfTwist::Op, "rr-ll-op"},
        {YdVariant::LL, YdVariant::RR, HopfTwist::Op, "ll-rr-op"},
        {YdVariant::RR, YdVariant::LL, HopfTwist::Cop, "rr-ll-cop"},
        {YdVariant::LL, YdVariant::RR, HopfTwist::Cop, "ll-rr-cop"},
    };
    for (const auto& a : arrows)
        rep.mergePrefixed(a.tag, verifyCategoryFunctor(adjointYd(pr, a.from).standard,
                                                       a.to, a.tw));
    for (auto v : {YdVariant::LL, YdVariant::RR}) {
        auto c = adjointYd(pr, v).coaction;
        rep.mergePrefixed("coaction-" + variantTag(v) + "-flip",
                          verifyCoactionFunctor(c, HopfTwist::None));
        rep.mergePrefixed("coaction-" + variantTag(v) + "-op",
                          verifyCoactionFunctor(c, HopfTwist::Op));
    }
    rep.mergePrefixed("four-corner", verifyFourCorner(adjointYd(pr, YdVariant::RL).coaction));
    // Dual-opposite duality, one instance per variant.
    for (auto v : kVariants)
        rep.mergePrefixed("dual-opposite-" + variantTag(v),
                          verifyDualOpposite(adjointYd(pr, v).coaction));
    return rep;
}

Report suiteHeisenbergOverDouble(long p, const std::string& filter) {
    Report rep{"heisenberg-over-double", {}};
    for (const auto& name : {std::string("group:C2"), std::string("sweedler4")}) {
        if (!filter.empty() && name != filter) continue;
        if (name == "sweedler4" && p == 2) continue;
        auto pr = canonicalPairing(hopfFixture(name, p));
        rep.mergePrefixed(name, heisenbergOverDouble(pr));
        // The braided-commutativity outcome is empirical: report, don't assume.
        rep.add(name + ".braided-commutativity-empirical",
                heisenbergOverDoubleBraided(pr),
                "braided checks failed for (H(H^), Gamma', Gamma)");
    }
    return rep;
}

Report suiteNegativeControls(long p) {
    Report rep{"negative-controls", {}};

    // 1. The identity map is not an antipode for Sweedler's algebra; the first
    //    failure must be the left antipode axiom at the smallest basis input.
    {
        auto h = sweedlerH4(p == 2 ? 0 : p);
        auto broken = HopfAlgebraData::make(
            h.algebra(), h.comult(), h.counit(),
            StructureMap::identity({h.space()}, h.field()));
        auto axioms = verifyHopfAxioms(broken, "broken");
        const CheckResult* first = nullptr;
        for (const auto& r : axioms.items)
            if (!r.pass) {
                first = &r;
                break;
            }
        bool ok = first && first->id == "antipode-left" &&
                  first->witness == "input x: lhs = (1)*x + (1)*gx, rhs = 0";
        rep.add("detects-bad-antipode", ok,
                first ? "unexpected first failure " + first->id + ": " + first->witness
                      : "axioms unexpectedly passed");
    }

    // 2. The trivial cocycle bumped at (x, x) violates the left 2-cocycle
    //    condition; the throw must carry the smallest failing triple.
    {
        auto h = sweedlerH4(p == 2 ? 0 : p);
        auto form = trivialCocycle(h);
        form.addEntry({}, {2, 2}, Scalar::one(h.field()));
        std::string seen = "no exception";
        try {
            cocycleCheck(h, form, Chirality::Left);
        } catch (const NotACocycle& e) {
            seen = e.what();
        }
        rep.add("detects-non-cocycle",
                seen ==
                    "left 2-cocycle condition fails: input g⊗x⊗x: lhs = 0, rhs = (1)",
                "unexpected outcome: " + seen);
    }

    // 3. The trivial instance on a noncommutative carrier is YD but not
    //    braided; the first failure is the product-vs-braiding identity at the
    //    smallest noncommuting basis pair.
    {
        auto h = hopfFixture("group:S3", p);
        auto s = trivialStandardYd(h, h.algebra(), YdVariant::LL);
        bool stillYd = checkStandardYd(s).allPass();
        auto braided = checkBraidedStandard(s);
        bool ok = stillYd && !braided.allPass() && !braided.items.empty() &&
                  !braided.items[0].pass && braided.items[0].id == "product-tau" &&
                  braided.items[0].witness ==
                      "input p021⊗p102: lhs = (1)*p201, rhs = (1)*p120";
        rep.add("detects-noncommutative-braided", ok,
                braided.items.empty()
                    ? "no braided items"
                    : braided.items[0].id + ": " + braided.items[0].witness);
    }
    return rep;
}

std::vector<SuiteEntry> acceptanceMatrix(long p, int maxDim,
                                         const std::string& filter) {
    return {
        {"hopf-kernel", [=] { return suiteHopfKernel(p, filter); }},
        {"canonical-element", [=] { return suiteCanonicalElement(p, filter); }},
        {"doubles", [=] { return suiteDoubles(p, maxDim, filter); }},
        {"yd-equivalences", [=] { return suiteYdEquivalences(p, filter); }},
        {"dualities", [=] { return suiteDualities(p, filter); }},
        {"functors", [=] { return suiteFunctors(p); }},
        {"heisenberg-over-double", [=] { return suiteHeisenbergOverDouble(p, filter); }},
        {"negative-controls", [=] { return suiteNegativeControls(p); }},
    };
}

}  // namespace hopfyd
