/// @file test_actions.cpp
/// @brief Module/comodule algebras, adjoint/coadjoint actions, conversions,
///        conjugation coactions, smash products.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfyd/actions.hpp"
#include "hopfyd/examples.hpp"

using namespace hopfyd;

static void requireAllPass(const Report& r) {
    for (const auto& item : r.items) {
        INFO(r.suite, ".", item.id, " witness: ", item.witness);
        CHECK(item.pass);
    }
}

static const std::vector<std::string> kCore = {"group:C3", "group:S3", "fn:S3",
                                               "sweedler4"};

TEST_CASE("regular actions satisfy the module laws") {
    for (const auto& name : kCore) {
        CAPTURE(name);
        auto h = hopfFixture(name, 0);
        auto p = canonicalPairing(h);
        // H acting on its dual from either side.
        requireAllPass(verifyModuleAlgebra(p.left, p.right.algebra(),
                                           leftRegularOnRight(p), Side::Left, false));
        requireAllPass(verifyModuleAlgebra(p.left, p.right.algebra(),
                                           rightRegularOnRight(p), Side::Right, false));
        // The dual acting on H from either side.
        requireAllPass(verifyModuleAlgebra(p.right, p.left.algebra(),
                                           leftRegularOnLeft(p), Side::Left, false));
        requireAllPass(verifyModuleAlgebra(p.right, p.left.algebra(),
                                           rightRegularOnLeft(p), Side::Right, false));
    }
}

TEST_CASE("regular actions are in fact module-algebra actions") {
    // Duality turns comultiplication being an algebra map into the
    // module-algebra law for the regular actions, so the stronger check holds.
    auto p = canonicalPairing(hopfFixture("sweedler4", 0));
    requireAllPass(verifyModuleAlgebra(p.left, p.right.algebra(),
                                       leftRegularOnRight(p), Side::Left, true));
    requireAllPass(verifyModuleAlgebra(p.right, p.left.algebra(),
                                       leftRegularOnLeft(p), Side::Left, true));
}

TEST_CASE("adjoint actions are module-algebra actions") {
    for (const auto& name : kCore) {
        CAPTURE(name);
        auto h = hopfFixture(name, 0);
        requireAllPass(verifyModuleAlgebra(h, h.algebra(), leftAdjointAction(h),
                                           Side::Left, true));
        requireAllPass(verifyModuleAlgebra(h, h.algebra(), rightAdjointAction(h),
                                           Side::Right, true));
    }
}

TEST_CASE("adjoint action on a group algebra is conjugation") {
    auto h = groupAlgebra(builtinGroup("S3"), 0);
    auto act = leftAdjointAction(h);
    auto g = builtinGroup("S3");
    LegList one{h.space()};
    for (int i = 0; i < 6; ++i)
        for (int k = 0; k < 6; ++k) {
            int conj = g.table[g.table[i][k]][g.inverse(i)];
            CHECK(act.column({i, k}) == TensorElement::basis(one, {conj}, 0));
        }
}

TEST_CASE("coadjoint actions satisfy the module laws") {
    // Unlike the adjoint actions, the coadjoint actions are dual to module
    // *coalgebra* structure, so only the plain module laws are expected; the
    // Sweedler algebra indeed violates the module-algebra law for them.
    for (const auto& name : kCore) {
        CAPTURE(name);
        auto p = canonicalPairing(hopfFixture(name, 0));
        requireAllPass(verifyModuleAlgebra(p.left, p.right.algebra(),
                                           leftCoadjointAction(p), Side::Left, false));
        requireAllPass(verifyModuleAlgebra(p.left, p.right.algebra(),
                                           rightCoadjointAction(p), Side::Right, false));
    }
    auto p = canonicalPairing(hopfFixture("sweedler4", 0));
    auto rep = verifyModuleAlgebra(p.left, p.right.algebra(), leftCoadjointAction(p),
                                   Side::Left, true);
    bool compat = true;
    for (const auto& item : rep.items)
        if (item.id == "acts-by-algebra-maps") compat = item.pass;
    CHECK(!compat);
}

TEST_CASE("action-coaction round trips along the canonical pairing") {
    for (const auto& name : kCore) {
        CAPTURE(name);
        auto p = canonicalPairing(hopfFixture(name, 0));
        requireAllPass(verifyActionCoactionRoundTrips(p, leftRegularOnRight(p),
                                                      rightRegularOnRight(p)));
        // Comultiplication-style coactions of the dual on itself.
        requireAllPass(verifyCoactionActionRoundTrips(
            p, rightCoactionFromLeftAction(p, leftCoadjointAction(p)),
            leftCoactionFromRightAction(p, rightCoadjointAction(p))));
    }
}

TEST_CASE("induced coactions of module actions are comodule coactions") {
    for (const auto& name : kCore) {
        CAPTURE(name);
        auto p = canonicalPairing(hopfFixture(name, 0));
        auto beta = rightCoactionFromLeftAction(p, leftCoadjointAction(p));
        requireAllPass(verifyComoduleAlgebra(p.right, p.right.algebra(), beta,
                                             Side::Right, false));
    }
}

TEST_CASE("conjugation by the canonical element is a right comodule-algebra coaction") {
    for (const auto& name : kCore) {
        CAPTURE(name);
        auto p = canonicalPairing(hopfFixture(name, 0));
        // U ∈ H ⊗ Ĥ satisfies (id⊗Δ̂)U = U12 U13, so conjugation h ↦ U(h⊗1)U⁻¹
        // is a right Ĥ-coaction on H.
        auto alpha = coactionFromInvertible(p.right, p.left.algebra(), p.U, Side::Right);
        requireAllPass(verifyComoduleAlgebra(p.right, p.left.algebra(), alpha,
                                             Side::Right, true));
    }
}

TEST_CASE("conjugation by Σ(U⁻¹) is a left comodule-algebra coaction") {
    for (const auto& name : kCore) {
        CAPTURE(name);
        auto p = canonicalPairing(hopfFixture(name, 0));
        std::vector<AlgebraData> pair{p.left.algebra(), p.right.algebra()};
        auto uinv = invertElement(pair, p.U);
        REQUIRE(uinv.has_value());
        auto w = uinv->permuteLegs({1, 0});  // Σ(U⁻¹) ∈ Ĥ ⊗ H
        auto alpha = coactionFromInvertible(p.right, p.left.algebra(), w, Side::Left);
        requireAllPass(verifyComoduleAlgebra(p.right, p.left.algebra(), alpha,
                                             Side::Left, true));
    }
}

TEST_CASE("negative control: W failing the coproduct condition is rejected") {
    auto p = canonicalPairing(groupAlgebra(builtinGroup("C3"), 0));
    // 1⊗1 + g1⊗g1^ is invertible-ish but fails (id⊗Δ̂)W = W12 W13.
    TensorElement w({p.left.space(), p.right.space()}, 0);
    w.addTerm({0, 0}, Scalar::one(0));
    w.addTerm({1, 1}, Scalar::one(0));
    CHECK_THROWS_AS(coactionFromInvertible(p.right, p.left.algebra(), w, Side::Right),
                    CocycleConditionFailed);
}

TEST_CASE("smash product H # Ĥ is a unital associative algebra with algebra inclusions") {
    for (const char* name : {"group:C3", "sweedler4"}) {
        CAPTURE(name);
        auto h = hopfFixture(name, 0);
        auto p = canonicalPairing(h);
        // X = H as an algebra, acted on by Ĥ through the left regular action.
        auto sp = smashProduct(p.right, p.left.algebra(), leftRegularOnLeft(p),
                               std::string("H(") + name + ")");
        requireAllPass(verifyAlgebra(sp.algebra, "smash"));
        requireAllPass(verifyAlgebraMorphism(p.left.algebra(), sp.algebra, sp.inclModule));
        requireAllPass(verifyAlgebraMorphism(p.right.algebra(), sp.algebra, sp.inclHopf));
    }
}

TEST_CASE("smash product with the trivial action is the tensor product algebra") {
    auto h = groupAlgebra(builtinGroup("C2"), 0);
    auto p = canonicalPairing(h);
    // Trivial action of Ĥ on H: ω ▷ x = ε̂(ω) x.
    StructureMap triv(LegList{p.right.space(), h.space()}, LegList{h.space()}, 0);
    for (int j = 0; j < p.right.space()->dim(); ++j) {
        auto e = p.right.counit().entry({}, {j});
        for (int i = 0; i < h.space()->dim(); ++i) triv.addEntry({i}, {j, i}, e);
    }
    auto sp = smashProduct(p.right, h.algebra(), triv, "HxH^");
    requireAllPass(verifyAlgebra(sp.algebra, "tensor-smash"));
    // (x#ω)(y#θ) = xy # ωθ: check on a sample.
    auto xw = sp.fromPair.apply(
        TensorElement::basis({h.space(), p.right.space()}, {1, 0}, 0));
    auto yt = sp.fromPair.apply(
        TensorElement::basis({h.space(), p.right.space()}, {1, 1}, 0));
    auto expect = sp.fromPair.apply(
        TensorElement::basis({h.space(), p.right.space()}, {0, 0}, 0)
            .scale(Scalar::zero(0)));
    // g*g = 1 and g0^ * g1^ = 0 in the dual of kC2.
    CHECK(sp.algebra.product(xw, yt) == expect);
}
