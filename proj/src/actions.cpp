#include "hopfyd/actions.hpp"

#include "hopfyd/linsolve.hpp"

namespace hopfyd {

Report verifyModuleAlgebra(const HopfAlgebraData& h, const AlgebraData& x,
                           const StructureMap& act, Side side, bool algebraCompat) {
    Report rep{"module-algebra", {}};
    long p = h.field();
    LegList oneH{h.space()}, oneX{x.space};
    StructureMap idX = StructureMap::identity(oneX, p);
    StructureMap uH = StructureMap::fromElement(h.unit());
    StructureMap uX = StructureMap::fromElement(x.unit);

    if (side == Side::Left) {
        rep.add(checkMapEqual("action-associative",
                              act.compose(h.mult().embed({}, oneX)),
                              act.compose(act.embed(oneH, {}))));
        rep.add(checkMapEqual("action-unital", act.compose(uH.embed({}, oneX)), idX));
        if (algebraCompat) {
            StructureMap inner = StructureMap::permutation(
                {h.space(), h.space(), x.space, x.space}, {0, 2, 1, 3}, p);
            rep.add(checkMapEqual(
                "acts-by-algebra-maps", act.compose(x.mult.embed(oneH, {})),
                x.mult.compose(act.tensorWith(act))
                    .compose(inner)
                    .compose(h.comult().embed({}, {x.space, x.space}))));
            rep.add(checkMapEqual("preserves-unit", act.compose(uX.embed(oneH, {})),
                                  uX.compose(h.counit())));
        }
    } else {
        rep.add(checkMapEqual("action-associative",
                              act.compose(h.mult().embed(oneX, {})),
                              act.compose(act.embed({}, oneH))));
        rep.add(checkMapEqual("action-unital", act.compose(uH.embed(oneX, {})), idX));
        if (algebraCompat) {
            StructureMap inner = StructureMap::permutation(
                {x.space, x.space, h.space(), h.space()}, {0, 2, 1, 3}, p);
            rep.add(checkMapEqual(
                "acts-by-algebra-maps", act.compose(x.mult.embed({}, oneH)),
                x.mult.compose(act.tensorWith(act))
                    .compose(inner)
                    .compose(h.comult().embed({x.space, x.space}, {}))));
            rep.add(checkMapEqual("preserves-unit", act.compose(uX.embed({}, oneH)),
                                  uX.compose(h.counit())));
        }
    }
    return rep;
}

Report verifyComoduleAlgebra(const HopfAlgebraData& h, const AlgebraData& x,
                             const StructureMap& coact, Side side, bool algebraCompat) {
    Report rep{"comodule-algebra", {}};
    long p = h.field();
    LegList oneH{h.space()}, oneX{x.space};
    StructureMap idX = StructureMap::identity(oneX, p);

    bool counitLaw;
    if (side == Side::Right) {
        rep.add(checkMapEqual("coassociative", coact.embed({}, oneH).compose(coact),
                              h.comult().embed(oneX, {}).compose(coact)));
        auto cu = checkMapEqual("counit-law", h.counit().embed(oneX, {}).compose(coact), idX);
        counitLaw = cu.pass;
        rep.add(std::move(cu));
    } else {
        rep.add(checkMapEqual("coassociative", h.comult().embed({}, oneX).compose(coact),
                              coact.embed(oneH, {}).compose(coact)));
        auto cu = checkMapEqual("counit-law", h.counit().embed({}, oneX).compose(coact), idX);
        counitLaw = cu.pass;
        rep.add(std::move(cu));
    }
    // For coassociative coactions the counit law is equivalent to injectivity.
    bool injective = matrixRank(coact.denseMatrix()) == x.space->dim();
    rep.add("counit-law-iff-injective", counitLaw == injective,
            counitLaw ? "counit law holds but coaction is not injective"
                      : "coaction is injective but counit law fails");

    if (algebraCompat) {
        StructureMap mm = side == Side::Right
                              ? x.mult.tensorWith(h.mult())
                              : h.mult().tensorWith(x.mult);
        LegList four = side == Side::Right
                           ? LegList{x.space, h.space(), x.space, h.space()}
                           : LegList{h.space(), x.space, h.space(), x.space};
        StructureMap inner = StructureMap::permutation(four, {0, 2, 1, 3}, p);
        rep.add(checkMapEqual("multiplicative", coact.compose(x.mult),
                              mm.compose(inner).compose(coact.tensorWith(coact))));
        auto unitImage = side == Side::Right ? x.unit.tensorWith(h.unit())
                                             : h.unit().tensorWith(x.unit);
        rep.add("unit-compatible", coact.apply(x.unit) == unitImage,
                "α(1) != 1⊗1");
    }
    return rep;
}

StructureMap leftAdjointAction(const HopfAlgebraData& h) {
    long p = h.field();
    LegList one{h.space()};
    StructureMap f({h.space(), h.space()}, one, p);
    for (int i = 0; i < h.space()->dim(); ++i) {
        auto dh = h.comult().column({i});
        for (int k = 0; k < h.space()->dim(); ++k) {
            auto g = TensorElement::basis(one, {k}, p);
            TensorElement out(one, p);
            for (const auto& [ab, c] : dh.coeffs()) {
                auto h1 = TensorElement::basis(one, {ab[0]}, p);
                auto h2 = TensorElement::basis(one, {ab[1]}, p);
                out = out +
                      h.product(h.product(h1, g), h.antipode().apply(h2)).scale(c);
            }
            f.setColumn({i, k}, out);
        }
    }
    return f;
}

StructureMap rightAdjointAction(const HopfAlgebraData& h) {
    long p = h.field();
    LegList one{h.space()};
    StructureMap f({h.space(), h.space()}, one, p);
    for (int i = 0; i < h.space()->dim(); ++i) {
        auto dh = h.comult().column({i});
        for (int k = 0; k < h.space()->dim(); ++k) {
            auto g = TensorElement::basis(one, {k}, p);
            TensorElement out(one, p);
            for (const auto& [ab, c] : dh.coeffs()) {
                auto h1 = TensorElement::basis(one, {ab[0]}, p);
                auto h2 = TensorElement::basis(one, {ab[1]}, p);
                out = out +
                      h.product(h.product(h.antipode().apply(h1), g), h2).scale(c);
            }
            f.setColumn({k, i}, out);
        }
    }
    return f;
}

StructureMap leftCoadjointAction(const Pairing& p) {
    long q = p.field();
    LegList oneH{p.left.space()}, oneR{p.right.space()};
    StructureMap lreg = leftRegularOnRight(p), rreg = rightRegularOnRight(p);
    StructureMap f({p.left.space(), p.right.space()}, oneR, q);
    for (int i = 0; i < p.left.space()->dim(); ++i) {
        auto dh = p.left.comult().column({i});
        for (int j = 0; j < p.right.space()->dim(); ++j) {
            auto w = TensorElement::basis(oneR, {j}, q);
            TensorElement out(oneR, q);
            for (const auto& [ab, c] : dh.coeffs()) {
                auto h1 = TensorElement::basis(oneH, {ab[0]}, q);
                auto h2 = TensorElement::basis(oneH, {ab[1]}, q);
                auto mid = lreg.apply(h1.tensorWith(w));
                out = out + rreg.apply(mid.tensorWith(
                                           p.left.antipodeInverse().apply(h2)))
                                .scale(c);
            }
            f.setColumn({i, j}, out);
        }
    }
    return f;
}

StructureMap rightCoadjointAction(const Pairing& p) {
    long q = p.field();
    LegList oneH{p.left.space()}, oneR{p.right.space()};
    StructureMap lreg = leftRegularOnRight(p), rreg = rightRegularOnRight(p);
    StructureMap f({p.right.space(), p.left.space()}, oneR, q);
    for (int i = 0; i < p.left.space()->dim(); ++i) {
        auto dh = p.left.comult().column({i});
        for (int j = 0; j < p.right.space()->dim(); ++j) {
            auto w = TensorElement::basis(oneR, {j}, q);
            TensorElement out(oneR, q);
            for (const auto& [ab, c] : dh.coeffs()) {
                auto h1 = TensorElement::basis(oneH, {ab[0]}, q);
                auto h2 = TensorElement::basis(oneH, {ab[1]}, q);
                auto mid = lreg.apply(p.left.antipodeInverse().apply(h1).tensorWith(w));
                out = out + rreg.apply(mid.tensorWith(h2)).scale(c);
            }
            f.setColumn({j, i}, out);
        }
    }
    return f;
}

StructureMap leftActionFromRightCoaction(const Pairing& p, const StructureMap& beta) {
    long q = p.field();
    if (beta.cod().size() != 2) throw ShapeMismatch("expected coaction into X ⊗ H'");
    LegList oneX{beta.dom()[0]};
    StructureMap f({p.left.space(), beta.dom()[0]}, oneX, q);
    for (int i = 0; i < p.left.space()->dim(); ++i) {
        auto h = TensorElement::basis({p.left.space()}, {i}, q);
        for (int xj = 0; xj < beta.dom()[0]->dim(); ++xj)
            f.setColumn({i, xj}, pairLegWithLeft(p.form, h, beta.column({xj}), 1));
    }
    return f;
}

StructureMap rightCoactionFromLeftAction(const Pairing& p, const StructureMap& act) {
    long q = p.field();
    const SpacePtr& xs = act.dom()[1];
    StructureMap f({xs}, {xs, p.right.space()}, q);
    for (int xj = 0; xj < xs->dim(); ++xj) {
        TensorElement out({xs, p.right.space()}, q);
        for (const auto& [ab, c] : p.U.coeffs()) {
            auto moved = act.column({ab[0], xj});
            out = out + moved
                            .tensorWith(TensorElement::basis({p.right.space()},
                                                             {ab[1]}, q))
                            .scale(c);
        }
        f.setColumn({xj}, out);
    }
    return f;
}

StructureMap rightActionFromLeftCoaction(const Pairing& p, const StructureMap& beta) {
    long q = p.field();
    if (beta.cod().size() != 2) throw ShapeMismatch("expected coaction into H' ⊗ X");
    const SpacePtr& xs = beta.dom()[0];
    StructureMap f({xs, p.left.space()}, {xs}, q);
    for (int xj = 0; xj < xs->dim(); ++xj) {
        auto bx = beta.column({xj});
        for (int i = 0; i < p.left.space()->dim(); ++i) {
            auto h = TensorElement::basis({p.left.space()}, {i}, q);
            f.setColumn({xj, i}, pairLegWithLeft(p.form, h, bx, 0));
        }
    }
    return f;
}

StructureMap leftCoactionFromRightAction(const Pairing& p, const StructureMap& act) {
    long q = p.field();
    const SpacePtr& xs = act.dom()[0];
    StructureMap f({xs}, {p.right.space(), xs}, q);
    for (int xj = 0; xj < xs->dim(); ++xj) {
        TensorElement out({p.right.space(), xs}, q);
        for (const auto& [ab, c] : p.U.coeffs()) {
            auto moved = act.column({xj, ab[0]});
            out = out + TensorElement::basis({p.right.space()}, {ab[1]}, q)
                            .tensorWith(moved)
                            .scale(c);
        }
        f.setColumn({xj}, out);
    }
    return f;
}

StructureMap coactionFromInvertible(const HopfAlgebraData& h, const AlgebraData& x,
                                    const TensorElement& w, Side side) {
    long p = h.field();
    std::vector<AlgebraData> two = side == Side::Left
                                       ? std::vector<AlgebraData>{h.algebra(), x}
                                       : std::vector<AlgebraData>{x, h.algebra()};
    std::vector<AlgebraData> three;
    TensorElement lhs({}, p), rhs({}, p);
    if (side == Side::Left) {
        three = {h.algebra(), h.algebra(), x};
        lhs = h.comult().embed({}, {x.space}).apply(w);
        rhs = legwiseProduct(three, embedWithUnits(three, w, {1, 2}),
                             embedWithUnits(three, w, {0, 2}));
    } else {
        three = {x, h.algebra(), h.algebra()};
        lhs = h.comult().embed({x.space}, {}).apply(w);
        rhs = legwiseProduct(three, embedWithUnits(three, w, {0, 1}),
                             embedWithUnits(three, w, {0, 2}));
    }
    if (lhs != rhs)
        throw CocycleConditionFailed(side == Side::Left
                                         ? "(Δ⊗id)W != W23 W13"
                                         : "(id⊗Δ)W != W12 W13");
    auto winv = invertElement(two, w);
    if (!winv) throw NotInvertible("coactionFromInvertible: W is not invertible");
    LegList cod = side == Side::Left ? LegList{h.space(), x.space}
                                     : LegList{x.space, h.space()};
    StructureMap f({x.space}, cod, p);
    for (int xj = 0; xj < x.space->dim(); ++xj) {
        auto xe = TensorElement::basis({x.space}, {xj}, p);
        auto mid = side == Side::Left ? h.unit().tensorWith(xe) : xe.tensorWith(h.unit());
        f.setColumn({xj}, legwiseProduct(two, legwiseProduct(two, w, mid), *winv));
    }
    return f;
}

SmashProduct smashProduct(const HopfAlgebraData& h, const AlgebraData& x,
                          const StructureMap& act, const std::string& name) {
    long p = h.field();
    LegList pairLegs{x.space, h.space()};
    SpacePtr flat = flattenedSpace(name, pairLegs);
    StructureMap toFlat = flattenIso(pairLegs, flat, p);
    StructureMap fromFlat = toFlat.transposed();

    // (x # h)(y # h') = x (h₍₁₎ ▷ y) # h₍₂₎ h'.
    StructureMap mult =
        toFlat
            .compose(x.mult.tensorWith(h.mult()))
            .compose(act.embed({x.space}, {h.space(), h.space()}))
            .compose(StructureMap::permutation(
                {x.space, h.space(), h.space(), x.space, h.space()}, {0, 1, 3, 2, 4}, p))
            .compose(h.comult().embed({x.space}, {x.space, h.space()}))
            .compose(fromFlat.tensorWith(fromFlat));

    TensorElement unit = toFlat.apply(x.unit.tensorWith(h.unit()));
    AlgebraData alg(flat, std::move(mult), std::move(unit));

    StructureMap inclModule =
        toFlat.compose(StructureMap::identity({x.space}, p)
                           .tensorWith(StructureMap::fromElement(h.unit())));
    StructureMap inclHopf =
        toFlat.compose(StructureMap::fromElement(x.unit)
                           .tensorWith(StructureMap::identity({h.space()}, p)));
    return SmashProduct{std::move(alg), std::move(inclModule), std::move(inclHopf),
                        std::move(toFlat)};
}

Report verifyActionCoactionRoundTrips(const Pairing& p, const StructureMap& leftAction,
                                      const StructureMap& rightAction) {
    Report rep{"action-coaction-round-trip", {}};
    auto beta = rightCoactionFromLeftAction(p, leftAction);
    rep.add(checkMapEqual("left-action", leftActionFromRightCoaction(p, beta), leftAction));
    auto gamma = leftCoactionFromRightAction(p, rightAction);
    rep.add(checkMapEqual("right-action", rightActionFromLeftCoaction(p, gamma),
                          rightAction));
    return rep;
}

Report verifyCoactionActionRoundTrips(const Pairing& p, const StructureMap& rightCoaction,
                                      const StructureMap& leftCoaction) {
    Report rep{"coaction-action-round-trip", {}};
    auto act = leftActionFromRightCoaction(p, rightCoaction);
    rep.add(checkMapEqual("right-coaction", rightCoactionFromLeftAction(p, act),
                          rightCoaction));
    auto ract = rightActionFromLeftCoaction(p, leftCoaction);
    rep.add(checkMapEqual("left-coaction", leftCoactionFromRightAction(p, ract),
                          leftCoaction));
    return rep;
}

}  // namespace hopfyd
