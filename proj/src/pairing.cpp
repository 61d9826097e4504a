#include "hopfyd/pairing.hpp"

#include "hopfyd/linsolve.hpp"

namespace hopfyd {

namespace {

Matrix gramMatrix(const HopfAlgebraData& left, const HopfAlgebraData& right,
                  const StructureMap& form) {
    int n = left.space()->dim(), m = right.space()->dim();
    Matrix g(n, Vector(m, Scalar::zero(form.field())));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) g[i][j] = form.entry({}, {i, j});
    return g;
}

bool isIdentity(const Matrix& m) {
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) {
            if (i == j ? !m[i][j].isOne() : !m[i][j].isZero()) return false;
        }
    return true;
}

}  // namespace

TensorElement pairLegWithLeft(const StructureMap& form, const TensorElement& h,
                              const TensorElement& x, int leg) {
    LegList legs;
    for (size_t i = 0; i < x.legs().size(); ++i)
        if (static_cast<int>(i) != leg) legs.push_back(x.legs()[i]);
    TensorElement r(legs, x.field());
    for (const auto& [idx, c] : x.coeffs()) {
        Scalar s = Scalar::zero(x.field());
        for (const auto& [hi, hc] : h.coeffs()) s += hc * form.entry({}, {hi[0], idx[leg]});
        if (s.isZero()) continue;
        MultiIndex out;
        for (size_t i = 0; i < idx.size(); ++i)
            if (static_cast<int>(i) != leg) out.push_back(idx[i]);
        r.addTerm(out, c * s);
    }
    return r;
}

TensorElement pairLegWithRight(const StructureMap& form, const TensorElement& omega,
                               const TensorElement& x, int leg) {
    LegList legs;
    for (size_t i = 0; i < x.legs().size(); ++i)
        if (static_cast<int>(i) != leg) legs.push_back(x.legs()[i]);
    TensorElement r(legs, x.field());
    for (const auto& [idx, c] : x.coeffs()) {
        Scalar s = Scalar::zero(x.field());
        for (const auto& [oi, oc] : omega.coeffs()) s += oc * form.entry({}, {idx[leg], oi[0]});
        if (s.isZero()) continue;
        MultiIndex out;
        for (size_t i = 0; i < idx.size(); ++i)
            if (static_cast<int>(i) != leg) out.push_back(idx[i]);
        r.addTerm(out, c * s);
    }
    return r;
}

Pairing makePairing(HopfAlgebraData left, HopfAlgebraData right, StructureMap form) {
    Matrix gram = gramMatrix(left, right, form);
    auto inv = inverseMatrix(gram);
    if (!inv) throw DegeneratePairing("pairing between " + left.space()->name + " and " +
                                      right.space()->name + " is degenerate");
    // p²(U, ω ⊗ h) = p(h, ω) forces U[a][b] = (Gram⁻¹)[b][a].
    LegList two{left.space(), right.space()};
    TensorElement u(two, form.field());
    int n = left.space()->dim(), m = right.space()->dim();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b) u.addTerm({a, b}, (*inv)[b][a]);
    return Pairing{std::move(left), std::move(right), std::move(form), std::move(u)};
}

Pairing canonicalPairing(const HopfAlgebraData& h) {
    HopfAlgebraData dual = h.dual();
    LegList two{h.space(), dual.space()};
    StructureMap form(two, {}, h.field());
    for (int i = 0; i < h.space()->dim(); ++i)
        form.addEntry({}, {i, i}, Scalar::one(h.field()));
    return makePairing(h, std::move(dual), std::move(form));
}

Pairing flippedPairing(const Pairing& p) {
    LegList two{p.right.space(), p.left.space()};
    StructureMap form = p.form.compose(
        StructureMap::permutation(two, {1, 0}, p.field()));
    return makePairing(p.right, p.left, std::move(form));
}

Report verifyPairing(const Pairing& p) {
    Report rep{"pairing", {}};
    long q = p.field();
    const SpacePtr &H = p.left.space(), &Hp = p.right.space();
    LegList oneL{H}, oneR{Hp};
    StructureMap inner =
        StructureMap::permutation({H, H, Hp, Hp}, {0, 2, 1, 3}, q);
    StructureMap pp = p.form.tensorWith(p.form).compose(inner);

    rep.add(checkMapEqual("product-vs-dual-coproduct",
                          p.form.compose(p.left.mult().embed({}, oneR)),
                          pp.compose(p.right.comult().embed({H, H}, {}))));
    rep.add(checkMapEqual("coproduct-vs-dual-product",
                          p.form.compose(p.right.mult().embed(oneL, {})),
                          pp.compose(p.left.comult().embed({}, {Hp, Hp}))));
    rep.add(checkMapEqual("unit-vs-dual-counit",
                          p.form.compose(StructureMap::fromElement(p.left.unit())
                                             .embed({}, oneR)),
                          p.right.counit()));
    rep.add(checkMapEqual("counit-vs-dual-unit",
                          p.form.compose(StructureMap::fromElement(p.right.unit())
                                             .embed(oneL, {})),
                          p.left.counit()));
    rep.add(checkMapEqual("antipode-vs-dual-antipode",
                          p.form.compose(p.left.antipode().embed({}, oneR)),
                          p.form.compose(p.right.antipode().embed(oneL, {}))));
    rep.add("nondegenerate",
            inverseMatrix(gramMatrix(p.left, p.right, p.form)).has_value(),
            "pairing matrix is singular");
    return rep;
}

Report verifyCanonicalElement(const Pairing& p) {
    Report rep{"canonical-element", {}};
    long q = p.field();
    const SpacePtr &H = p.left.space(), &Hp = p.right.space();
    LegList oneL{H}, oneR{Hp};
    std::vector<AlgebraData> pair{p.left.algebra(), p.right.algebra()};

    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < H->dim() && ok; ++i)
            for (int j = 0; j < Hp->dim(); ++j) {
                Scalar lhs = Scalar::zero(q);
                for (const auto& [ab, c] : p.U.coeffs())
                    lhs += c * p.form.entry({}, {ab[0], j}) * p.form.entry({}, {i, ab[1]});
                if (lhs != p.form.entry({}, {i, j})) {
                    ok = false;
                    wit = "h=" + H->basisLabels[i] + ", ω=" + Hp->basisLabels[j];
                    break;
                }
            }
        rep.add("defining-slice-property", ok, wit);
    }

    {
        bool ok = true;
        std::string wit;
        for (int j = 0; j < Hp->dim(); ++j) {
            auto w = TensorElement::basis(oneR, {j}, q);
            if (pairLegWithRight(p.form, w, p.U, 0) != w) {
                ok = false;
                wit = "ω=" + Hp->basisLabels[j];
                break;
            }
        }
        rep.add("slice-recovers-right-factor", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < H->dim(); ++i) {
            auto h = TensorElement::basis(oneL, {i}, q);
            if (pairLegWithLeft(p.form, h, p.U, 1) != h) {
                ok = false;
                wit = "h=" + H->basisLabels[i];
                break;
            }
        }
        rep.add("slice-recovers-left-factor", ok, wit);
    }

    auto uinv = invertElement(pair, p.U);
    rep.add("invertible", uinv.has_value(), "canonical element has no inverse");
    if (uinv) {
        auto sU = p.left.antipode().embed({}, oneR).apply(p.U);
        auto sHatU = p.right.antipode().embed(oneL, {}).apply(p.U);
        rep.add("inverse-is-antipode-left", *uinv == sU,
                "U⁻¹ != (S⊗id)U");
        rep.add("inverse-is-antipode-right", *uinv == sHatU,
                "U⁻¹ != (id⊗Ŝ)U");

        std::vector<AlgebraData> hhr{p.left.algebra(), p.left.algebra(),
                                     p.right.algebra()};
        auto lhs = p.left.comult().embed({}, oneR).apply(p.U);
        auto rhs = legwiseProduct(hhr, embedWithUnits(hhr, p.U, {0, 2}),
                                  embedWithUnits(hhr, p.U, {1, 2}));
        rep.add("coproduct-left-factor", lhs == rhs, "(Δ⊗id)U != U13 U23");

        std::vector<AlgebraData> hrr{p.left.algebra(), p.right.algebra(),
                                     p.right.algebra()};
        auto lhs2 = p.right.comult().embed(oneL, {}).apply(p.U);
        auto rhs2 = legwiseProduct(hrr, embedWithUnits(hrr, p.U, {0, 1}),
                                   embedWithUnits(hrr, p.U, {0, 2}));
        rep.add("coproduct-right-factor", lhs2 == rhs2, "(id⊗Δ')U != U12 U13");
    }

    rep.add("flipped-pairing-canonical",
            flippedPairing(p).U == p.U.permuteLegs({1, 0}),
            "canonical element of p̄ is not Σ(U)");

    if (isIdentity(gramMatrix(p.left, p.right, p.form))) {
        TensorElement dualSum({H, Hp}, q);
        for (int i = 0; i < H->dim(); ++i) dualSum.addTerm({i, i}, Scalar::one(q));
        rep.add("dual-basis-sum", p.U == dualSum,
                "canonical element differs from Σᵢ hᵢ⊗ĥᵢ");
    }
    return rep;
}

StructureMap circAdjoint(const Pairing& p) {
    std::vector<AlgebraData> opPair{p.left.algebra().opposite(), p.right.algebra()};
    return adConjugation(opPair, p.U);
}

StructureMap tU(const Pairing& p) {
    std::vector<AlgebraData> pair{p.left.algebra(), p.right.algebra()};
    LegList oneL{p.left.space()};
    StructureMap sHat = p.right.antipode().embed(oneL, {});
    StructureMap sHatInv = p.right.antipodeInverse().embed(oneL, {});
    return sHatInv.compose(adConjugation(pair, p.U)).compose(sHat);
}

StructureMap tUInverse(const Pairing& p) {
    std::vector<AlgebraData> pair{p.left.algebra(), p.right.algebra()};
    auto uinv = invertElement(pair, p.U);
    if (!uinv) throw NotInvertible("canonical element has no inverse");
    LegList oneL{p.left.space()};
    StructureMap sHat = p.right.antipode().embed(oneL, {});
    StructureMap sHatInv = p.right.antipodeInverse().embed(oneL, {});
    return sHatInv.compose(adConjugation(pair, *uinv)).compose(sHat);
}

Report verifyCircCanonical(const Pairing& p) {
    Report rep{"circ-canonical", {}};
    long q = p.field();
    LegList two{p.left.space(), p.right.space()};
    std::vector<AlgebraData> pair{p.left.algebra(), p.right.algebra()};
    std::vector<AlgebraData> opPair{p.left.algebra().opposite(), p.right.algebra()};

    auto uinv = invertElement(pair, p.U);
    auto circInv = invertElement(opPair, p.U);
    rep.add("circ-invertible", circInv.has_value(), "°U has no inverse in H^op⊗H'");
    if (uinv && circInv) {
        StructureMap sHatInv1 = p.right.antipodeInverse().embed({p.left.space()}, {});
        rep.add("circ-inverse-formula", *circInv == sHatInv1.apply(p.U),
                "(°U)⁻¹ != (op⊗Ŝ⁻¹)(U)");
        rep.add("circ-from-inverse", p.U == sHatInv1.apply(*uinv),
                "°U != (op⊗Ŝ⁻¹)(U⁻¹)");
    }

    StructureMap t = tU(p), tInv = tUInverse(p);
    rep.add(checkMapEqual("twisted-conjugation-inverse",
                          t.compose(tInv), StructureMap::identity(two, q)));
    rep.add(checkMapEqual("circ-adjoint-equals-twisted", circAdjoint(p), t));
    if (circInv)
        rep.add(checkMapEqual("circ-adjoint-inverse-equals-twisted",
                              adConjugation(opPair, *circInv), tInv));
    return rep;
}

StructureMap leftRegularOnRight(const Pairing& p) {
    long q = p.field();
    LegList dom{p.left.space(), p.right.space()}, cod{p.right.space()};
    StructureMap f(dom, cod, q);
    for (int i = 0; i < p.left.space()->dim(); ++i) {
        auto h = TensorElement::basis({p.left.space()}, {i}, q);
        for (int j = 0; j < p.right.space()->dim(); ++j)
            f.setColumn({i, j},
                        pairLegWithLeft(p.form, h, p.right.comult().column({j}), 1));
    }
    return f;
}

StructureMap rightRegularOnRight(const Pairing& p) {
    long q = p.field();
    LegList dom{p.right.space(), p.left.space()}, cod{p.right.space()};
    StructureMap f(dom, cod, q);
    for (int j = 0; j < p.right.space()->dim(); ++j) {
        auto dj = p.right.comult().column({j});
        for (int i = 0; i < p.left.space()->dim(); ++i) {
            auto h = TensorElement::basis({p.left.space()}, {i}, q);
            f.setColumn({j, i}, pairLegWithLeft(p.form, h, dj, 0));
        }
    }
    return f;
}

StructureMap leftRegularOnLeft(const Pairing& p) {
    long q = p.field();
    LegList dom{p.right.space(), p.left.space()}, cod{p.left.space()};
    StructureMap f(dom, cod, q);
    for (int j = 0; j < p.right.space()->dim(); ++j) {
        auto w = TensorElement::basis({p.right.space()}, {j}, q);
        for (int i = 0; i < p.left.space()->dim(); ++i)
            f.setColumn({j, i},
                        pairLegWithRight(p.form, w, p.left.comult().column({i}), 1));
    }
    return f;
}

StructureMap rightRegularOnLeft(const Pairing& p) {
    long q = p.field();
    LegList dom{p.left.space(), p.right.space()}, cod{p.left.space()};
    StructureMap f(dom, cod, q);
    for (int i = 0; i < p.left.space()->dim(); ++i) {
        auto di = p.left.comult().column({i});
        for (int j = 0; j < p.right.space()->dim(); ++j) {
            auto w = TensorElement::basis({p.right.space()}, {j}, q);
            f.setColumn({i, j}, pairLegWithRight(p.form, w, di, 0));
        }
    }
    return f;
}

Report verifySliceIdentities(const Pairing& p) {
    Report rep{"sandwich-slice", {}};
    long q = p.field();
    const SpacePtr &H = p.left.space(), &Hp = p.right.space();
    LegList oneL{H}, oneR{Hp};
    std::vector<AlgebraData> pair{p.left.algebra(), p.right.algebra()};

    auto uinv = invertElement(pair, p.U);
    if (!uinv) {
        rep.add("prerequisite-inverse", false, "canonical element has no inverse");
        return rep;
    }
    StructureMap adU = adConjugation(pair, p.U);
    StructureMap adUinv = adConjugation(pair, *uinv);
    StructureMap t = tU(p), tInv = tUInverse(p);
    StructureMap lOnL = leftRegularOnLeft(p), rOnL = rightRegularOnLeft(p);
    const StructureMap &s = p.left.antipode(), &sInv = p.left.antipodeInverse();

    auto mul = [&](const TensorElement& a, const TensorElement& b) {
        return p.left.product(a, b);
    };
    // The four sandwiched elements each admit two regular-action expressions;
    // every check quantifies over basis h, g, ω and stops at the first failure.
    struct Case {
        std::string id;
        const StructureMap* middle;  // map on H ⊗ H' applied to g ⊗ ω
        int form;                    // which right-hand side expression
    };
    std::vector<Case> cases = {
        {"conjugated.left-action-form", &adU, 0},
        {"conjugated.right-action-form", &adU, 1},
        {"inverse-conjugated.left-form", &adUinv, 2},
        {"inverse-conjugated.right-form", &adUinv, 3},
        {"twisted.left-form", &t, 4},
        {"twisted.right-form", &t, 5},
        {"inverse-twisted.left-form", &tInv, 6},
        {"inverse-twisted.right-form", &tInv, 7},
    };

    for (const auto& cs : cases) {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < H->dim() && ok; ++i) {
            auto h = TensorElement::basis(oneL, {i}, q);
            auto dh = p.left.comult().column({i});
            for (int k = 0; k < H->dim() && ok; ++k) {
                auto g = TensorElement::basis(oneL, {k}, q);
                for (int j = 0; j < Hp->dim(); ++j) {
                    auto w = TensorElement::basis(oneR, {j}, q);
                    auto z = cs.middle->column({k, j});
                    auto lhs = pairLegWithLeft(p.form, h, z, 1);
                    TensorElement rhs(oneL, q);
                    for (const auto& [ab, c] : dh.coeffs()) {
                        auto h1 = TensorElement::basis(oneL, {ab[0]}, q);
                        auto h2 = TensorElement::basis(oneL, {ab[1]}, q);
                        TensorElement term(oneL, q);
                        switch (cs.form) {
                            case 0:  // (ω▶h1) g S(h2)
                                term = mul(mul(lOnL.apply(w.tensorWith(h1)), g),
                                           s.apply(h2));
                                break;
                            case 1:  // h1 g S(h2◀ω)
                                term = mul(mul(h1, g),
                                           s.apply(rOnL.apply(h2.tensorWith(w))));
                                break;
                            case 2:  // S(h1) g (h2◀ω)
                                term = mul(mul(s.apply(h1), g),
                                           rOnL.apply(h2.tensorWith(w)));
                                break;
                            case 3:  // S(ω▶h1) g h2
                                term = mul(mul(s.apply(lOnL.apply(w.tensorWith(h1))), g),
                                           h2);
                                break;
                            case 4:  // S⁻¹(h2◀ω) g h1
                                term = mul(mul(sInv.apply(rOnL.apply(h2.tensorWith(w))), g),
                                           h1);
                                break;
                            case 5:  // S⁻¹(h2) g (ω▶h1)
                                term = mul(mul(sInv.apply(h2), g),
                                           lOnL.apply(w.tensorWith(h1)));
                                break;
                            case 6:  // h2 g S⁻¹(ω▶h1)
                                term = mul(mul(h2, g),
                                           sInv.apply(lOnL.apply(w.tensorWith(h1))));
                                break;
                            case 7:  // (h2◀ω) g S⁻¹(h1)
                                term = mul(mul(rOnL.apply(h2.tensorWith(w)), g),
                                           sInv.apply(h1));
                                break;
                        }
                        rhs = rhs + term.scale(c);
                    }
                    if (lhs != rhs) {
                        ok = false;
                        wit = "h=" + H->basisLabels[i] + ", g=" + H->basisLabels[k] +
                              ", ω=" + Hp->basisLabels[j];
                        break;
                    }
                }
            }
        }
        rep.add(cs.id, ok, wit);
    }
    return rep;
}

Report verifyTransposeCompatibility(const Pairing& pH, const Pairing& pHprime,
                                    const StructureMap& t, const StructureMap& tHat) {
    Report rep{"transpose", {}};
    // p_{H'}(T h, ω') = p_H(h, T̂ ω') as maps H ⊗ Ĥ' → k.
    LegList oneL{pH.left.space()}, oneRp{pHprime.right.space()};
    rep.add(checkMapEqual("adjointness",
                          pHprime.form.compose(t.embed({}, oneRp)),
                          pH.form.compose(tHat.embed(oneL, {}))));
    return rep;
}

}  // namespace hopfyd
