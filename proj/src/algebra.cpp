#include "hopfyd/algebra.hpp"

#include "hopfyd/linsolve.hpp"

namespace hopfyd {

namespace {

std::string label(const LegList& legs, const MultiIndex& idx) {
    std::string s;
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i) s += "⊗";
        s += legs[i]->basisLabels[idx[i]];
    }
    return s.empty() ? "1" : s;
}

}  // namespace

AlgebraData AlgebraData::opposite() const {
    LegList two{space, space};
    StructureMap flip = StructureMap::permutation(two, {1, 0}, field());
    return AlgebraData(space, mult.compose(flip), unit);
}

Report verifyAlgebra(const AlgebraData& a, const std::string& suite) {
    Report rep{suite, {}};
    LegList one{a.space};
    long p = a.field();

    bool ok = true;
    std::string wit;
    for (const auto& i : allIndices(one)) {
        if (!ok) break;
        auto x = TensorElement::basis(one, i, p);
        for (const auto& j : allIndices(one)) {
            if (!ok) break;
            auto y = TensorElement::basis(one, j, p);
            auto xy = a.product(x, y);
            for (const auto& k : allIndices(one)) {
                auto z = TensorElement::basis(one, k, p);
                if (a.product(xy, z) != a.product(x, a.product(y, z))) {
                    ok = false;
                    wit = "x=" + label(one, i) + ", y=" + label(one, j) +
                          ", z=" + label(one, k);
                    break;
                }
            }
        }
    }
    rep.add("associative", ok, wit);

    ok = true;
    wit.clear();
    for (const auto& i : allIndices(one)) {
        auto x = TensorElement::basis(one, i, p);
        if (a.product(a.unit, x) != x || a.product(x, a.unit) != x) {
            ok = false;
            wit = "x=" + label(one, i);
            break;
        }
    }
    rep.add("unital", ok, wit);
    return rep;
}

Report verifyAlgebraMorphism(const AlgebraData& dom, const AlgebraData& cod,
                             const StructureMap& f) {
    Report rep{"algebra-morphism", {}};
    LegList one{dom.space};
    long p = dom.field();

    bool ok = true;
    std::string wit;
    for (const auto& i : allIndices(one)) {
        if (!ok) break;
        auto x = TensorElement::basis(one, i, p);
        for (const auto& j : allIndices(one)) {
            auto y = TensorElement::basis(one, j, p);
            if (f.apply(dom.product(x, y)) != cod.product(f.apply(x), f.apply(y))) {
                ok = false;
                wit = "x=" + label(one, i) + ", y=" + label(one, j);
                break;
            }
        }
    }
    rep.add("multiplicative", ok, wit);
    rep.add("unit-preserving", f.apply(dom.unit) == cod.unit, "f(1) != 1");
    return rep;
}

TensorElement legwiseProduct(const std::vector<AlgebraData>& factors,
                             const TensorElement& x, const TensorElement& y) {
    if (x.legs().size() != factors.size() || y.legs().size() != factors.size())
        throw ShapeMismatch("legwiseProduct: arity mismatch");
    TensorElement r(x.legs(), x.field());
    for (const auto& [ix, cx] : x.coeffs())
        for (const auto& [iy, cy] : y.coeffs()) {
            TensorElement term = TensorElement::scalar(cx * cy);
            for (size_t l = 0; l < factors.size(); ++l) {
                auto prod = factors[l].mult.column({ix[l], iy[l]});
                term = term.tensorWith(prod);
            }
            r = r + term;
        }
    return r;
}

TensorElement legwiseUnit(const std::vector<AlgebraData>& factors) {
    TensorElement r = TensorElement::scalar(
        Scalar::one(factors.empty() ? 0 : factors[0].field()));
    for (const auto& a : factors) r = r.tensorWith(a.unit);
    return r;
}

TensorElement embedWithUnits(const std::vector<AlgebraData>& factors,
                             const TensorElement& x, const std::vector<int>& positions) {
    if (positions.size() != x.legs().size())
        throw ShapeMismatch("embedWithUnits: position count mismatch");
    LegList legs;
    for (const auto& a : factors) legs.push_back(a.space);
    TensorElement out(legs, x.field());
    for (const auto& [ix, cx] : x.coeffs()) {
        TensorElement term = TensorElement::scalar(cx);
        size_t k = 0;
        for (size_t l = 0; l < factors.size(); ++l) {
            if (k < positions.size() && positions[k] == static_cast<int>(l)) {
                term = term.tensorWith(
                    TensorElement::basis({factors[l].space}, {ix[k]}, x.field()));
                ++k;
            } else {
                term = term.tensorWith(factors[l].unit);
            }
        }
        out = out + term;
    }
    return out;
}

StructureMap leftMultiplication(const std::vector<AlgebraData>& factors,
                                const TensorElement& x) {
    LegList legs;
    for (const auto& a : factors) legs.push_back(a.space);
    StructureMap f(legs, legs, x.field());
    for (const auto& idx : allIndices(legs)) {
        auto y = TensorElement::basis(legs, idx, x.field());
        f.setColumn(idx, legwiseProduct(factors, x, y));
    }
    return f;
}

std::optional<TensorElement> invertElement(const std::vector<AlgebraData>& factors,
                                           const TensorElement& x) {
    LegList legs;
    for (const auto& a : factors) legs.push_back(a.space);
    long p = x.field();
    auto lmul = leftMultiplication(factors, x).denseMatrix();
    TensorElement unit = legwiseUnit(factors);
    Vector rhs(totalDim(legs), Scalar::zero(p));
    for (const auto& [idx, c] : unit.coeffs()) rhs[flatIndex(legs, idx)] = c;
    auto sol = solveLinear(lmul, rhs);
    if (!sol) return std::nullopt;
    TensorElement inv(legs, p);
    for (size_t f = 0; f < sol->size(); ++f)
        inv.addTerm(unflattenIndex(legs, static_cast<int>(f)), (*sol)[f]);
    // A left inverse in a finite-dimensional algebra is automatically two-sided,
    // but verify both sides anyway to keep the result self-certifying.
    if (legwiseProduct(factors, x, inv) != unit || legwiseProduct(factors, inv, x) != unit)
        return std::nullopt;
    return inv;
}

StructureMap adConjugation(const std::vector<AlgebraData>& factors, const TensorElement& u) {
    auto uinv = invertElement(factors, u);
    if (!uinv) throw NotInvertible("adConjugation: element is not invertible");
    LegList legs;
    for (const auto& a : factors) legs.push_back(a.space);
    StructureMap f(legs, legs, u.field());
    for (const auto& idx : allIndices(legs)) {
        auto x = TensorElement::basis(legs, idx, u.field());
        f.setColumn(idx, legwiseProduct(factors, legwiseProduct(factors, u, x), *uinv));
    }
    return f;
}

}  // namespace hopfyd
