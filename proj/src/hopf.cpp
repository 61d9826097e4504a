#include "hopfyd/hopf.hpp"

#include "hopfyd/linsolve.hpp"

namespace hopfyd {

namespace {

SpacePtr dualSpace(const SpacePtr& v) {
    // Dualizing toggles a trailing "^" so that the double dual reuses the
    // original names and emitted files of H^^ match those of H byte for byte.
    auto toggle = [](const std::string& s) {
        if (!s.empty() && s.back() == '^') return s.substr(0, s.size() - 1);
        return s + "^";
    };
    std::vector<std::string> labels;
    labels.reserve(v->dim());
    for (const auto& l : v->basisLabels) labels.push_back(toggle(l));
    return Space::make(toggle(v->name), std::move(labels));
}

StructureMap mapFromMatrix(const LegList& dom, const LegList& cod,
                           const std::vector<std::vector<Scalar>>& m, long field) {
    StructureMap f(dom, cod, field);
    for (size_t r = 0; r < m.size(); ++r)
        for (size_t c = 0; c < m[r].size(); ++c)
            f.addEntry(unflattenIndex(cod, static_cast<int>(r)),
                       unflattenIndex(dom, static_cast<int>(c)), m[r][c]);
    return f;
}

}  // namespace

HopfAlgebraData HopfAlgebraData::make(AlgebraData alg, StructureMap comult,
                                      StructureMap counit, StructureMap antipode) {
    auto inv = inverseMatrix(antipode.denseMatrix());
    if (!inv) throw NotInvertible("hopf: antipode matrix is singular");
    StructureMap antipodeInv =
        mapFromMatrix(antipode.cod(), antipode.dom(), *inv, antipode.field());
    return HopfAlgebraData(std::move(alg), std::move(comult), std::move(counit),
                           std::move(antipode), std::move(antipodeInv));
}

StructureMap HopfAlgebraData::iteratedComult(int n) const {
    LegList one{space()};
    if (n < 1) throw std::invalid_argument("iteratedComult: n must be >= 1");
    StructureMap d = StructureMap::identity(one, field());
    for (int k = 2; k <= n; ++k) {
        LegList rest(static_cast<size_t>(k - 2), space());
        d = comult_.embed({}, rest).compose(d);
    }
    return d;
}

HopfAlgebraData HopfAlgebraData::dual() const {
    SpacePtr vh = dualSpace(space());
    long p = field();
    LegList one{vh}, two{vh, vh};

    StructureMap mult(two, one, p);
    for (const auto& [d, col] : comult_.columns())
        for (const auto& [c, s] : col) mult.addEntry(d, c, s);

    StructureMap comult(one, two, p);
    for (const auto& [d, col] : alg_.mult.columns())
        for (const auto& [c, s] : col) comult.addEntry(d, c, s);

    TensorElement unit(one, p);
    for (const auto& [d, col] : counit_.columns()) {
        auto it = col.find(MultiIndex{});
        if (it != col.end()) unit.addTerm(d, it->second);
    }

    StructureMap counit(one, {}, p);
    for (const auto& [idx, c] : alg_.unit.coeffs()) counit.addEntry({}, idx, c);

    StructureMap antipode(one, one, p);
    for (const auto& [d, col] : antipode_.columns())
        for (const auto& [c, s] : col) antipode.addEntry(d, c, s);

    return make(AlgebraData(vh, std::move(mult), std::move(unit)), std::move(comult),
                std::move(counit), std::move(antipode));
}

HopfAlgebraData HopfAlgebraData::opposite() const {
    return make(alg_.opposite(), comult_, counit_, antipodeInv_);
}

HopfAlgebraData HopfAlgebraData::coopposite() const {
    LegList two{space(), space()};
    StructureMap flip = StructureMap::permutation(two, {1, 0}, field());
    return make(alg_, flip.compose(comult_), counit_, antipodeInv_);
}

HopfAlgebraData HopfAlgebraData::oppositeCoopposite() const {
    LegList two{space(), space()};
    StructureMap flip = StructureMap::permutation(two, {1, 0}, field());
    return make(alg_.opposite(), flip.compose(comult_), counit_, antipode_);
}

Report verifyHopfAxioms(const HopfAlgebraData& h, const std::string& suite) {
    Report rep{suite, {}};
    long p = h.field();
    LegList one{h.space()}, two{h.space(), h.space()};
    const auto& m = h.mult();
    const auto& dl = h.comult();
    const auto& eps = h.counit();
    const auto& s = h.antipode();
    StructureMap id = StructureMap::identity(one, p);
    StructureMap u = StructureMap::fromElement(h.unit());
    StructureMap flipMid =
        StructureMap::permutation({h.space(), h.space(), h.space(), h.space()},
                                  {0, 2, 1, 3}, p);

    rep.add(checkMapEqual("associative", m.compose(m.embed({}, one)),
                          m.compose(m.embed(one, {}))));
    rep.add(checkMapEqual("unit-left", m.compose(u.embed({}, one)), id));
    rep.add(checkMapEqual("unit-right", m.compose(u.embed(one, {})), id));
    rep.add(checkMapEqual("coassociative", dl.embed({}, one).compose(dl),
                          dl.embed(one, {}).compose(dl)));
    rep.add(checkMapEqual("counit-left", eps.embed({}, one).compose(dl), id));
    rep.add(checkMapEqual("counit-right", eps.embed(one, {}).compose(dl), id));
    rep.add(checkMapEqual("comult-multiplicative", dl.compose(m),
                          m.tensorWith(m).compose(flipMid).compose(dl.tensorWith(dl))));
    rep.add("comult-unit", dl.apply(h.unit()) == h.unit().tensorWith(h.unit()),
            "Δ(1) != 1⊗1");
    rep.add(checkMapEqual("counit-multiplicative", eps.compose(m), eps.tensorWith(eps)));
    rep.add("counit-unit", eps.apply(h.unit()).asScalar() == Scalar::one(p), "ε(1) != 1");
    StructureMap convUnit = u.compose(eps);
    rep.add(checkMapEqual("antipode-left", m.compose(s.embed({}, one)).compose(dl),
                          convUnit));
    rep.add(checkMapEqual("antipode-right", m.compose(s.embed(one, {})).compose(dl),
                          convUnit));
    return rep;
}

std::optional<StructureMap> solveAntipode(const AlgebraData& alg, const StructureMap& comult,
                                          const StructureMap& counit) {
    const SpacePtr& v = alg.space;
    long p = alg.field();
    int n = v->dim();
    LegList one{v};
    // Unknowns S[m][i] indexed flat as m*n + i; one equation per (input d, output k).
    Matrix a(static_cast<size_t>(n) * n, Vector(static_cast<size_t>(n) * n, Scalar::zero(p)));
    Vector b(static_cast<size_t>(n) * n, Scalar::zero(p));
    for (int d = 0; d < n; ++d) {
        Scalar epsd = counit.entry({}, {d});
        for (int k = 0; k < n; ++k)
            b[static_cast<size_t>(d) * n + k] = epsd * alg.unit.coeff({k});
        auto col = comult.columns().find({d});
        if (col == comult.columns().end()) continue;
        for (const auto& [ij, cd] : col->second) {
            int i = ij[0], j = ij[1];
            for (int mm = 0; mm < n; ++mm) {
                auto mcol = alg.mult.columns().find({mm, j});
                if (mcol == alg.mult.columns().end()) continue;
                for (const auto& [kk, cm] : mcol->second)
                    a[static_cast<size_t>(d) * n + kk[0]][static_cast<size_t>(mm) * n + i] +=
                        cd * cm;
            }
        }
    }
    auto sol = solveLinear(a, b);
    if (!sol) return std::nullopt;
    StructureMap s(one, one, p);
    for (int mm = 0; mm < n; ++mm)
        for (int i = 0; i < n; ++i) s.addEntry({mm}, {i}, (*sol)[static_cast<size_t>(mm) * n + i]);
    // Verify both convolution laws; a one-sided solution that fails the other
    // side means no antipode exists.
    StructureMap u = StructureMap::fromElement(alg.unit);
    StructureMap convUnit = u.compose(counit);
    if (!checkMapEqual("l", alg.mult.compose(s.embed({}, one)).compose(comult), convUnit).pass)
        return std::nullopt;
    if (!checkMapEqual("r", alg.mult.compose(s.embed(one, {})).compose(comult), convUnit).pass)
        return std::nullopt;
    return s;
}

Report verifyHopfMorphism(const HopfAlgebraData& dom, const HopfAlgebraData& cod,
                          const StructureMap& f) {
    Report rep{"hopf-morphism", {}};
    rep.merge(verifyAlgebraMorphism(dom.algebra(), cod.algebra(), f));
    rep.add(checkMapEqual("comultiplicative", cod.comult().compose(f),
                          f.tensorWith(f).compose(dom.comult())));
    rep.add(checkMapEqual("counit-compatible", cod.counit().compose(f), dom.counit()));
    rep.add(checkMapEqual("antipode-compatible", cod.antipode().compose(f),
                          f.compose(dom.antipode())));
    return rep;
}

StructureMap transposeMorphism(const StructureMap& t, const SpacePtr& dualDom,
                               const SpacePtr& dualCod) {
    if (t.dom().size() != 1 || t.cod().size() != 1)
        throw ShapeMismatch("transposeMorphism: expects single-leg maps");
    if (dualDom->dim() != t.dom()[0]->dim() || dualCod->dim() != t.cod()[0]->dim())
        throw ShapeMismatch("transposeMorphism: dual space dimension mismatch");
    StructureMap r({dualCod}, {dualDom}, t.field());
    for (const auto& [d, col] : t.columns())
        for (const auto& [c, s] : col) r.addEntry(d, c, s);
    return r;
}

}  // namespace hopfyd
