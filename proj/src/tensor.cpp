#include "hopfyd/tensor.hpp"

#include <sstream>

namespace hopfyd {

int flatIndex(const LegList& legs, const MultiIndex& idx) {
    if (idx.size() != legs.size()) throw ShapeMismatch("flatIndex: arity mismatch");
    int flat = 0;
    for (size_t i = 0; i < legs.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= legs[i]->dim())
            throw ShapeMismatch("flatIndex: index out of range");
        flat = flat * legs[i]->dim() + idx[i];
    }
    return flat;
}

MultiIndex unflattenIndex(const LegList& legs, int flat) {
    MultiIndex idx(legs.size(), 0);
    for (size_t i = legs.size(); i-- > 0;) {
        idx[i] = flat % legs[i]->dim();
        flat /= legs[i]->dim();
    }
    return idx;
}

std::vector<MultiIndex> allIndices(const LegList& legs) {
    int n = totalDim(legs);
    std::vector<MultiIndex> out;
    out.reserve(n);
    for (int f = 0; f < n; ++f) out.push_back(unflattenIndex(legs, f));
    return out;
}

// ---------------------------------------------------------------------------
// TensorElement
// ---------------------------------------------------------------------------

TensorElement TensorElement::basis(LegList legs, const MultiIndex& idx, long field) {
    TensorElement x(std::move(legs), field);
    if (idx.size() != x.legs_.size()) throw ShapeMismatch("basis: arity mismatch");
    for (size_t i = 0; i < idx.size(); ++i)
        if (idx[i] < 0 || idx[i] >= x.legs_[i]->dim())
            throw ShapeMismatch("basis: index out of range");
    x.coeffs_[idx] = Scalar::one(field);
    return x;
}

TensorElement TensorElement::scalar(const Scalar& value) {
    TensorElement x({}, value.field());
    if (!value.isZero()) x.coeffs_[{}] = value;
    return x;
}

Scalar TensorElement::coeff(const MultiIndex& idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? Scalar::zero(p_) : it->second;
}

void TensorElement::addTerm(const MultiIndex& idx, const Scalar& value) {
    if (idx.size() != legs_.size()) throw ShapeMismatch("addTerm: arity mismatch");
    if (value.isZero()) return;
    auto [it, inserted] = coeffs_.try_emplace(idx, value);
    if (!inserted) {
        it->second += value;
        if (it->second.isZero()) coeffs_.erase(it);
    }
}

Scalar TensorElement::asScalar() const {
    if (!legs_.empty()) throw ShapeMismatch("asScalar: element has tensor legs");
    return coeff({});
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    requireSameShape(legs_, o.legs_, "add");
    TensorElement r(*this);
    for (const auto& [idx, c] : o.coeffs_) r.addTerm(idx, c);
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const { return *this + (-o); }

TensorElement TensorElement::operator-() const {
    TensorElement r(legs_, p_);
    for (const auto& [idx, c] : coeffs_) r.coeffs_[idx] = -c;
    return r;
}

TensorElement TensorElement::scale(const Scalar& c) const {
    TensorElement r(legs_, p_);
    if (c.isZero()) return r;
    for (const auto& [idx, v] : coeffs_) r.coeffs_[idx] = v * c;
    return r;
}

TensorElement TensorElement::tensorWith(const TensorElement& o) const {
    LegList legs = legs_;
    legs.insert(legs.end(), o.legs_.begin(), o.legs_.end());
    TensorElement r(std::move(legs), p_);
    for (const auto& [ia, ca] : coeffs_)
        for (const auto& [ib, cb] : o.coeffs_) {
            MultiIndex idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.coeffs_[std::move(idx)] = ca * cb;
        }
    return r;
}

TensorElement TensorElement::permuteLegs(const std::vector<int>& perm) const {
    if (perm.size() != legs_.size()) throw ShapeMismatch("permuteLegs: arity mismatch");
    LegList legs(perm.size());
    for (size_t j = 0; j < perm.size(); ++j) legs[j] = legs_[perm[j]];
    TensorElement r(std::move(legs), p_);
    for (const auto& [idx, c] : coeffs_) {
        MultiIndex out(perm.size());
        for (size_t j = 0; j < perm.size(); ++j) out[j] = idx[perm[j]];
        r.coeffs_[std::move(out)] = c;
    }
    return r;
}

bool TensorElement::operator==(const TensorElement& o) const {
    requireSameShape(legs_, o.legs_, "compare");
    return p_ == o.p_ && coeffs_ == o.coeffs_;
}

std::string TensorElement::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t i = 0; i < idx.size(); ++i) {
            os << (i == 0 ? "*" : "⊗") << legs_[i]->basisLabels[idx[i]];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// StructureMap
// ---------------------------------------------------------------------------

Scalar StructureMap::entry(const MultiIndex& codIdx, const MultiIndex& domIdx) const {
    auto c = cols_.find(domIdx);
    if (c == cols_.end()) return Scalar::zero(p_);
    auto e = c->second.find(codIdx);
    return e == c->second.end() ? Scalar::zero(p_) : e->second;
}

void StructureMap::addEntry(const MultiIndex& codIdx, const MultiIndex& domIdx,
                            const Scalar& value) {
    if (value.isZero()) return;
    auto& col = cols_[domIdx];
    auto [it, inserted] = col.try_emplace(codIdx, value);
    if (!inserted) {
        it->second += value;
        if (it->second.isZero()) {
            col.erase(it);
            if (col.empty()) cols_.erase(domIdx);
        }
    }
}

TensorElement StructureMap::column(const MultiIndex& domIdx) const {
    TensorElement v(cod_, p_);
    auto c = cols_.find(domIdx);
    if (c != cols_.end())
        for (const auto& [codIdx, s] : c->second) v.addTerm(codIdx, s);
    return v;
}

void StructureMap::setColumn(const MultiIndex& domIdx, const TensorElement& value) {
    requireSameShape(cod_, value.legs(), "setColumn");
    cols_.erase(domIdx);
    for (const auto& [codIdx, s] : value.coeffs()) cols_[domIdx][codIdx] = s;
}

StructureMap StructureMap::identity(const LegList& legs, long field) {
    StructureMap f(legs, legs, field);
    for (const auto& idx : allIndices(legs)) f.cols_[idx][idx] = Scalar::one(field);
    return f;
}

StructureMap StructureMap::permutation(const LegList& legs, const std::vector<int>& perm,
                                       long field) {
    if (perm.size() != legs.size()) throw ShapeMismatch("permutation: arity mismatch");
    LegList cod(perm.size());
    for (size_t j = 0; j < perm.size(); ++j) cod[j] = legs[perm[j]];
    StructureMap f(legs, std::move(cod), field);
    for (const auto& idx : allIndices(legs)) {
        MultiIndex out(perm.size());
        for (size_t j = 0; j < perm.size(); ++j) out[j] = idx[perm[j]];
        f.cols_[idx][std::move(out)] = Scalar::one(field);
    }
    return f;
}

StructureMap StructureMap::fromElement(const TensorElement& v) {
    StructureMap f({}, v.legs(), v.field());
    for (const auto& [idx, c] : v.coeffs()) f.cols_[{}][idx] = c;
    return f;
}

TensorElement StructureMap::apply(const TensorElement& x) const {
    requireSameShape(dom_, x.legs(), "apply");
    TensorElement r(cod_, p_);
    for (const auto& [idx, c] : x.coeffs()) {
        auto col = cols_.find(idx);
        if (col == cols_.end()) continue;
        for (const auto& [codIdx, s] : col->second) r.addTerm(codIdx, s * c);
    }
    return r;
}

StructureMap StructureMap::compose(const StructureMap& g) const {
    requireSameShape(dom_, g.cod_, "compose");
    StructureMap r(g.dom_, cod_, p_);
    for (const auto& [d, gcol] : g.cols_)
        for (const auto& [m, s] : gcol) {
            auto fcol = cols_.find(m);
            if (fcol == cols_.end()) continue;
            for (const auto& [c, t] : fcol->second) r.addEntry(c, d, t * s);
        }
    return r;
}

StructureMap StructureMap::tensorWith(const StructureMap& g) const {
    LegList dom = dom_, cod = cod_;
    dom.insert(dom.end(), g.dom_.begin(), g.dom_.end());
    cod.insert(cod.end(), g.cod_.begin(), g.cod_.end());
    StructureMap r(std::move(dom), std::move(cod), p_);
    for (const auto& [da, cola] : cols_)
        for (const auto& [db, colb] : g.cols_) {
            MultiIndex d = da;
            d.insert(d.end(), db.begin(), db.end());
            auto& out = r.cols_[d];
            for (const auto& [ca, sa] : cola)
                for (const auto& [cb, sb] : colb) {
                    MultiIndex c = ca;
                    c.insert(c.end(), cb.begin(), cb.end());
                    out[std::move(c)] = sa * sb;
                }
        }
    return r;
}

StructureMap StructureMap::embed(const LegList& pre, const LegList& post) const {
    StructureMap f = *this;
    if (!pre.empty()) f = identity(pre, p_).tensorWith(f);
    if (!post.empty()) f = f.tensorWith(identity(post, p_));
    return f;
}

StructureMap StructureMap::operator+(const StructureMap& o) const {
    requireSameShape(dom_, o.dom_, "map add (dom)");
    requireSameShape(cod_, o.cod_, "map add (cod)");
    StructureMap r = *this;
    for (const auto& [d, col] : o.cols_)
        for (const auto& [c, s] : col) r.addEntry(c, d, s);
    return r;
}

StructureMap StructureMap::operator-(const StructureMap& o) const {
    return *this + o.scale(-Scalar::one(p_));
}

StructureMap StructureMap::scale(const Scalar& c) const {
    StructureMap r(dom_, cod_, p_);
    if (c.isZero()) return r;
    for (const auto& [d, col] : cols_)
        for (const auto& [ci, s] : col) r.cols_[d][ci] = s * c;
    return r;
}

StructureMap StructureMap::transposed() const {
    StructureMap r(cod_, dom_, p_);
    for (const auto& [d, col] : cols_)
        for (const auto& [c, s] : col) r.cols_[c][d] = s;
    return r;
}

bool StructureMap::operator==(const StructureMap& o) const {
    requireSameShape(dom_, o.dom_, "map compare (dom)");
    requireSameShape(cod_, o.cod_, "map compare (cod)");
    return p_ == o.p_ && cols_ == o.cols_;
}

std::vector<std::vector<Scalar>> StructureMap::denseMatrix() const {
    int rows = totalDim(cod_), cols = totalDim(dom_);
    std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols, Scalar::zero(p_)));
    for (const auto& [d, col] : cols_) {
        int j = flatIndex(dom_, d);
        for (const auto& [c, s] : col) m[flatIndex(cod_, c)][j] = s;
    }
    return m;
}

SpacePtr flattenedSpace(const std::string& name, const LegList& legs,
                        const std::string& sep) {
    std::vector<std::string> labels;
    labels.reserve(totalDim(legs));
    for (const auto& idx : allIndices(legs)) {
        std::string l;
        for (size_t i = 0; i < idx.size(); ++i) {
            if (i) l += sep;
            l += legs[i]->basisLabels[idx[i]];
        }
        labels.push_back(std::move(l));
    }
    return Space::make(name, std::move(labels));
}

StructureMap flattenIso(const LegList& legs, const SpacePtr& flat, long field) {
    if (flat->dim() != totalDim(legs)) throw ShapeMismatch("flattenIso: dimension mismatch");
    StructureMap f(legs, {flat}, field);
    for (const auto& idx : allIndices(legs))
        f.addEntry({flatIndex(legs, idx)}, idx, Scalar::one(field));
    return f;
}

}  // namespace hopfyd
