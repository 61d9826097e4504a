/// @file tensor.hpp
/// @brief Sparse elements of tensor products and exact linear maps between them.
///
/// A TensorElement is a finite linear combination of basis tensors of
/// V_1 ⊗ ... ⊗ V_n, stored as a zero-free map from multi-indices (one index per
/// tensor leg, compared lexicographically) to exact scalars.  An element with
/// zero legs is a scalar of the ground field.
///
/// A StructureMap is an exact linear map V_1 ⊗ ... ⊗ V_n → W_1 ⊗ ... ⊗ W_m given
/// by its matrix in the distinguished bases, stored column-wise and zero-free.
/// Multiplication, comultiplication, antipodes, pairings and coactions are all
/// StructureMaps; the usual Hopf-algebra formulas become compositions of these
/// with permutations and partial applications.

#pragma once

#include <map>
#include <vector>

#include "hopfyd/scalar.hpp"
#include "hopfyd/space.hpp"

namespace hopfyd {

/// One basis index per tensor leg; ordered lexicographically by std::map.
using MultiIndex = std::vector<int>;

/// Row-major flat position of a multi-index (leftmost leg most significant).
int flatIndex(const LegList& legs, const MultiIndex& idx);

/// Inverse of flatIndex.
MultiIndex unflattenIndex(const LegList& legs, int flat);

/// Sparse exact element of a tensor product of spaces.
class TensorElement {
public:
    TensorElement(LegList legs, long field) : legs_(std::move(legs)), p_(field) {}

    static TensorElement zero(LegList legs, long field) {
        return TensorElement(std::move(legs), field);
    }
    /// Basis tensor with coefficient one.
    static TensorElement basis(LegList legs, const MultiIndex& idx, long field);
    /// Ground-field scalar as a zero-leg element.
    static TensorElement scalar(const Scalar& value);

    const LegList& legs() const { return legs_; }
    long field() const { return p_; }
    const std::map<MultiIndex, Scalar>& coeffs() const { return coeffs_; }

    bool isZero() const { return coeffs_.empty(); }
    /// Coefficient of a basis tensor (zero if absent).
    Scalar coeff(const MultiIndex& idx) const;
    /// Add value to the coefficient of idx, dropping exact zeros.
    void addTerm(const MultiIndex& idx, const Scalar& value);

    /// Value of a zero-leg element as a scalar.
    Scalar asScalar() const;

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator-() const;
    TensorElement scale(const Scalar& c) const;

    /// Tensor product: legs are concatenated left-to-right.
    TensorElement tensorWith(const TensorElement& o) const;

    /// Reorder legs: output leg j is input leg perm[j].
    TensorElement permuteLegs(const std::vector<int>& perm) const;

    /// Exact equality of coefficients (shapes must agree).
    bool operator==(const TensorElement& o) const;
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    /// Deterministic display, terms in lexicographic multi-index order.
    std::string str() const;

private:
    LegList legs_;
    long p_;
    std::map<MultiIndex, Scalar> coeffs_;
};

/// Exact linear map between tensor products, stored column-wise and zero-free.
class StructureMap {
public:
    StructureMap(LegList dom, LegList cod, long field)
        : dom_(std::move(dom)), cod_(std::move(cod)), p_(field) {}

    const LegList& dom() const { return dom_; }
    const LegList& cod() const { return cod_; }
    long field() const { return p_; }

    /// Matrix entry <e_cod | f e_dom>.
    Scalar entry(const MultiIndex& codIdx, const MultiIndex& domIdx) const;
    void addEntry(const MultiIndex& codIdx, const MultiIndex& domIdx, const Scalar& value);
    /// Image of the basis tensor at domIdx.
    TensorElement column(const MultiIndex& domIdx) const;
    void setColumn(const MultiIndex& domIdx, const TensorElement& value);

    static StructureMap identity(const LegList& legs, long field);
    /// Leg permutation as a map: output leg j carries input leg perm[j].
    static StructureMap permutation(const LegList& legs, const std::vector<int>& perm,
                                    long field);
    /// The map k -> V sending 1 to the given element.
    static StructureMap fromElement(const TensorElement& v);

    /// Apply to an element whose legs match the domain.
    TensorElement apply(const TensorElement& x) const;
    /// Composition this ∘ g.
    StructureMap compose(const StructureMap& g) const;
    /// Tensor product of maps, this ⊗ g.
    StructureMap tensorWith(const StructureMap& g) const;
    /// id_{pre} ⊗ this ⊗ id_{post}.
    StructureMap embed(const LegList& pre, const LegList& post) const;

    StructureMap operator+(const StructureMap& o) const;
    StructureMap operator-(const StructureMap& o) const;
    StructureMap scale(const Scalar& c) const;

    /// Plain matrix transpose (domain and codomain legs swap).
    StructureMap transposed() const;

    bool operator==(const StructureMap& o) const;
    bool operator!=(const StructureMap& o) const { return !(*this == o); }

    /// Dense column-major matrix, rows indexed by flattened codomain.
    std::vector<std::vector<Scalar>> denseMatrix() const;

    /// Iterate stored columns in lexicographic domain order.
    const std::map<MultiIndex, std::map<MultiIndex, Scalar>>& columns() const {
        return cols_;
    }

private:
    LegList dom_, cod_;
    long p_;
    /// cols_[domIdx][codIdx] = entry, all entries nonzero.
    std::map<MultiIndex, std::map<MultiIndex, Scalar>> cols_;
};

/// All multi-indices of a leg list in lexicographic order.
std::vector<MultiIndex> allIndices(const LegList& legs);

/// Single space whose basis enumerates the basis tensors of a leg list in
/// lexicographic order, with labels joined by `sep`.
SpacePtr flattenedSpace(const std::string& name, const LegList& legs,
                        const std::string& sep = "#");

/// The canonical isomorphism legs -> {flat} matching flattenedSpace's order.
StructureMap flattenIso(const LegList& legs, const SpacePtr& flat, long field);

}  // namespace hopfyd
