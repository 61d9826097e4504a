/// @file algebra.hpp
/// @brief Unital associative algebras by structure constants, and leg-wise
///        arithmetic in tensor products of algebras.
///
/// An AlgebraData is a space A together with the multiplication map
/// m : A ⊗ A → A and the unit element 1 ∈ A.  Lists of algebras act as tensor
/// product algebras: elements with one leg per factor multiply component-wise,
/// which is exactly what expressions like U (g ⊗ ω) U⁻¹ require.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfyd/report.hpp"
#include "hopfyd/tensor.hpp"

namespace hopfyd {

struct AlgebraData {
    SpacePtr space;
    StructureMap mult;   ///< A ⊗ A → A
    TensorElement unit;  ///< 1 ∈ A

    AlgebraData(SpacePtr s, StructureMap m, TensorElement u)
        : space(std::move(s)), mult(std::move(m)), unit(std::move(u)) {}

    long field() const { return mult.field(); }

    /// Product of two single-leg elements of this algebra.
    TensorElement product(const TensorElement& x, const TensorElement& y) const {
        return mult.apply(x.tensorWith(y));
    }

    /// Same space with reversed multiplication.
    AlgebraData opposite() const;
};

/// Associativity and two-sided unit law; exhaustive over basis tuples.
Report verifyAlgebra(const AlgebraData& a, const std::string& suite = "algebra");

/// f(xy) = f(x)f(y) and f(1) = 1 for f a map between the algebras' spaces.
Report verifyAlgebraMorphism(const AlgebraData& dom, const AlgebraData& cod,
                             const StructureMap& f);

/// Component-wise product in the tensor product algebra A_1 ⊗ ... ⊗ A_n.
TensorElement legwiseProduct(const std::vector<AlgebraData>& factors,
                             const TensorElement& x, const TensorElement& y);

/// Unit 1 ⊗ ... ⊗ 1 of the tensor product algebra.
TensorElement legwiseUnit(const std::vector<AlgebraData>& factors);

/// Place the legs of x at the given positions (strictly increasing) among the
/// factors, filling the remaining legs with units: the usual U_{13}-style
/// embeddings of multi-leg elements.
TensorElement embedWithUnits(const std::vector<AlgebraData>& factors,
                             const TensorElement& x, const std::vector<int>& positions);

/// Two-sided inverse in the tensor product algebra, or nullopt.
std::optional<TensorElement> invertElement(const std::vector<AlgebraData>& factors,
                                           const TensorElement& x);

/// Conjugation x ↦ u x u⁻¹ as a structure map on the tensor product algebra.
/// Throws NotInvertible if u has no inverse.
StructureMap adConjugation(const std::vector<AlgebraData>& factors, const TensorElement& u);

/// Left multiplication by x as a matrix acting on the flattened product algebra.
StructureMap leftMultiplication(const std::vector<AlgebraData>& factors,
                                const TensorElement& x);

}  // namespace hopfyd
