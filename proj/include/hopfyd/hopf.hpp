/// @file hopf.hpp
/// @brief Hopf algebras by structure constants: axioms, duals, op/cop variants.
///
/// A HopfAlgebraData bundles an algebra (m, 1) with a coalgebra (Δ, ε) and an
/// antipode S, all as exact structure maps on a common space.  The inverse of
/// the antipode is computed once at construction, since the constructions in
/// this library (coadjoint actions, anti-isomorphisms, twisted doubles) use
/// S⁻¹ as freely as S.

#pragma once

#include <optional>
#include <string>

#include "hopfyd/algebra.hpp"
#include "hopfyd/checks.hpp"

namespace hopfyd {

/// Thrown when a construction needs an antipode that does not exist.
struct AntipodeNotFound : std::runtime_error {
    explicit AntipodeNotFound(const std::string& what) : std::runtime_error(what) {}
};

class HopfAlgebraData {
public:
    /// Build from structure maps; computes S⁻¹ (throws NotInvertible if S is
    /// singular).  Does not verify the axioms — call verifyHopfAxioms.
    static HopfAlgebraData make(AlgebraData alg, StructureMap comult, StructureMap counit,
                                StructureMap antipode);

    const SpacePtr& space() const { return alg_.space; }
    long field() const { return alg_.field(); }
    const AlgebraData& algebra() const { return alg_; }
    const StructureMap& mult() const { return alg_.mult; }
    const TensorElement& unit() const { return alg_.unit; }
    const StructureMap& comult() const { return comult_; }
    const StructureMap& counit() const { return counit_; }
    const StructureMap& antipode() const { return antipode_; }
    const StructureMap& antipodeInverse() const { return antipodeInv_; }

    TensorElement product(const TensorElement& x, const TensorElement& y) const {
        return alg_.product(x, y);
    }

    /// Iterated coproduct with n output legs (n >= 1); n = 1 is the identity.
    StructureMap iteratedComult(int n) const;

    /// Dual Hopf algebra on the dual basis (structure constants transposed).
    HopfAlgebraData dual() const;
    /// Opposite multiplication; the antipode becomes S⁻¹.
    HopfAlgebraData opposite() const;
    /// Opposite comultiplication; the antipode becomes S⁻¹.
    HopfAlgebraData coopposite() const;
    /// Both reversed; the antipode stays S.
    HopfAlgebraData oppositeCoopposite() const;

private:
    HopfAlgebraData(AlgebraData alg, StructureMap comult, StructureMap counit,
                    StructureMap antipode, StructureMap antipodeInv)
        : alg_(std::move(alg)),
          comult_(std::move(comult)),
          counit_(std::move(counit)),
          antipode_(std::move(antipode)),
          antipodeInv_(std::move(antipodeInv)) {}

    AlgebraData alg_;
    StructureMap comult_, counit_, antipode_, antipodeInv_;
};

/// All Hopf axioms, exhaustively on basis elements: algebra laws, coalgebra
/// laws, bialgebra compatibilities, antipode convolution laws.
Report verifyHopfAxioms(const HopfAlgebraData& h, const std::string& suite = "hopf");

/// Solve the convolution equations m(S ⊗ id)Δ = 1ε = m(id ⊗ S)Δ for S on a
/// bialgebra given by (alg, comult, counit); nullopt when no antipode exists.
std::optional<StructureMap> solveAntipode(const AlgebraData& alg, const StructureMap& comult,
                                          const StructureMap& counit);

/// Bialgebra-morphism laws plus compatibility with the antipodes.
Report verifyHopfMorphism(const HopfAlgebraData& dom, const HopfAlgebraData& cod,
                          const StructureMap& f);

/// Transpose of T : H → H' as a map between the dual spaces (Ĥ' → Ĥ).
StructureMap transposeMorphism(const StructureMap& t, const SpacePtr& dualDom,
                               const SpacePtr& dualCod);

}  // namespace hopfyd
