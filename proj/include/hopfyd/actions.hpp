/// @file actions.hpp
/// @brief Module/comodule algebras, adjoint and coadjoint actions, conversion
///        between actions and coactions along a pairing, and smash products.

#pragma once

#include "hopfyd/pairing.hpp"

namespace hopfyd {

/// Thrown by coactionFromInvertible when W fails its coproduct condition.
struct CocycleConditionFailed : std::runtime_error {
    explicit CocycleConditionFailed(const std::string& what) : std::runtime_error(what) {}
};

enum class Side { Left, Right };

/// Module laws for an action of H on the space of X: associativity of the
/// action and unitality; with `algebraCompat`, also the module-algebra laws
/// h ▷ (xy) = (h₍₁₎ ▷ x)(h₍₂₎ ▷ y) and h ▷ 1 = ε(h) 1 (mirrored on the right).
/// Left actions are maps H ⊗ X → X, right actions X ⊗ H → X.
Report verifyModuleAlgebra(const HopfAlgebraData& h, const AlgebraData& x,
                           const StructureMap& act, Side side, bool algebraCompat = true);

/// Comodule laws for a coaction of H on X: coassociativity with Δ and the
/// counit law; the counit law is also cross-checked against injectivity of the
/// coaction (they are equivalent).  With `algebraCompat`, also the comodule-
/// algebra laws α(xy) = α(x)α(y) and α(1) = 1 ⊗ 1.  Left coactions are maps
/// X → H ⊗ X, right coactions X → X ⊗ H.
Report verifyComoduleAlgebra(const HopfAlgebraData& h, const AlgebraData& x,
                             const StructureMap& coact, Side side,
                             bool algebraCompat = true);

/// Adjoint actions of H on itself: h ▷ g = h₍₁₎ g S(h₍₂₎)  (H ⊗ H → H).
StructureMap leftAdjointAction(const HopfAlgebraData& h);
/// g ◁ h = S(h₍₁₎) g h₍₂₎  (H ⊗ H → H, first leg the acted-on g).
StructureMap rightAdjointAction(const HopfAlgebraData& h);

/// Coadjoint actions of the left factor on the right factor of a pairing:
/// h ▷ ω = h₍₁₎ ▶ ω ◀ S⁻¹(h₍₂₎)  (H ⊗ H' → H').
StructureMap leftCoadjointAction(const Pairing& p);
/// ω ◁ h = S⁻¹(h₍₁₎) ▶ ω ◀ h₍₂₎  (H' ⊗ H → H').
StructureMap rightCoadjointAction(const Pairing& p);

/// Left action of H induced by a right H'-coaction β : X → X ⊗ H':
/// h ▷ x = (id ⊗ p(h, ·)) β(x).
StructureMap leftActionFromRightCoaction(const Pairing& p, const StructureMap& beta);
/// Right H'-coaction induced by a left H-action: β(x) = (U₁ ▷ x) ⊗ U₂.
StructureMap rightCoactionFromLeftAction(const Pairing& p, const StructureMap& act);
/// Right action of H induced by a left H'-coaction β : X → H' ⊗ X:
/// x ◁ h = (p(h, ·) ⊗ id) β(x).
StructureMap rightActionFromLeftCoaction(const Pairing& p, const StructureMap& beta);
/// Left H'-coaction induced by a right H-action: β(x) = U₂ ⊗ (x ◁ U₁).
StructureMap leftCoactionFromRightAction(const Pairing& p, const StructureMap& act);

/// Coaction implemented by conjugation with an invertible W.  Left case:
/// W ∈ H ⊗ X with (Δ ⊗ id)W = W₂₃ W₁₃ gives α(x) = W (1 ⊗ x) W⁻¹ : X → H ⊗ X.
/// Right case: W ∈ X ⊗ H with (id ⊗ Δ)W = W₁₂ W₁₃ gives α(x) = W (x ⊗ 1) W⁻¹.
/// Throws CocycleConditionFailed if the coproduct condition fails, and
/// NotInvertible if W is not invertible.
StructureMap coactionFromInvertible(const HopfAlgebraData& h, const AlgebraData& x,
                                    const TensorElement& w, Side side);

/// Smash product X # H of a left H-module algebra X:
/// (x # h)(y # h') = x (h₍₁₎ ▷ y) # h₍₂₎ h', unit 1 # 1.
struct SmashProduct {
    AlgebraData algebra;      ///< on the flattened space X # H
    StructureMap inclModule;  ///< X → X # H, x ↦ x # 1
    StructureMap inclHopf;    ///< H → X # H, h ↦ 1 # h
    StructureMap fromPair;    ///< iso X ⊗ H → X # H of underlying spaces
};
SmashProduct smashProduct(const HopfAlgebraData& h, const AlgebraData& x,
                          const StructureMap& act, const std::string& name);

/// Round trips action -> induced coaction -> action for both handednesses.
Report verifyActionCoactionRoundTrips(const Pairing& p, const StructureMap& leftAction,
                                      const StructureMap& rightAction);
/// Round trips coaction -> induced action -> coaction for both handednesses.
Report verifyCoactionActionRoundTrips(const Pairing& p, const StructureMap& rightCoaction,
                                      const StructureMap& leftCoaction);

}  // namespace hopfyd
