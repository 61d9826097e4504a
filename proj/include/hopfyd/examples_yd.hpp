/// @file examples_yd.hpp
/// @brief Concrete Yetter–Drinfeld algebras: trivial families, adjoint
///        instances, coideal subalgebras, and the Heisenberg double as a
///        Yetter–Drinfeld algebra over the Drinfeld double.
///
/// Mathematical Background
/// -----------------------
/// Three systematic sources of Yetter–Drinfeld algebras are constructed here.
/// First the trivial families: the trivial action ε(h)x with the trivial
/// coaction works over any Hopf algebra, the trivial action pairs with an
/// arbitrary coaction exactly when H is commutative, and dually an arbitrary
/// action pairs with the trivial coaction when H is cocommutative.  Second
/// the adjoint family: H acts on itself by the adjoint action h ▷ g =
/// h₍₁₎ g S(h₍₂₎) and coacts by its coproduct (suitably antipode-twisted per
/// side-variant), with the Ĥ-coactions realized by conjugating with the
/// canonical element U.  Third, for a surjective Hopf morphism π : H → H′,
/// the coinvariant coideal subalgebras I_r = {h : h₍₁₎ ⊗ π(h₍₂₎) = h ⊗ 1} and
/// I_l carry the restricted coproduct and restricted U-conjugation coaction.
/// Finally, the Heisenberg double ℋ(Ĥ) is exhibited as a Yetter–Drinfeld
/// algebra over the Drinfeld double 𝒟(H): conjugation by two canonical-element
/// avatars 𝕍 and 𝕌 inside ℋ(Ĥ) produces a pair of coactions whose combination
/// is a comodule-algebra coaction of the codouble 𝒯(H), inducing the natural
/// 𝒟(H)-action on ℋ(Ĥ).
///
/// Each builder validates its hypotheses and throws on violations; the verify
/// functions re-prove the defining identities exhaustively.

#pragma once

#include "hopfyd/examples.hpp"
#include "hopfyd/yd.hpp"

namespace hopfyd {

/// Thrown when a construction's hypothesis (commutativity, cocommutativity,
/// surjectivity, ...) fails for the given input.
struct HypothesisNotMet : std::runtime_error {
    explicit HypothesisNotMet(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by the coideal construction when the given map is not a Hopf-algebra
/// morphism onto the target.
struct NotAHopfMorphism : std::runtime_error {
    explicit NotAHopfMorphism(const std::string& what) : std::runtime_error(what) {}
};

/// Trivial action ε ⊗ id with trivial coaction x ↦ 1 ⊗ x, any H and X.
StandardYd trivialStandardYd(const HopfAlgebraData& h, const AlgebraData& x, YdVariant v);
/// Both coactions trivial, any pairing and X.
CoactionYd trivialCoactionYd(const Pairing& p, const AlgebraData& x, YdVariant v);

/// Trivial action with an arbitrary coaction; requires H commutative
/// (throws HypothesisNotMet otherwise).
StandardYd trivialYdWithCoaction(const HopfAlgebraData& h, const AlgebraData& x,
                                 const StructureMap& coaction, YdVariant v);
/// Arbitrary action with the trivial coaction; requires H cocommutative.
StandardYd trivialYdWithAction(const HopfAlgebraData& h, const AlgebraData& x,
                               const StructureMap& action, YdVariant v);

/// The adjoint instance in both characterizations: H acting on itself
/// adjointly with a coproduct-derived coaction, and the same carrier with the
/// coproduct and the U-conjugation Ĥ-coaction.
struct AdjointYdPair {
    StandardYd standard;
    CoactionYd coaction;
};
AdjointYdPair adjointYd(const Pairing& p, YdVariant v);

/// The right U-conjugation coaction Ad_r(h) = U (h ⊗ 1) U⁻¹ : H → H ⊗ Ĥ.
StructureMap rightConjugationCoaction(const Pairing& p);
/// The left one Ad_l(h) = Σ(U⁻¹) (1 ⊗ h) Σ(U) : H → Ĥ ⊗ H.
StructureMap leftConjugationCoaction(const Pairing& p);

/// The conjugation coactions slice back to the adjoint actions, and satisfy
/// the canonical-element compatibility squares
/// (Δ ⊗ id) Ad_r = Ad(U₁₃) (id ⊗ Ad_r) Δ and
/// (id ⊗ Δ) Ad_l = Ad(Σ(U)⁻¹₁₃) (Ad_l ⊗ id) Δ.
Report verifyAdjointCoactionIdentities(const Pairing& p);

/// A coideal subalgebra with its inclusion and its Yetter–Drinfeld structure
/// (restricted coproduct plus restricted conjugation coaction).
struct CoidealInstance {
    AlgebraData algebra;      ///< the coideal, on its own echelon basis
    StructureMap inclusion;   ///< I → H
    CoactionYd yd;            ///< lr (right coideal) or rl (left coideal)
};

/// I_r(π) = {h : (id ⊗ π)Δ(h) = h ⊗ 1} with (Δ|, Ad_r|), an lr instance.
/// Throws NotAHopfMorphism if π is not a Hopf morphism H → H′, and
/// HypothesisNotMet if a required containment fails.
CoidealInstance rightCoidealYd(const Pairing& p, const HopfAlgebraData& target,
                               const StructureMap& pi);
/// I_l(π) = {h : (π ⊗ id)Δ(h) = 1 ⊗ h} with (Δ|, Ad_l|), an rl instance.
CoidealInstance leftCoidealYd(const Pairing& p, const HopfAlgebraData& target,
                              const StructureMap& pi);

/// The Heisenberg double ℋ(Ĥ) over the Drinfeld double 𝒟(H): builds the
/// conjugation coactions α (by 𝕍 = Σᵢ (Uᵢ² # 1) ⊗ Uᵢ¹) and β (by
/// 𝕌 = Σᵢ (1 # Uᵢ¹) ⊗ Uᵢ²), verifies their closed one-sided multiplication
/// formulas, the factorization 𝕍₁₂𝕌₁₃ = (L̄₂ ⊗ id)(𝕎) of the canonical
/// element of the 𝒟 × 𝒯 pairing, the rr Yetter–Drinfeld property over
/// (H, Ĥ), the full double equivalence, the closed formula for the induced
/// 𝒟(H)-action, and the lr Yetter–Drinfeld property of (Γ′, Γ) over the
/// pairing 𝒟(H) × 𝒯(H) together with its standard-characterization image.
Report heisenbergOverDouble(const Pairing& p);

/// Empirical braided-commutativity probe for the instance above: returns the
/// outcome of the braided checks for (ℋ(Ĥ), ▷_Γ, Γ′) over 𝒟(H).
bool heisenbergOverDoubleBraided(const Pairing& p);

}  // namespace hopfyd
