/// @file doubles.hpp
/// @brief Heisenberg doubles, Drinfeld doubles and codoubles, 2-cocycle twists.
///
/// Mathematical Background
/// -----------------------
/// The Heisenberg double ℋ(H) is the smash product H # Ĥ along the left
/// regular action θ ▶ h = h₍₁₎ p(h₍₂₎, θ).  The Drinfeld codouble 𝒯(H) is a
/// twisted tensor-product Hopf algebra whose coproduct conjugates the middle
/// legs by a canonical-element avatar; its dual is the Drinfeld double 𝒟(H),
/// which also arises directly as a double crossproduct with an exchange map 𝔗.
/// Three coordinate systems for the same objects are supported (Radford,
/// Majid, Taipe), differing in which tensor factor carries an op/cop twist.
/// A 2-cocycle σ on a Hopf algebra deforms the product to h ·σ h′ =
/// σ(h₍₁₎, h′₍₁₎) h₍₂₎ h′₍₂₎ (or the mirror-image σ-last version); the twist
/// theorems express ℋ(H) and ℋ(Ĥ) as cocycle twists of 𝒯(H) and 𝒟(H) on the
/// same underlying vector space.  Doubles are deliberately built twice — once
/// as the dual of the codouble, once via 𝔗 — and compared entry by entry.

#pragma once

#include "hopfyd/actions.hpp"
#include "hopfyd/pairing.hpp"

namespace hopfyd {

/// Thrown when two independent constructions of the same object disagree.
struct CrossCheckMismatch : std::runtime_error {
    explicit CrossCheckMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a bilinear form fails its 2-cocycle condition.
struct NotACocycle : std::runtime_error {
    explicit NotACocycle(const std::string& what) : std::runtime_error(what) {}
};

/// The three coordinate systems for the double and codouble.
enum class DoubleKind { Radford, Majid, Taipe };

/// Which cocycle condition a bilinear form satisfies.
enum class Chirality { Left, Right };

/// Short tag "R"/"M"/"T" used in space names.
std::string kindTag(DoubleKind kind);

/// ℋ(H) = H # Ĥ, the smash product along the left regular action of Ĥ on H:
/// (h # θ)(h′ # θ′) = h (θ₍₁₎ ▶ h′) # θ₍₂₎ θ′.
SmashProduct heisenbergDouble(const Pairing& p);

/// Associativity, unit, the two inclusion algebra morphisms, and agreement
/// with the alternate form (h # θ)(h′ # θ′) = h h′₍₁₎ # (θ ◀ h′₍₂₎) θ′.
Report verifyHeisenbergDouble(const Pairing& p);

/// The two algebra anti-isomorphisms ℋ(Ĥ) → ℋ(H):
///   L₁(θ # a) = S⁻¹(a) # Ŝ(θ),   L₂(θ # a) = S(a) # Ŝ⁻¹(θ).
struct HeisenbergAntiIsos {
    SmashProduct heisLeft;   ///< ℋ(H) = H # Ĥ
    SmashProduct heisRight;  ///< ℋ(Ĥ) = Ĥ # H
    StructureMap l1, l2;     ///< ℋ(Ĥ) → ℋ(H) on the flattened spaces
};
HeisenbergAntiIsos heisenbergAntiIsos(const Pairing& p);

/// Anti-multiplicativity, units, bijectivity, L₁∘L₂⁻¹ being an algebra
/// automorphism, and the four inclusion relations L₁ι̂₁ = ι₂Ŝ, L₁ι̂₂ = ι₁S⁻¹,
/// L₂ι̂₁ = ι₂Ŝ⁻¹, L₂ι̂₂ = ι₁S.
Report verifyHeisenbergAntiIsos(const Pairing& p);

/// A Hopf algebra on the flattening of a two-factor tensor product, together
/// with the factor legs and the flattening isomorphism.
struct DoubleHopf {
    HopfAlgebraData hopf;
    LegList legs;           ///< the two tensor factors, in order
    StructureMap fromPair;  ///< iso legs → flattened space
};

/// The Drinfeld codouble 𝒯(H): tensor-product algebra of the two factors
/// (H^op ⊗ Ĥ for Radford, H^cop ⊗ Ĥ for Majid, H ⊗ Ĥ^cop for Taipe) with the
/// coproduct (id ⊗ Σ Ad ⊗ id)(Δ₁ ⊗ Δ₂) conjugating the middle legs by °U,
/// U⁻¹, U respectively.  The antipode is found by a linear solve; throws
/// AntipodeNotFound if none exists.
DoubleHopf drinfeldCodouble(const Pairing& p, DoubleKind kind);

/// The exchange map 𝔗 : H ⊗ Ĥ → Ĥ ⊗ H of the double crossproduct.  `form`
/// selects among the equivalent written forms (0 is the defining one;
/// Radford has forms 0–4, Majid and Taipe 0–3).
StructureMap exchangeMap(const Pairing& p, DoubleKind kind, int form = 0);

/// All alternate forms of 𝔗 agree with the defining one.
Report verifyExchangeFormulas(const Pairing& p, DoubleKind kind);

/// The Drinfeld double built directly as a double crossproduct:
/// multiplication (m₁ ⊗ m₂)(id ⊗ 𝔗 ⊗ id) on Ĥ ⋈ H (factor twists per kind),
/// coproduct (id ⊗ Σ ⊗ id)(Δ₁ ⊗ Δ₂), antipode by linear solve.
DoubleHopf drinfeldDoubleDirect(const Pairing& p, DoubleKind kind);

/// The Drinfeld double as the dual Hopf algebra of the codouble, transported
/// onto the same flattened space Ĥ ⋈ H through the evaluation pairing
/// P(ω ⋈ a, c ⊗ θ) = p̄(ω, c) p(a, θ).
HopfAlgebraData drinfeldDoubleViaDual(const Pairing& p, DoubleKind kind);

/// Both constructions, compared structure map by structure map; throws
/// CrossCheckMismatch with a witness if they differ anywhere.
DoubleHopf drinfeldDouble(const Pairing& p, DoubleKind kind);

/// The evaluation pairing 𝒟 × 𝒯 → k, P(ω ⋈ a, c ⊗ θ) = p̄(ω, c) p(a, θ),
/// with its canonical element, for a double/codouble pair of the same kind.
Pairing doublePairing(const Pairing& p, const DoubleHopf& dbl, const DoubleHopf& codbl);

/// A verified 2-cocycle on a Hopf algebra.
struct CocycleData {
    HopfAlgebraData hopf;
    StructureMap form;  ///< H ⊗ H → k
    Chirality chirality;
    bool normal;  ///< σ(1, h) = σ(h, 1) = ε(h)
};

/// The trivial cocycle ε ⊗ ε.
StructureMap trivialCocycle(const HopfAlgebraData& h);

/// Validate the left/right 2-cocycle condition exhaustively; throws
/// NotACocycle with the smallest failing basis triple otherwise.
CocycleData cocycleCheck(const HopfAlgebraData& h, const StructureMap& form,
                         Chirality chirality);

/// The twisted algebra: σ-first product σ(h₍₁₎, h′₍₁₎) h₍₂₎h′₍₂₎ for a left
/// cocycle, σ-last product h₍₁₎h′₍₁₎ σ(h₍₂₎, h′₍₂₎) for a right one.  The
/// result is re-verified to be associative and unital.
AlgebraData cocycleTwist(const HopfAlgebraData& h, const CocycleData& sigma);

/// Convolution product of two bilinear forms on H:
/// (σ * τ)(h, h′) = σ(h₍₁₎, h′₍₁₎) τ(h₍₂₎, h′₍₂₎).
StructureMap convolveForms(const HopfAlgebraData& h, const StructureMap& f,
                           const StructureMap& g);

/// The four twist theorems: ℋ(H) is the σ-first twist of 𝒯_R(H), and
/// untwisting by σ⁻¹ recovers 𝒯_R(H); ℋ(Ĥ) is the η-last twist of 𝒟_R(H),
/// and untwisting by η⁻¹ recovers 𝒟_R(H) — all as equalities of
/// multiplication tensors on the same underlying space, plus
/// cocycle/normality/convolution-inverse checks for σ, σ⁻¹, η, η⁻¹.
Report verifyTwistTheorems(const Pairing& p);

/// Structural comparisons between the coordinate systems: 𝒯_T-side double of
/// H equals the Radford double of H^op on the nose; ♮ : 𝒟_M(H) → 𝒟_R(H),
/// ω ⋈ h ↦ Ŝ(ω) ⋈ h, is a Hopf isomorphism; composing the two identifies
/// the Taipe double with the Majid double of H^op.
Report doubleComparisons(const Pairing& p);

}  // namespace hopfyd
