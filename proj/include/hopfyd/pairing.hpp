/// @file pairing.hpp
/// @brief Dual pairings of Hopf algebras and their canonical elements.
///
/// A Pairing bundles two Hopf algebras H, H' with a bilinear form
/// p : H ⊗ H' → k satisfying the Hopf duality laws (product against coproduct
/// on both sides, units against counits, antipode against antipode) and the
/// canonical element U ∈ H ⊗ H' characterized by p²(U, ω ⊗ h) = p(h, ω),
/// where p²(h ⊗ ω, ω' ⊗ h') = p(h, ω') p(h', ω).  For the canonical pairing
/// p(h, θ) = θ(h) against the dual, U is the dual-basis sum Σᵢ hᵢ ⊗ ĥᵢ.

#pragma once

#include "hopfyd/hopf.hpp"

namespace hopfyd {

/// Thrown when a pairing is degenerate and a canonical element is requested.
struct DegeneratePairing : std::runtime_error {
    explicit DegeneratePairing(const std::string& what) : std::runtime_error(what) {}
};

struct Pairing {
    HopfAlgebraData left;   ///< H
    HopfAlgebraData right;  ///< H'
    StructureMap form;      ///< p : H ⊗ H' → k
    TensorElement U;        ///< canonical element in H ⊗ H'

    long field() const { return form.field(); }
    /// p(h, ω) for single-leg elements.
    Scalar value(const TensorElement& h, const TensorElement& omega) const {
        return form.apply(h.tensorWith(omega)).asScalar();
    }
};

/// Build a pairing from a form, computing the canonical element from the
/// inverse Gram matrix; throws DegeneratePairing if the form is degenerate.
Pairing makePairing(HopfAlgebraData left, HopfAlgebraData right, StructureMap form);

/// The evaluation pairing of H against its dual.
Pairing canonicalPairing(const HopfAlgebraData& h);

/// The flipped pairing p̄ : H' ⊗ H → k, p̄(ω, h) = p(h, ω).
Pairing flippedPairing(const Pairing& p);

/// The five duality laws plus nondegeneracy, as exhaustive map identities.
Report verifyPairing(const Pairing& p);

/// Contract p(h, ·) against tensor leg `leg` of x (a right-space leg).
TensorElement pairLegWithLeft(const StructureMap& form, const TensorElement& h,
                              const TensorElement& x, int leg);
/// Contract p(·, ω) against tensor leg `leg` of x (a left-space leg).
TensorElement pairLegWithRight(const StructureMap& form, const TensorElement& omega,
                               const TensorElement& x, int leg);

/// Canonical-element laws: the defining slice property, both slice-recovery
/// identities, U⁻¹ = (S ⊗ id)U = (id ⊗ Ŝ)U, the two coproduct identities
/// (Δ ⊗ id)U = U₁₃U₂₃ and (id ⊗ Δ')U = U₁₂U₁₃, dual-basis cross-check for
/// canonical pairings, and Σ(U) being canonical for the flipped pairing.
Report verifyCanonicalElement(const Pairing& p);

/// Conjugation by the canonical element of the opposite pairing: the map on
/// H ⊗ H' numerically equal to Ad(°U) on H^op ⊗ H'.
StructureMap circAdjoint(const Pairing& p);

/// T_U = (id ⊗ S'⁻¹) Ad(U) (id ⊗ S').
StructureMap tU(const Pairing& p);
/// T_{U⁻¹} = (id ⊗ S'⁻¹) Ad(U⁻¹) (id ⊗ S'); equals T_U⁻¹.
StructureMap tUInverse(const Pairing& p);

/// T_U T_{U⁻¹} = id, Ad(°U) = T_U and Ad(°U)⁻¹ = T_{U⁻¹} in coordinates,
/// °U = (op ⊗ S'⁻¹)(U⁻¹) and (°U)⁻¹ = (op ⊗ S'⁻¹)(U) in the H^op ⊗ H' algebra.
Report verifyCircCanonical(const Pairing& p);

/// Regular actions induced by the pairing, as structure maps:
///   h ▶ ω = ω₍₁₎ p(h, ω₍₂₎)   (H ⊗ H' → H')
StructureMap leftRegularOnRight(const Pairing& p);
///   ω ◀ h = p(h, ω₍₁₎) ω₍₂₎   (H' ⊗ H → H')
StructureMap rightRegularOnRight(const Pairing& p);
///   ω ▶ h = h₍₁₎ p(h₍₂₎, ω)   (H' ⊗ H → H)
StructureMap leftRegularOnLeft(const Pairing& p);
///   h ◀ ω = p(h₍₁₎, ω) h₍₂₎   (H ⊗ H' → H)
StructureMap rightRegularOnLeft(const Pairing& p);

/// The four sandwich-slice identities: pairing the second leg of
/// U(g⊗ω)U⁻¹, U⁻¹(g⊗ω)U, T_U(g⊗ω), T_{U⁻¹}(g⊗ω) against h yields the stated
/// regular/adjoint expressions, both written forms each, all h, g, ω basis.
Report verifySliceIdentities(const Pairing& p);

/// p_{H'}(T h, ω') = p_H(h, T̂ ω') for T : H → H' and its transpose T̂.
Report verifyTransposeCompatibility(const Pairing& pH, const Pairing& pHprime,
                                    const StructureMap& t, const StructureMap& tHat);

}  // namespace hopfyd
