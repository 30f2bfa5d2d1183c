#pragma once

#include "mb/monad/monad.hpp"
#include "mb/report/record.hpp"

#include <functional>

namespace mb {

/// φ_{A1,A2}: Hom(A1,A2) → Hom(T A1, T A2), as a map between the simplified hom presentations.
using Enrichment = std::function<FpMorphism(const FpGroup& a1, const FpGroup& a2)>;

/// φ = curry(T(ev) ∘ σ_{Hom(A1,A2),A1}).
FpMorphism strength_to_enrichment(const StrongMonad<FpAbContext>& t, const FpGroup& a1, const FpGroup& a2);
Enrichment enrichment_of(const StrongMonad<FpAbContext>& t);

/// σ_{X,A} = uncurry(φ_{A,X⊗A} ∘ coev_X).
FpMorphism enrichment_to_strength(const StrongMonad<FpAbContext>& t, const Enrichment& phi, const FpGroup& x, const FpGroup& a);

/// σ → φ → σ on all battery pairs, and φ(id) = id, φ(g∘f) = φ(g)∘φ(f) on sampled homs.
CheckReport check_enrichment_roundtrip(const StrongMonad<FpAbContext>& t, const std::vector<FpGroup>& battery);

}  // namespace mb
