#pragma once

#include "mb/monad/laws.hpp"
#include "mb/simplicial/simplicial.hpp"

namespace mb {

/// (X, ξ: T(X) → X).
template <class Ctx>
struct TAlgebra {
  typename Ctx::Object carrier;
  typename Ctx::Morphism xi;
};

/// Right module (X, ρ: X⊗M → X) over a monoid M.
template <class Ctx>
struct ModuleOverMonoid {
  typename Ctx::Object carrier;
  typename Ctx::Morphism rho;
};

template <class Ctx>
struct Coequalizer {
  typename Ctx::Object object;
  typename Ctx::Morphism q;
};
/// Coequalizer of f, g as the cokernel of f − g. Over ℤ-chains the image must be saturated.
Coequalizer<FpAbContext> coequalize(const FpAbContext& ctx, const FpMorphism& f, const FpMorphism& g);
Coequalizer<ChainContext> coequalize(const ChainContext& ctx, const ChainMap& f, const ChainMap& g);
/// h with h∘q = g for q epi.
FpMorphism factor_through_epi(const FpAbContext& ctx, const FpMorphism& q, const FpMorphism& g);
ChainMap factor_through_epi(const ChainContext& ctx, const ChainMap& q, const ChainMap& g);

template <class Ctx>
TAlgebra<Ctx> free_algebra(const StrongMonad<Ctx>& t, const typename Ctx::Object& x);
/// ξ∘η = id and ξ∘μ = ξ∘T(ξ).
template <class Ctx>
std::optional<std::string> algebra_violation(const StrongMonad<Ctx>& t, const TAlgebra<Ctx>& a);
template <class Ctx>
bool check_algebra(const StrongMonad<Ctx>& t, const TAlgebra<Ctx>& a);
/// f∘ξ_A = ξ_B∘T(f).
template <class Ctx>
bool is_algebra_map(const StrongMonad<Ctx>& t, const TAlgebra<Ctx>& a, const TAlgebra<Ctx>& b, const typename Ctx::Morphism& f);

template <class Ctx>
std::optional<std::string> monoid_module_violation(const Ctx& ctx, const MonoidObject<Ctx>& m, const ModuleOverMonoid<Ctx>& x);
/// X⊗M with ρ = (X⊗m)∘a.
template <class Ctx>
ModuleOverMonoid<Ctx> free_monoid_module(const Ctx& ctx, const MonoidObject<Ctx>& m, const typename Ctx::Object& x);

/// Z⊗(X, ξ): coequalizer of μ∘T(σ_{Z,X}) and T(Z⊗ξ) on T(Z⊗TX). Throws if T(Z⊗η) is not a common section.
template <class Ctx>
TAlgebra<Ctx> e_tensor(const StrongMonad<Ctx>& t, const typename Ctx::Object& z, const TAlgebra<Ctx>& a);

/// (X, ξ∘λ_X) over T(I).
template <class Ctx>
ModuleOverMonoid<Ctx> lambda_star(const StrongMonad<Ctx>& t, const TAlgebra<Ctx>& a);

/// Coequalizer of T(ρ) and μ_X∘T(λ_X) on T(X⊗T(I)), with the projection q: T(X) → carrier.
template <class Ctx>
struct LambdaShriek {
  TAlgebra<Ctx> alg;
  typename Ctx::Morphism q;
};
template <class Ctx>
LambdaShriek<Ctx> lambda_shriek(const StrongMonad<Ctx>& t, const ModuleOverMonoid<Ctx>& m);

/// Unit M → λ*λ_!(M), x ↦ q(η_X x).
template <class Ctx>
typename Ctx::Morphism adjunction_unit(const StrongMonad<Ctx>& t, const ModuleOverMonoid<Ctx>& m, const LambdaShriek<Ctx>& l);

struct UnitVerdict {
  bool module_map = false;
  bool iso = false;
  bool weq = false;
};
template <class Ctx>
UnitVerdict adjunction_unit_check(const StrongMonad<Ctx>& t, const ModuleOverMonoid<Ctx>& m, std::size_t up_to);
/// At X⊗T(I): λ_!(X⊗T(I)) ≅ (T(X), μ_X) and the unit becomes T(r_X)∘σ_{X,I} exactly.
template <class Ctx>
CheckReport unit_is_strength(const StrongMonad<Ctx>& t, const std::vector<typename Ctx::Object>& battery);

// ---- chain-only: bar construction and homotopical checks ----

/// R[0] as an algebra over −⊗M through the augmentation reading off the coefficient of the unit.
/// Throws when that coefficient map is not multiplicative.
TAlgebra<ChainContext> trivial_algebra(const TensorMonad<ChainContext>& t);

/// B_n = T^{n+1}A with d_0 = T^n(ξ), d_i = T^{n−i}(μ_{T^{i−1}A}), s_j = T^{n−j+1}(η_{T^jA}),
/// augmentation ξ and extra degeneracies h_n = η_{T^{n+1}A}.
struct BarResolution {
  SplitAugmentation split;
  std::size_t N = 0;
};
BarResolution bar_resolution(const StrongMonad<ChainContext>& t, const TAlgebra<ChainContext>& a, std::size_t n);
/// Levelwise T^{n+1}(f).
SimplicialMap bar_map(const StrongMonad<ChainContext>& t, const ChainMap& f, const BarResolution& src, const BarResolution& tgt);
/// Simplicial identities, faces and degeneracies as algebra maps, extra-degeneracy identities.
CheckReport check_bar(const StrongMonad<ChainContext>& t, const TAlgebra<ChainContext>& a, const BarResolution& b);
/// |B(A)| → A quasi-iso below N, Reedy cofibrancy, τ-cofibrancy.
CheckReport bar_is_resolution(const StrongMonad<ChainContext>& t, const TAlgebra<ChainContext>& a, std::size_t n);

/// Pushout of F(Y) ← F(X) → V in algebras, and W/V ≅ F(Y/X). Needs T additive.
struct FreeCellAttachment {
  ChainMap i;       // X ↣ Y
  TAlgebra<ChainContext> v;
  ChainMap attach;  // T(X) → V, an algebra map
  TAlgebra<ChainContext> w;
  ChainMap from_free;  // T(Y) → W
  ChainMap from_v;     // V → W
  TAlgebra<ChainContext> quotient;
  ChainMap to_quotient;  // W → W/V
  ChainComplex cells;     // Y/X
  ChainMap quotient_iso; // T(Y/X) → W/V
};
FreeCellAttachment free_cell_attachment(const StrongMonad<ChainContext>& t, const ChainMap& i, const TAlgebra<ChainContext>& v,
                                        const ChainMap& attach);
/// Λ(x) preset: ℚ[1] ↣ D² attached along the identity of the free algebra on ℚ[1].
FreeCellAttachment exterior_attachment_preset(const StrongMonad<ChainContext>& t);
CheckReport verify_free_cofibre_sequence(const StrongMonad<ChainContext>& t, const FreeCellAttachment& att, std::size_t n);

/// Clauses: T(0) = 0; T(X) ↣ T(Y) with T(Y)/T(X) → T(Y/X) a weq; free cell attachments along T(X) → T(X⊕X) are cell extensions.
CheckReport check_homotopically_right_exact(const StrongMonad<ChainContext>& t, const std::vector<ChainMap>& extensions,
                                            std::size_t up_to);
/// η a cofibration on the battery; reflexive coequalizers preserved on seeded samples; colimit clauses assumed.
CheckReport check_excellent_partial(const StrongMonad<ChainContext>& t, const std::vector<ChainComplex>& battery, std::uint64_t seed,
                                    std::size_t samples);

/// T(X) = X ⊕ R[0] on (⊕, 0): μ folds the two points, η = inj₁. T(0) ≠ 0.
class PointedMonad final : public StrongMonad<ChainContext> {
 public:
  explicit PointedMonad(Ground ground = Ground::Q) : ctx_{ground, ChainMode::Cocartesian} {}
  std::string name() const override { return "pointed"; }
  const ChainContext& context() const override { return ctx_; }
  Object apply(const Object& x) const override;
  Morphism apply(const Morphism& f) const override;
  Morphism mu(const Object& x) const override;
  Morphism eta(const Object& x) const override;
  Morphism sigma(const Object& x, const Object& y) const override;

 private:
  ChainContext ctx_;
};

}  // namespace mb
