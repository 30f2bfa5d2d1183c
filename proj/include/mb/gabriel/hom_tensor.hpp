#pragma once

#include "mb/gabriel/ring.hpp"
#include "mb/monad/monad.hpp"
#include "mb/report/record.hpp"

#include <mutex>

namespace mb {

/// Hom_S(P, N) for P free abelian on `basis`, sitting inside Hom_ℤ(P, N) ≅ N⊗ℤ^p.
/// Generator (y, q) of N⊗ℤ^p is the map b_q ↦ y, other basis vectors ↦ 0.
struct HomFromP {
  FpGroup group;
  FpMorphism inclusion;  // group → N⊗ℤ^p
  bool whole = false;    // S-linearity imposes nothing
  std::shared_ptr<const LatticeSolver> solver;

  /// h with inclusion∘h = g.
  FpMorphism factor(const FpMorphism& g) const;
};

HomFromP hom_from_projective(const ResolvedProjective& p, const SModule& n);

/// T(X) = Hom_S(P, X⊗P) on FPAb: μ is evaluation, η(x) = (b ↦ x⊗b), σ(x⊗f) = (b ↦ x⊗f(b)).
class HomTensorMonad final : public StrongMonad<FpAbContext> {
 public:
  explicit HomTensorMonad(ProjectiveSummand p);
  std::string name() const override { return "homtensor:" + p_.label; }
  const FpAbContext& context() const override { return ctx_; }
  const ProjectiveSummand& projective() const { return p_; }
  const ResolvedProjective& resolved() const { return r_; }
  Object apply(const Object& x) const override { return hom(x)->group; }
  Morphism apply(const Morphism& f) const override;
  Morphism mu(const Object& x) const override;
  Morphism eta(const Object& x) const override;
  Morphism sigma(const Object& x, const Object& y) const override;

  /// X⊗P with S acting through P.
  SModule tensor_p(const FpGroup& x) const;
  std::shared_ptr<const HomFromP> hom(const FpGroup& x) const;

 private:
  FpAbContext ctx_;
  ProjectiveSummand p_;
  ResolvedProjective r_;
  mutable std::mutex mutex_;
  mutable std::vector<std::pair<FpGroup, std::shared_ptr<const HomFromP>>> cache_;
};

/// End_S(P) with product f·g = f∘g; `basis[k]` is the p×p matrix of the k-th ring generator.
struct EndoRing {
  RingPresentation ring;
  std::vector<IntMatrix> basis;
  HomFromP hom;
};
EndoRing endo_ring(const ProjectiveSummand& p);

/// σ_{X,ℤ} invertible for every battery group.
CheckReport check_linear_strength(const HomTensorMonad& t, const std::vector<FpGroup>& battery);

/// φ(X) = Hom_S(P, X) as a right End(P)-module, with its T-algebra structure.
struct ComparisonImage {
  HomFromP hom;
  std::vector<IntMatrix> right_action;  // precomposition with each End(P) generator
  FpMorphism structure;                 // ξ: T(φX) → φX
};
ComparisonImage comparison(const HomTensorMonad& t, const EndoRing& r, const SModule& x);

/// Y ⊗_R P for a right R-module Y given by `right_action`.
FpCokernel tensor_over_endo(const FpGroup& y, const std::vector<IntMatrix>& right_action, const EndoRing& r);

/// For each module: ξ satisfies the algebra laws and Hom_S(P,X) ⊗_R P → X is an isomorphism.
CheckReport gabriel_roundtrip(const ProjectiveSummand& p, const std::vector<SModule>& battery);

/// S = ℤ only: X ↦ Hom(P,X) and Y ↦ Y⊗_R P are mutually inverse on the battery and its image,
/// and the image modules satisfy the module laws over End(P)^op.
CheckReport morita_correspondence(const ProjectiveSummand& p, const std::vector<SModule>& battery);

}  // namespace mb
