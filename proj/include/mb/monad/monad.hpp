#pragma once

#include "mb/category/context.hpp"

#include <cstdint>
#include <memory>
#include <string>

namespace mb {

/// (T, μ, η, σ) with σ_{X,Y}: X⊗TY → T(X⊗Y), evaluated on demand.
template <class Ctx>
class StrongMonad {
 public:
  using Object = typename Ctx::Object;
  using Morphism = typename Ctx::Morphism;

  virtual ~StrongMonad() = default;
  virtual std::string name() const = 0;
  virtual const Ctx& context() const = 0;
  virtual Object apply(const Object& x) const = 0;
  virtual Morphism apply(const Morphism& f) const = 0;
  virtual Morphism mu(const Object& x) const = 0;
  virtual Morphism eta(const Object& x) const = 0;
  virtual Morphism sigma(const Object& x, const Object& y) const = 0;
  /// Objects the instance can evaluate on (e.g. positively graded, below a cap).
  virtual bool accepts(const Object&) const { return true; }
};

template <class Ctx>
using MonadPtr = std::shared_ptr<const StrongMonad<Ctx>>;

/// (M, m: M⊗M → M, e: I → M).
template <class Ctx>
struct MonoidObject {
  typename Ctx::Object carrier;
  typename Ctx::Morphism m;
  typename Ctx::Morphism e;
};

template <class Ctx>
class IdentityMonad final : public StrongMonad<Ctx> {
 public:
  using typename StrongMonad<Ctx>::Object;
  using typename StrongMonad<Ctx>::Morphism;
  explicit IdentityMonad(Ctx ctx) : ctx_(std::move(ctx)) {}
  std::string name() const override { return "identity"; }
  const Ctx& context() const override { return ctx_; }
  Object apply(const Object& x) const override { return x; }
  Morphism apply(const Morphism& f) const override { return f; }
  Morphism mu(const Object& x) const override { return ctx_.identity(x); }
  Morphism eta(const Object& x) const override { return ctx_.identity(x); }
  Morphism sigma(const Object& x, const Object& y) const override { return ctx_.identity(ctx_.tensor(x, y)); }

 private:
  Ctx ctx_;
};

/// T = −⊗M for a monoid M: μ = (X⊗m)∘a, η = (X⊗e)∘r⁻¹, σ = a⁻¹.
template <class Ctx>
class TensorMonad final : public StrongMonad<Ctx> {
 public:
  using typename StrongMonad<Ctx>::Object;
  using typename StrongMonad<Ctx>::Morphism;
  TensorMonad(Ctx ctx, MonoidObject<Ctx> monoid, std::string name)
      : ctx_(std::move(ctx)), monoid_(std::move(monoid)), name_(std::move(name)) {}
  std::string name() const override { return name_; }
  const Ctx& context() const override { return ctx_; }
  const MonoidObject<Ctx>& monoid() const { return monoid_; }
  Object apply(const Object& x) const override { return ctx_.tensor(x, monoid_.carrier); }
  Morphism apply(const Morphism& f) const override { return ctx_.tensor(f, ctx_.identity(monoid_.carrier)); }
  Morphism mu(const Object& x) const override {
    return ctx_.compose(ctx_.tensor(ctx_.identity(x), monoid_.m), ctx_.assoc(x, monoid_.carrier, monoid_.carrier));
  }
  Morphism eta(const Object& x) const override {
    return ctx_.compose(ctx_.tensor(ctx_.identity(x), monoid_.e), ctx_.right_unitor_inv(x));
  }
  Morphism sigma(const Object& x, const Object& y) const override { return ctx_.assoc_inv(x, y, monoid_.carrier); }

 private:
  Ctx ctx_;
  MonoidObject<Ctx> monoid_;
  std::string name_;
};

enum class MonadComponent { Mu, Eta, Sigma };
std::string to_string(MonadComponent c);

/// Wraps a monad and bumps one seeded entry of every μ, η or σ component.
template <class Ctx>
class PerturbedMonad final : public StrongMonad<Ctx> {
 public:
  using typename StrongMonad<Ctx>::Object;
  using typename StrongMonad<Ctx>::Morphism;
  PerturbedMonad(MonadPtr<Ctx> inner, MonadComponent which, std::uint64_t seed)
      : inner_(std::move(inner)), which_(which), seed_(seed) {}
  std::string name() const override { return inner_->name() + "~" + to_string(which_) + "#" + std::to_string(seed_ % 1000); }
  const Ctx& context() const override { return inner_->context(); }
  Object apply(const Object& x) const override { return inner_->apply(x); }
  Morphism apply(const Morphism& f) const override { return inner_->apply(f); }
  Morphism mu(const Object& x) const override { return bump(MonadComponent::Mu, inner_->mu(x)); }
  Morphism eta(const Object& x) const override { return bump(MonadComponent::Eta, inner_->eta(x)); }
  Morphism sigma(const Object& x, const Object& y) const override { return bump(MonadComponent::Sigma, inner_->sigma(x, y)); }
  bool accepts(const Object& x) const override { return inner_->accepts(x); }

 private:
  Morphism bump(MonadComponent c, const Morphism& f) const { return c == which_ ? inner_->context().perturb(f, seed_) : f; }
  MonadPtr<Ctx> inner_;
  MonadComponent which_;
  std::uint64_t seed_;
};

/// Six seeded single-entry perturbations, cycling through μ, η, σ.
template <class Ctx>
std::vector<MonadPtr<Ctx>> seeded_perturbations(const MonadPtr<Ctx>& t, std::uint64_t seed);

// Shipped monoids.
/// ℤ[C₂] on the basis {1, g}.
MonoidObject<FpAbContext> group_ring_c2();
/// ℤ/2 with its ring multiplication.
MonoidObject<FpAbContext> z_mod_2_ring();
/// The unit ℤ as a monoid.
MonoidObject<FpAbContext> fpab_unit_monoid();
/// ℚ[ε]/ε², ε in degree 0.
MonoidObject<ChainContext> dual_numbers(Ground ground = Ground::Q);
/// Λ(x), |x| = 1, zero differential.
MonoidObject<ChainContext> exterior_algebra(Ground ground = Ground::Q);
/// R[C₂] concentrated in degree 0.
MonoidObject<ChainContext> chain_group_ring_c2(Ground ground = Ground::Q);
MonoidObject<ChainContext> chain_unit_monoid(Ground ground = Ground::Q);

}  // namespace mb
