#pragma once

#include "mb/monad/monad.hpp"
#include "mb/report/record.hpp"

#include <array>
#include <functional>

namespace mb {

/// Associativity and both unit laws on every battery object, naturality of μ and η on seeded morphisms.
template <class Ctx>
CheckReport check_monad_laws(const StrongMonad<Ctx>& t, const std::vector<typename Ctx::Object>& battery, std::uint64_t seed,
                             std::size_t samples = 6);

/// The four strength diagrams: unit and η/μ compatibility on all pairs, associativity on `triples`,
/// plus naturality of σ on seeded morphism pairs.
template <class Ctx>
CheckReport check_strength_laws(const StrongMonad<Ctx>& t, const std::vector<typename Ctx::Object>& battery,
                                const std::vector<std::array<std::size_t, 3>>& triples, std::uint64_t seed, std::size_t samples = 6);

/// Seeded index triples into a battery of size n (always includes the all-zero-index triple).
std::vector<std::array<std::size_t, 3>> sample_triples(std::size_t n, std::size_t count, std::uint64_t seed);

template <class Ctx>
CheckReport check_monoid_laws(const Ctx& ctx, const MonoidObject<Ctx>& m);

/// m = μ_I ∘ T(r_{TI}) ∘ σ_{TI,I}, e = η_I.
template <class Ctx>
MonoidObject<Ctx> monoid_of_unit(const StrongMonad<Ctx>& t);

/// λ_X = T(r_X) ∘ σ_{X,I}: X⊗T(I) → T(X).
template <class Ctx>
typename Ctx::Morphism linear_approximation(const StrongMonad<Ctx>& t, const typename Ctx::Object& x);

/// A family of components λ_X: S(X) → T(X).
template <class Ctx>
using Transformation = std::function<typename Ctx::Morphism(const typename Ctx::Object&)>;

/// λ∘η^S = η^T and λ∘μ^S = μ^T ∘ T(λ) ∘ λ_S on the battery.
template <class Ctx>
CheckReport check_monad_morphism(const StrongMonad<Ctx>& s, const StrongMonad<Ctx>& t, const Transformation<Ctx>& lambda,
                                 const std::vector<typename Ctx::Object>& battery);

/// λ_{X⊗Y} ∘ σ^S_{X,Y} = σ^T_{X,Y} ∘ (X⊗λ_Y) on battery pairs.
template <class Ctx>
CheckReport check_strong_naturality(const StrongMonad<Ctx>& s, const StrongMonad<Ctx>& t, const Transformation<Ctx>& lambda,
                                    const std::vector<typename Ctx::Object>& battery);

/// The source monad −⊗T(I) of λ.
template <class Ctx>
MonadPtr<Ctx> unit_tensor_monad(const StrongMonad<Ctx>& t);

struct LinearityVerdict {
  bool linear = true;
  std::string witness;  // first pair with non-invertible σ, with a dimension count when one exists
};
template <class Ctx>
LinearityVerdict is_linear(const StrongMonad<Ctx>& t, const std::vector<typename Ctx::Object>& battery);

/// σ_{X,Y} a weak equivalence in degrees ≤ up_to for all battery pairs.
template <class Ctx>
LinearityVerdict strength_weak_invertibility(const StrongMonad<Ctx>& t, const std::vector<typename Ctx::Object>& battery,
                                             std::size_t up_to);

/// −⊗M with μ from m, η from e, σ = a⁻¹. Throws std::invalid_argument if the monoid laws fail.
template <class Ctx>
std::shared_ptr<TensorMonad<Ctx>> monad_from_monoid(const Ctx& ctx, const MonoidObject<Ctx>& m, std::string name);

/// φ: A → B is an isomorphism of monoids.
template <class Ctx>
std::optional<std::string> monoid_iso_violation(const Ctx& ctx, const MonoidObject<Ctx>& a, const MonoidObject<Ctx>& b,
                                                const typename Ctx::Morphism& phi);

}  // namespace mb
