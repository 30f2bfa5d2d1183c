#pragma once

#include "mb/chain/complex.hpp"
#include "mb/linalg/fpab.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace mb {

/// (FPAb, ⊗_ℤ, ℤ). Associator and unitors are identity matrices between the Kronecker presentations.
struct FpAbContext {
  using Object = FpGroup;
  using Morphism = FpMorphism;

  std::string name() const { return "FPAb"; }
  Object unit() const { return FpGroup::free(1); }
  Object zero() const { return FpGroup::free(0); }
  Object tensor(const Object& a, const Object& b) const { return fp_tensor(a, b); }
  Morphism tensor(const Morphism& f, const Morphism& g) const { return fp_tensor(f, g); }
  Morphism assoc(const Object& a, const Object& b, const Object& c) const;      // (a⊗b)⊗c → a⊗(b⊗c)
  Morphism assoc_inv(const Object& a, const Object& b, const Object& c) const;  // a⊗(b⊗c) → (a⊗b)⊗c
  Morphism left_unitor(const Object& x) const;       // I⊗X → X
  Morphism left_unitor_inv(const Object& x) const;   // X → I⊗X
  Morphism right_unitor(const Object& x) const;      // X⊗I → X
  Morphism right_unitor_inv(const Object& x) const;  // X → X⊗I
  Morphism symmetry(const Object& a, const Object& b) const;

  Morphism identity(const Object& x) const { return fp_identity(x); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return fp_compose(g, f); }
  Morphism add(const Morphism& f, const Morphism& g) const { return fp_add(f, g); }
  Morphism negate(const Morphism& f) const { return fp_negate(f); }
  Morphism zero_map(const Object& a, const Object& b) const { return fp_zero(a, b); }
  bool equal(const Morphism& f, const Morphism& g) const { return fp_equal(f, g); }
  bool is_iso(const Morphism& f) const { return fp_is_iso(f); }
  /// Weak equivalences of FPAb are the isomorphisms.
  bool is_weq(const Morphism& f, std::size_t) const { return fp_is_iso(f); }
  bool same(const Object& a, const Object& b) const { return a == b; }
  const Object& src(const Morphism& f) const { return f.src; }
  const Object& tgt(const Morphism& f) const { return f.tgt; }
  bool is_zero_object(const Object& x) const { return fp_canonical(x).is_zero(); }
  std::string describe(const Object& x) const { return fp_canonical(x).str(); }
  std::string describe(const Morphism& f) const;

  /// Random element of Hom(a, b), coefficients in [−2, 2].
  Morphism random_morphism(std::mt19937_64& rng, const Object& a, const Object& b) const;
  /// Adds 1 to one seeded entry; validated, so may throw std::invalid_argument.
  Morphism perturb(const Morphism& f, std::uint64_t seed) const;
};

enum class ChainMode { Tensor, Cocartesian };

/// Bounded complexes over ℚ or ℤ, with either (⊗, R[0]) or (⊕, 0).
struct ChainContext {
  using Object = ChainComplex;
  using Morphism = ChainMap;

  Ground ground = Ground::Q;
  ChainMode mode = ChainMode::Tensor;

  std::string name() const;
  Object unit() const;
  Object zero() const { return ChainComplex(ground); }
  Object tensor(const Object& a, const Object& b) const;
  Morphism tensor(const Morphism& f, const Morphism& g) const;
  Morphism assoc(const Object& a, const Object& b, const Object& c) const;
  Morphism assoc_inv(const Object& a, const Object& b, const Object& c) const;
  Morphism left_unitor(const Object& x) const;
  Morphism left_unitor_inv(const Object& x) const;
  Morphism right_unitor(const Object& x) const;
  Morphism right_unitor_inv(const Object& x) const;
  Morphism symmetry(const Object& a, const Object& b) const;

  Morphism identity(const Object& x) const { return chain_identity(x); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return chain_compose(g, f); }
  Morphism add(const Morphism& f, const Morphism& g) const { return chain_add(f, g); }
  Morphism negate(const Morphism& f) const { return chain_negate(f); }
  Morphism zero_map(const Object& a, const Object& b) const { return chain_zero(a, b); }
  bool equal(const Morphism& f, const Morphism& g) const { return chain_equal(f, g); }
  bool is_iso(const Morphism& f) const { return chain_is_iso(f); }
  bool is_weq(const Morphism& f, std::size_t up_to) const;
  bool same(const Object& a, const Object& b) const { return a == b; }
  const Object& src(const Morphism& f) const { return f.src(); }
  const Object& tgt(const Morphism& f) const { return f.tgt(); }
  bool is_zero_object(const Object& x) const { return x.is_zero(); }
  std::string describe(const Object& x) const { return x.describe(); }
  std::string describe(const Morphism& f) const;

  Morphism random_morphism(std::mt19937_64& rng, const Object& a, const Object& b) const;
  Morphism perturb(const Morphism& f, std::uint64_t seed) const;
};

/// Seeded batteries. FPAb: 0, ℤ, ℤ/2, ℤ/4, ℤ/2⊕ℤ, ℤ², then 3 random presentations.
std::vector<FpGroup> fpab_battery(std::uint64_t seed = 0xC0FFEE);
/// Chains: 0, R[0], R[1], S², D², then 3 random complexes (top ≤ 4, dims ≤ 3).
std::vector<ChainComplex> chain_battery(Ground ground, std::uint64_t seed = 0xC0FFEE);
/// Positively graded objects with top degree ≤ cap, dims ≤ 2.
std::vector<ChainComplex> positive_chain_battery(Ground ground, std::size_t cap, std::uint64_t seed = 0xC0FFEE);

}  // namespace mb
