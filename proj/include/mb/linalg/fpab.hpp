#pragma once

#include "mb/linalg/lattice.hpp"
#include "mb/linalg/matrix.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mb {

/// ℤ^gens modulo the column span of `rel` (gens × m).
struct FpGroup {
  std::size_t gens = 0;
  IntMatrix rel;

  static FpGroup free(std::size_t n);
  static FpGroup cyclic(const Integer& order);
  static FpGroup presented(IntMatrix relations);
  /// ⊕ of cyclic groups; 0 means ℤ.
  static FpGroup sum_of_cyclics(const std::vector<long>& orders);

  bool operator==(const FpGroup& other) const { return gens == other.gens && rel == other.rel; }
  bool operator!=(const FpGroup& other) const { return !(*this == other); }
};

struct FpCanonical {
  std::size_t rank = 0;
  std::vector<Integer> factors;  // ascending chain, each ≥ 2

  bool operator==(const FpCanonical& other) const { return rank == other.rank && factors == other.factors; }
  bool is_zero() const { return rank == 0 && factors.empty(); }
  std::string str() const;
};

FpCanonical fp_canonical(const FpGroup& g);
/// Element count of a finite group, nullopt when the free rank is positive.
std::optional<Integer> fp_order(const FpGroup& g);
bool fp_element_is_zero(const FpGroup& g, const IntVector& v);

/// Generator-image matrix m (tgt.gens × src.gens).
struct FpMorphism {
  FpGroup src, tgt;
  IntMatrix m;
};

bool fp_well_defined(const FpGroup& src, const FpGroup& tgt, const IntMatrix& m);
/// Validating constructor; throws std::invalid_argument on ill-defined data.
FpMorphism fp_morphism(FpGroup src, FpGroup tgt, IntMatrix m);
FpMorphism fp_identity(const FpGroup& g);
FpMorphism fp_zero(const FpGroup& src, const FpGroup& tgt);
FpMorphism fp_compose(const FpMorphism& g, const FpMorphism& f);  // g ∘ f
FpMorphism fp_add(const FpMorphism& f, const FpMorphism& g);
FpMorphism fp_negate(const FpMorphism& f);
bool fp_equal(const FpMorphism& f, const FpMorphism& g);
bool fp_is_injective(const FpMorphism& f);
bool fp_is_surjective(const FpMorphism& f);
bool fp_is_iso(const FpMorphism& f);
std::optional<FpMorphism> fp_inverse(const FpMorphism& f);

/// Smaller presentation with mutually inverse coordinate changes.
struct FpSimplified {
  FpGroup group;
  IntMatrix to;    // new.gens × old.gens
  IntMatrix from;  // old.gens × new.gens
};
FpSimplified fp_simplify(const FpGroup& g);

struct FpKernel {
  FpGroup group;
  FpMorphism inclusion;
};
struct FpCokernel {
  FpGroup group;
  FpMorphism projection;
};
FpKernel fp_kernel(const FpMorphism& f);
FpCokernel fp_cokernel(const FpMorphism& f);
/// h with h ∘ q = g, for q surjective and g vanishing on ker q.
FpMorphism fp_factor_through_epi(const FpMorphism& q, const FpMorphism& g);
/// h with i ∘ h = g, for i injective and im g ⊆ im i.
FpMorphism fp_factor_through_mono(const FpMorphism& i, const FpMorphism& g);

FpGroup fp_direct_sum(const FpGroup& a, const FpGroup& b);
/// Generators e_i ⊗ f_j at index i·|H| + j.
FpGroup fp_tensor(const FpGroup& g, const FpGroup& h);
FpMorphism fp_tensor(const FpMorphism& f, const FpMorphism& g);

/// Hom_ℤ(G,H) with each generator tagged by the generator-image matrix it stands for.
struct FpHom {
  FpGroup src, tgt;
  FpGroup group;
  std::vector<IntMatrix> generators;
  // Valid matrices form the lattice spanned by `basis` (vectorized row-major);
  // `to` carries basis coordinates into the simplified presentation.
  IntMatrix basis;
  IntMatrix to;
  std::shared_ptr<const LatticeSolver> solver;
};

FpGroup fp_hom_group(const FpGroup& g, const FpGroup& h);
FpHom fp_hom(const FpGroup& g, const FpGroup& h);
IntVector fp_hom_coordinates(const FpHom& hom, const IntMatrix& m);
IntMatrix fp_hom_matrix(const FpHom& hom, const IntVector& coords);
/// ev: Hom(G,H) ⊗ G → H.
FpMorphism fp_eval(const FpHom& hom);
/// f: X⊗Y → Z gives X → Hom(Y,Z).
FpMorphism fp_curry(const FpMorphism& f, const FpGroup& x, const FpHom& hom_yz);
/// g: X → Hom(Y,Z) gives X⊗Y → Z.
FpMorphism fp_uncurry(const FpMorphism& g, const FpHom& hom_yz);
/// coev: X → Hom(Y, X⊗Y).
FpMorphism fp_coev(const FpGroup& x, const FpHom& hom_y_xy);

std::string to_string(const FpGroup& g);

}  // namespace mb
