#pragma once

#include "mb/chain/complex.hpp"

namespace mb {

/// Cone(f)_n = X_{n−1} ⊕ Y_n with d(x,y) = (−dx, fx + dy), and the cofibre sequence Y ↣ Cone(f) → ΣX.
struct Cone {
  ChainComplex complex;
  ChainMap incl;
  ChainMap proj;
};
Cone mapping_cone(const ChainMap& f);

/// (ΣX)_n = X_{n−1}, d_Σ = −d.
ChainComplex suspension(const ChainComplex& x);
ChainMap suspension(const ChainMap& f);

struct ChainCokernel {
  ChainComplex complex;
  ChainMap q;
  std::vector<SparseMatrix> section;  // q_n ∘ section_n = id, degreewise only
};
/// Y / im f. Over ℤ the image must be saturated in every degree.
ChainCokernel chain_cokernel(const ChainMap& f);

struct ChainKernel {
  ChainComplex complex;
  ChainMap i;
};
ChainKernel chain_kernel(const ChainMap& f);

/// h with h∘q = g; q degreewise surjective, g vanishing on ker q.
ChainMap chain_factor_through_epi(const ChainMap& q, const ChainMap& g);
/// h with i∘h = g; i degreewise injective, im g ⊆ im i.
ChainMap chain_factor_through_mono(const ChainMap& i, const ChainMap& g);

/// Pushout of B ← A → C as the cokernel of (f, −g): A → B ⊕ C.
struct Pushout {
  ChainComplex complex;
  ChainMap from_b;
  ChainMap from_c;
};
Pushout pushout(const ChainMap& f, const ChainMap& g);

/// ℚ: degreewise injective. ℤ: degreewise injective with free cokernel.
bool is_cofibration(const ChainMap& f);

}  // namespace mb
