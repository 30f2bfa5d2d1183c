#pragma once

#include "mb/linalg/matrix.hpp"

#include <vector>

namespace mb {

/// A = U·D·V with U, V unimodular and D diagonal, d₀ | d₁ | … and dᵢ ≥ 0.
/// P = U⁻¹ and Q = V⁻¹ are kept as well, so P·A·Q = D.
struct SmithDecomposition {
  IntMatrix U, D, V;
  IntMatrix P, Q;
  std::size_t rank = 0;

  /// Nonzero diagonal entries, in order.
  std::vector<Integer> invariants() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Determinant by fraction-free elimination (Bareiss).
Integer determinant(IntMatrix a);

}  // namespace mb
