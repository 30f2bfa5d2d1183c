#pragma once

#include "mb/linalg/matrix.hpp"
#include "mb/linalg/smith.hpp"

#include <optional>

namespace mb {

/// Columns form a ℤ-basis of {x ∈ ℤⁿ : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Columns form a ℤ-basis of the lattice spanned by the columns of `a`.
IntMatrix lattice_basis(const IntMatrix& a);

/// True iff the column lattice of `a` is saturated in ℤ^rows (ℤ^rows / lattice is free).
bool is_saturated(const IntMatrix& a);

/// Integer solutions of B y = b, reusing one Smith decomposition of B.
class LatticeSolver {
 public:
  explicit LatticeSolver(const IntMatrix& b);

  std::optional<IntVector> solve(const IntVector& rhs) const;
  std::optional<IntMatrix> solve(const IntMatrix& rhs) const;
  bool contains(const IntVector& v) const { return solve(v).has_value(); }

  std::size_t ambient() const { return rows_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  SmithDecomposition snf_;
};

IntVector column_of(const IntMatrix& m, std::size_t j);
IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

}  // namespace mb
