#pragma once

#include "mb/linalg/matrix.hpp"
#include "mb/linalg/sparse.hpp"

#include <optional>
#include <vector>

namespace mb {

struct Rref {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Rref rref(RatMatrix a);
std::size_t rank(const RatMatrix& a);
std::size_t rank(const SparseMatrix& a);

/// Columns form a basis of {x : a x = 0}.
RatMatrix nullspace(const RatMatrix& a);
/// Columns form a basis of the column span of a (a subset of a's columns).
RatMatrix column_basis(const RatMatrix& a);

/// Some x with a x = b, if one exists.
std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b);
std::optional<RatMatrix> inverse(const RatMatrix& a);

/// Splitting of ℚ^n along a subspace W: q: ℚ^n → ℚ^n/W and a section s with q s = id.
struct RatQuotient {
  SparseMatrix q;
  SparseMatrix s;
};
/// W is spanned by the columns of `w` (any spanning set).
RatQuotient quotient_by(const RatMatrix& w, std::size_t n);

}  // namespace mb
