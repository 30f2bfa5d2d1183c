#include "mb/linalg/lattice.hpp"

#include <stdexcept>

namespace mb {

IntMatrix integer_kernel(const IntMatrix& a) {
  auto s = smith_normal_form(a);
  std::vector<std::size_t> cols;
  for (std::size_t j = s.rank; j < a.cols(); ++j) cols.push_back(j);
  return s.Q.select_columns(cols);
}

IntMatrix lattice_basis(const IntMatrix& a) {
  auto s = smith_normal_form(a);
  IntMatrix out(a.rows(), s.rank);
  for (std::size_t j = 0; j < s.rank; ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = s.U(i, j) * s.D(j, j);
  }
  return out;
}

bool is_saturated(const IntMatrix& a) {
  auto s = smith_normal_form(a);
  for (std::size_t i = 0; i < s.rank; ++i) {
    if (s.D(i, i) != 1) return false;
  }
  return true;
}

LatticeSolver::LatticeSolver(const IntMatrix& b) : rows_(b.rows()), cols_(b.cols()), snf_(smith_normal_form(b)) {}

std::optional<IntVector> LatticeSolver::solve(const IntVector& rhs) const {
  if (rhs.size() != rows_) throw std::invalid_argument("lattice solve shape mismatch");
  // B = U D V  ⇒  D (V y) = P rhs.
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < rows_; ++k) {
      if (snf_.P(i, k) != 0 && rhs[k] != 0) c[i] += snf_.P(i, k) * rhs[k];
    }
  }
  IntVector z(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i < snf_.rank) {
      const Integer& d = snf_.D(i, i);
      if (c[i] % d != 0) return std::nullopt;
      z[i] = c[i] / d;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  IntVector y(cols_);
  for (std::size_t i = 0; i < cols_; ++i) {
    for (std::size_t k = 0; k < snf_.rank; ++k) {
      if (snf_.Q(i, k) != 0 && z[k] != 0) y[i] += snf_.Q(i, k) * z[k];
    }
  }
  return y;
}

std::optional<IntMatrix> LatticeSolver::solve(const IntMatrix& rhs) const {
  IntMatrix out(cols_, rhs.cols());
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    auto y = solve(column_of(rhs, j));
    if (!y) return std::nullopt;
    for (std::size_t i = 0; i < cols_; ++i) out(i, j) = (*y)[i];
  }
  return out;
}

IntVector column_of(const IntMatrix& m, std::size_t j) { return m.column_vector(j); }

IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix out(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = columns[j][i];
  }
  return out;
}

}  // namespace mb
