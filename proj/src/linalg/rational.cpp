#include "mb/linalg/rational.hpp"

#include <stdexcept>

namespace mb {

Rref rref(RatMatrix a) {
  Rref out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(row, pivot);
    Rational inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) {
      if (a(row, j) != 0) a(row, j) *= inv;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != row && a(i, col) != 0) a.add_row_multiple(i, row, Rational(-a(i, col)));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const RatMatrix& a) {
  // Forward elimination only; cheaper than a full reduction.
  RatMatrix m = a;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      if (m(i, col) != 0) m.add_row_multiple(i, row, Rational(-m(i, col) / m(row, col)));
    }
    ++row;
  }
  return row;
}

std::size_t rank(const SparseMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  // Sparse row echelon: keep a map pivot-row -> reduced column.
  std::vector<SparseMatrix::Column> basis(a.rows());
  std::vector<char> has(a.rows(), 0);
  std::size_t r = 0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    SparseMatrix::Column v = a.column(j);
    while (!v.empty()) {
      auto lead = v.front().first;
      if (!has[lead]) {
        basis[lead] = v;
        has[lead] = 1;
        ++r;
        break;
      }
      const auto& b = basis[lead];
      Rational factor = v.front().second / b.front().second;
      SparseMatrix::Column out;
      std::size_t x = 0, y = 0;
      while (x < v.size() || y < b.size()) {
        if (y == b.size() || (x < v.size() && v[x].first < b[y].first)) {
          out.push_back(v[x++]);
        } else if (x == v.size() || b[y].first < v[x].first) {
          out.emplace_back(b[y].first, -factor * b[y].second);
          ++y;
        } else {
          Rational w = v[x].second - factor * b[y].second;
          if (w != 0) out.emplace_back(v[x].first, std::move(w));
          ++x;
          ++y;
        }
      }
      v = std::move(out);
    }
  }
  return r;
}

RatMatrix nullspace(const RatMatrix& a) {
  Rref r = rref(a);
  std::vector<char> is_pivot(a.cols(), 0);
  for (auto p : r.pivots) is_pivot[p] = 1;
  std::size_t k = a.cols() - r.pivots.size();
  RatMatrix out(a.cols(), k);
  std::size_t c = 0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (is_pivot[j]) continue;
    out(j, c) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) out(r.pivots[i], c) = -r.reduced(i, j);
    ++c;
  }
  return out;
}

RatMatrix column_basis(const RatMatrix& a) {
  Rref r = rref(a);
  return a.select_columns(r.pivots);
}

std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  Rref r = rref(RatMatrix::hstack(a, b));
  RatMatrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.reduced(i, a.cols() + j);
  }
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, RatMatrix::identity(a.rows()));
}

RatQuotient quotient_by(const RatMatrix& w, std::size_t n) {
  if (w.rows() != n) throw std::invalid_argument("quotient_by shape mismatch");
  // Row-reduce the spanning vectors; the non-pivot coordinates parametrize the quotient.
  Rref r = rref(w.transpose());
  std::vector<char> is_pivot(n, 0);
  for (auto p : r.pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) free.push_back(j);
  }
  RatQuotient out{SparseMatrix(free.size(), n), SparseMatrix(n, free.size())};
  // q(v)_f = v_f - sum_p v_p R[p, f]
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) {
      std::size_t prow = 0;
      while (r.pivots[prow] != c) ++prow;
      for (std::size_t k = 0; k < free.size(); ++k) {
        const Rational& v = r.reduced(prow, free[k]);
        if (v != 0) out.q.push(k, c, Rational(-v));
      }
    } else {
      std::size_t k = 0;
      while (free[k] != c) ++k;
      out.q.push(k, c, Rational(1));
    }
  }
  for (std::size_t k = 0; k < free.size(); ++k) out.s.push(free[k], k, Rational(1));
  return out;
}

}  // namespace mb
