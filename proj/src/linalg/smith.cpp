#include "mb/linalg/smith.hpp"

#include <stdexcept>

namespace mb {

namespace {

// Bundles A with the four transformation matrices so every elementary
// operation is applied consistently.
struct Workspace {
  IntMatrix A, P, U, Q, V;

  void swap_rows(std::size_t i, std::size_t j) {
    A.swap_rows(i, j);
    P.swap_rows(i, j);
    U.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    A.swap_cols(i, j);
    Q.swap_cols(i, j);
    V.swap_rows(i, j);
  }
  // row dst += f * row src
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    A.add_row_multiple(dst, src, f);
    P.add_row_multiple(dst, src, f);
    U.add_col_multiple(src, dst, Integer(-f));
  }
  // col dst += f * col src
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    A.add_col_multiple(dst, src, f);
    Q.add_col_multiple(dst, src, f);
    V.add_row_multiple(src, dst, Integer(-f));
  }
  void negate_row(std::size_t i) {
    A.negate_row(i);
    P.negate_row(i);
    U.negate_col(i);
  }
};

// Floor-free quotient rounding toward zero keeps remainders with |r| < |pivot|.
Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<Integer> SmithDecomposition::invariants() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  Workspace w{a, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(n)};
  std::size_t t = 0;
  for (; t < m && t < n; ++t) {
    while (true) {
      // Smallest nonzero |entry| in the trailing block.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (w.A(i, j) == 0) continue;
          if (pi == m || abs(w.A(i, j)) < abs(w.A(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == m) goto done;
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (w.A(i, t) == 0) continue;
        w.add_row(i, t, Integer(-tdiv(w.A(i, t), w.A(t, t))));
        if (w.A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w.A(t, j) == 0) continue;
        w.add_col(j, t, Integer(-tdiv(w.A(t, j), w.A(t, t))));
        if (w.A(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and go again.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (w.A(i, j) % w.A(t, t) != 0) {
            w.add_row(t, i, Integer(1));
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (w.A(t, t) < 0) w.negate_row(t);
  }
done:
  SmithDecomposition out;
  out.rank = t;
  out.D = std::move(w.A);
  out.U = std::move(w.U);
  out.V = std::move(w.V);
  out.P = std::move(w.P);
  out.Q = std::move(w.Q);
  return out;
}

Integer determinant(IntMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      a.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace mb
