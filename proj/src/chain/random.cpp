#include "mb/chain/random.hpp"

#include "mb/linalg/lattice.hpp"
#include "mb/linalg/rational.hpp"

#include <stdexcept>

namespace mb {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// A and A⁻¹ as products of elementary integer operations.
std::pair<IntMatrix, IntMatrix> random_unimodular_pair(Rng& rng, std::size_t n) {
  IntMatrix a = IntMatrix::identity(n), ainv = IntMatrix::identity(n);
  if (n == 0) return {a, ainv};
  for (std::size_t k = 0; k < 2 * n + 1; ++k) {
    std::size_t i = uniform(rng, 0, static_cast<int>(n) - 1), j = uniform(rng, 0, static_cast<int>(n) - 1);
    int f = uniform(rng, -2, 2);
    if (i == j || f == 0) {
      if (uniform(rng, 0, 3) == 0) {
        a.negate_row(i);
        ainv.negate_col(i);
      }
      continue;
    }
    a.add_row_multiple(i, j, Integer(f));      // A ← E A
    ainv.add_col_multiple(j, i, Integer(-f));  // A⁻¹ ← A⁻¹ E⁻¹
  }
  return {a, ainv};
}

// Random integer combination of the columns of `basis`, coefficients in [−2, 2].
RatMatrix random_combination(Rng& rng, const RatMatrix& basis) {
  RatMatrix v(basis.rows(), 1);
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    int k = uniform(rng, -2, 2);
    if (k == 0) continue;
    for (std::size_t r = 0; r < basis.rows(); ++r) v(r, 0) += basis(r, c) * k;
  }
  return v;
}

RatMatrix solution_space(const RatMatrix& eq, Ground ground) {
  if (ground == Ground::Q) return nullspace(eq);
  // Clear denominators row by row; the integer kernel is the honest ℤ-solution lattice.
  IntMatrix ie(eq.rows(), eq.cols());
  for (std::size_t i = 0; i < eq.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < eq.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), eq(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < eq.cols(); ++j) ie(i, j) = Rational(eq(i, j) * l).get_num();
  }
  return to_rational(integer_kernel(ie));
}

}  // namespace

SparseMatrix random_invertible(Rng& rng, std::size_t n, Ground) { return SparseMatrix::from_dense(random_unimodular_pair(rng, n).first); }

ChainComplex random_complex(Rng& rng, const RandomComplexSpec& spec) {
  const std::size_t start = spec.positive ? 1 : 0;
  const std::size_t len = spec.top + 1;
  std::vector<std::size_t> dims(len, 0);
  // Disk D^n contributes a top basis vector in degree n and a bottom one in n−1.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> disk_pairs(len);  // at degree n: (top idx, bottom idx in n−1)
  for (std::size_t n = start; n < len; ++n) {
    if (!spec.acyclic) {
      int spheres = uniform(rng, 0, 1);
      for (int s = 0; s < spheres && dims[n] < spec.max_dim; ++s) ++dims[n];
    }
  }
  for (std::size_t n = start + 1; n < len; ++n) {
    int disks = uniform(rng, 0, spec.acyclic ? 2 : 1);
    for (int s = 0; s < disks; ++s) {
      if (dims[n] >= spec.max_dim || dims[n - 1] >= spec.max_dim) break;
      disk_pairs[n].emplace_back(dims[n]++, dims[n - 1]++);
    }
  }
  std::vector<IntMatrix> d;
  for (std::size_t n = 1; n < len; ++n) {
    IntMatrix m(dims[n - 1], dims[n]);
    for (auto [top, bottom] : disk_pairs[n]) m(bottom, top) = 1;
    d.push_back(m);
  }
  std::vector<std::pair<IntMatrix, IntMatrix>> change;
  for (std::size_t n = 0; n < len; ++n) change.push_back(random_unimodular_pair(rng, dims[n]));
  std::vector<SparseMatrix> sd;
  for (std::size_t n = 1; n < len; ++n) sd.push_back(SparseMatrix::from_dense(change[n - 1].first * d[n - 1] * change[n].second));
  return ChainComplex(spec.ground, dims, sd);
}

ChainMap random_iso_from(Rng& rng, const ChainComplex& x) {
  std::vector<std::pair<IntMatrix, IntMatrix>> change;
  for (std::size_t n = 0; n < x.length(); ++n) change.push_back(random_unimodular_pair(rng, x.dim(n)));
  std::vector<SparseMatrix> d;
  for (std::size_t n = 1; n < x.length(); ++n) {
    d.push_back(SparseMatrix::from_dense(change[n - 1].first) * x.d(n) * SparseMatrix::from_dense(change[n].second));
  }
  ChainComplex y(x.ground(), x.dims(), d);
  std::vector<SparseMatrix> f;
  for (std::size_t n = 0; n < x.length(); ++n) f.push_back(SparseMatrix::from_dense(change[n].first));
  return ChainMap(x, y, f);
}

ChainMap random_chain_map(Rng& rng, const ChainComplex& x, const ChainComplex& y) {
  const std::size_t len = std::max(x.length(), y.length());
  std::vector<std::size_t> off(len + 1, 0);
  for (std::size_t n = 0; n < len; ++n) off[n + 1] = off[n] + y.dim(n) * x.dim(n);
  const std::size_t unknowns = off[len];
  std::size_t rows = 0;
  for (std::size_t n = 1; n < len; ++n) rows += y.dim(n - 1) * x.dim(n);
  RatMatrix eq(rows, unknowns);
  std::size_t r = 0;
  for (std::size_t n = 1; n < len; ++n) {
    RatMatrix dx = x.d(n).to_dense(), dy = y.d(n).to_dense();
    for (std::size_t i = 0; i < y.dim(n - 1); ++i) {
      for (std::size_t j = 0; j < x.dim(n); ++j, ++r) {
        // (f_{n−1} dX_n)[i][j] − (dY_n f_n)[i][j]
        for (std::size_t k = 0; k < x.dim(n - 1); ++k) eq(r, off[n - 1] + i * x.dim(n - 1) + k) += dx(k, j);
        for (std::size_t k = 0; k < y.dim(n); ++k) eq(r, off[n] + k * x.dim(n) + j) -= dy(i, k);
      }
    }
  }
  RatMatrix sol = unknowns ? random_combination(rng, solution_space(eq, x.ground())) : RatMatrix(0, 1);
  std::vector<SparseMatrix> f;
  for (std::size_t n = 0; n < len; ++n) {
    RatMatrix m(y.dim(n), x.dim(n));
    for (std::size_t i = 0; i < y.dim(n); ++i)
      for (std::size_t j = 0; j < x.dim(n); ++j) m(i, j) = sol(off[n] + i * x.dim(n) + j, 0);
    f.push_back(SparseMatrix::from_dense(m));
  }
  return ChainMap(x, y, f);
}

TwistedSum twisted_sum(const ChainComplex& x, const ChainComplex& q, const std::vector<SparseMatrix>& twist) {
  const std::size_t len = std::max(x.length(), q.length());
  std::vector<std::size_t> dims(len);
  for (std::size_t n = 0; n < len; ++n) dims[n] = x.dim(n) + q.dim(n);
  std::vector<SparseMatrix> d;
  for (std::size_t n = 1; n < len; ++n) {
    SparseMatrix t = n < twist.size() && twist[n].rows() == x.dim(n - 1) && twist[n].cols() == q.dim(n) ? twist[n] : SparseMatrix(x.dim(n - 1), q.dim(n));
    d.push_back(SparseMatrix::vstack(SparseMatrix::hstack(x.d(n), t), SparseMatrix::hstack(SparseMatrix(q.dim(n - 1), x.dim(n)), q.d(n))));
  }
  ChainComplex total(x.ground(), dims, d);
  std::vector<SparseMatrix> incl, quot;
  for (std::size_t n = 0; n < len; ++n) {
    incl.push_back(SparseMatrix::embed(SparseMatrix::identity(x.dim(n)), dims[n], x.dim(n), 0, 0));
    quot.push_back(SparseMatrix::embed(SparseMatrix::identity(q.dim(n)), q.dim(n), dims[n], 0, x.dim(n)));
  }
  std::vector<SparseMatrix> tw(len);
  for (std::size_t n = 0; n < len; ++n) {
    tw[n] = n >= 1 && n < twist.size() && twist[n].rows() == x.dim(n - 1) && twist[n].cols() == q.dim(n) ? twist[n]
                                                                                                          : SparseMatrix(n ? x.dim(n - 1) : 0, q.dim(n));
  }
  return TwistedSum{total, ChainMap(x, total, incl), ChainMap(total, q, quot), tw};
}

std::vector<SparseMatrix> random_twist(Rng& rng, const ChainComplex& x, const ChainComplex& q) {
  const std::size_t len = std::max(x.length(), q.length());
  // unknown t_n : Q_n → X_{n−1}, n = 1..len−1
  std::vector<std::size_t> off(len + 1, 0);
  for (std::size_t n = 0; n < len; ++n) off[n + 1] = off[n] + (n ? x.dim(n - 1) * q.dim(n) : 0);
  const std::size_t unknowns = off[len];
  std::size_t rows = 0;
  for (std::size_t n = 2; n < len; ++n) rows += x.dim(n - 2) * q.dim(n);
  RatMatrix eq(rows, unknowns);
  std::size_t r = 0;
  for (std::size_t n = 2; n < len; ++n) {
    RatMatrix dx = x.d(n - 1).to_dense(), dq = q.d(n).to_dense();
    for (std::size_t i = 0; i < x.dim(n - 2); ++i) {
      for (std::size_t j = 0; j < q.dim(n); ++j, ++r) {
        // (dX_{n−1} t_n + t_{n−1} dQ_n)[i][j]
        for (std::size_t k = 0; k < x.dim(n - 1); ++k) eq(r, off[n] + k * q.dim(n) + j) += dx(i, k);
        for (std::size_t k = 0; k < q.dim(n - 1); ++k) eq(r, off[n - 1] + i * q.dim(n - 1) + k) += dq(k, j);
      }
    }
  }
  RatMatrix sol = unknowns ? random_combination(rng, solution_space(eq, x.ground())) : RatMatrix(0, 1);
  std::vector<SparseMatrix> t(len);
  for (std::size_t n = 0; n < len; ++n) {
    if (n == 0) {
      t[n] = SparseMatrix(0, q.dim(0));
      continue;
    }
    RatMatrix m(x.dim(n - 1), q.dim(n));
    for (std::size_t i = 0; i < x.dim(n - 1); ++i)
      for (std::size_t j = 0; j < q.dim(n); ++j) m(i, j) = sol(off[n] + i * q.dim(n) + j, 0);
    t[n] = SparseMatrix::from_dense(m);
  }
  return t;
}

ChainMap random_quasi_iso(Rng& rng, const ChainComplex& x) {
  RandomComplexSpec spec;
  spec.ground = x.ground();
  spec.top = x.length() ? x.length() : 1;
  spec.max_dim = 2;
  spec.acyclic = true;
  ChainComplex d = random_complex(rng, spec);
  TwistedSum ts = twisted_sum(x, d, random_twist(rng, x, d));
  ChainMap iso = random_iso_from(rng, ts.total);
  return chain_compose(iso, ts.incl);
}

}  // namespace mb
