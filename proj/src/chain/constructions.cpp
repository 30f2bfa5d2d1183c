#include "mb/chain/constructions.hpp"

#include "mb/linalg/lattice.hpp"
#include "mb/linalg/rational.hpp"

#include <stdexcept>

namespace mb {

namespace {

SparseMatrix block2x2(const SparseMatrix& a, const SparseMatrix& b, const SparseMatrix& c, const SparseMatrix& d) {
  return SparseMatrix::vstack(SparseMatrix::hstack(a, b), SparseMatrix::hstack(c, d));
}

// Component of f in degree n with the right shape even where f stores nothing.
SparseMatrix component(const ChainMap& f, std::size_t n) {
  const SparseMatrix& m = f.at(n);
  if (m.rows() == f.tgt().dim(n) && m.cols() == f.src().dim(n)) return m;
  return SparseMatrix(f.tgt().dim(n), f.src().dim(n));
}

// Shifted view: X_{n−1}, zero for n = 0.
std::size_t shifted_dim(const ChainComplex& x, std::size_t n) { return n == 0 ? 0 : x.dim(n - 1); }

SparseMatrix shifted_d(const ChainComplex& x, std::size_t n) {
  // (ΣX) differential in degree n: X_{n−1} → X_{n−2}
  if (n == 0) return SparseMatrix(0, 0);
  if (n == 1) return SparseMatrix(0, x.dim(0));
  return x.d(n - 1);
}

}  // namespace

Cone mapping_cone(const ChainMap& f) {
  const ChainComplex& x = f.src();
  const ChainComplex& y = f.tgt();
  const std::size_t len = std::max(x.length() + 1, y.length());
  std::vector<std::size_t> dims(len);
  for (std::size_t n = 0; n < len; ++n) dims[n] = shifted_dim(x, n) + y.dim(n);
  std::vector<SparseMatrix> d;
  for (std::size_t n = 1; n < len; ++n) {
    SparseMatrix dx = -shifted_d(x, n);
    SparseMatrix fx = n >= 1 ? component(f, n - 1) : SparseMatrix(y.dim(n - 1), 0);
    SparseMatrix zero(shifted_dim(x, n - 1), y.dim(n));
    d.push_back(block2x2(dx, zero, fx, y.d(n)));
  }
  ChainComplex c(x.ground(), dims, d);
  ChainComplex sx = suspension(x);

  std::vector<SparseMatrix> incl, proj;
  for (std::size_t n = 0; n < len; ++n) {
    incl.push_back(SparseMatrix::embed(SparseMatrix::identity(y.dim(n)), dims[n], y.dim(n), shifted_dim(x, n), 0));
    proj.push_back(SparseMatrix::embed(SparseMatrix::identity(shifted_dim(x, n)), shifted_dim(x, n), dims[n], 0, 0));
  }
  return Cone{c, ChainMap::trusted(y, c, std::move(incl)), ChainMap::trusted(c, sx, std::move(proj))};
}

ChainComplex suspension(const ChainComplex& x) {
  if (x.length() == 0) return ChainComplex(x.ground());
  const std::size_t len = x.length() + 1;
  std::vector<std::size_t> dims(len);
  for (std::size_t n = 0; n < len; ++n) dims[n] = shifted_dim(x, n);
  std::vector<SparseMatrix> d;
  for (std::size_t n = 1; n < len; ++n) d.push_back(-shifted_d(x, n));
  return ChainComplex(x.ground(), dims, d);
}

ChainMap suspension(const ChainMap& f) {
  ChainComplex s = suspension(f.src()), t = suspension(f.tgt());
  std::vector<SparseMatrix> out;
  for (std::size_t n = 0; n < std::max(s.length(), t.length()); ++n) {
    out.push_back(n == 0 ? SparseMatrix(0, 0) : component(f, n - 1));
  }
  return ChainMap::trusted(s, t, std::move(out));
}

ChainCokernel chain_cokernel(const ChainMap& f) {
  const ChainComplex& y = f.tgt();
  const Ground ground = y.ground();
  std::vector<SparseMatrix> q(y.length()), s(y.length());
  std::vector<std::size_t> dims(y.length());
  for (std::size_t n = 0; n < y.length(); ++n) {
    SparseMatrix fn = component(f, n);
    if (ground == Ground::Q) {
      auto split = quotient_by(fn.to_dense(), y.dim(n));
      q[n] = std::move(split.q);
      s[n] = std::move(split.s);
    } else {
      auto snf = smith_normal_form(fn.to_int_dense());
      for (std::size_t i = 0; i < snf.rank; ++i) {
        if (snf.D(i, i) != 1) throw std::domain_error("cokernel over Z has torsion in degree " + std::to_string(n));
      }
      std::vector<std::size_t> rest;
      for (std::size_t i = snf.rank; i < y.dim(n); ++i) rest.push_back(i);
      q[n] = SparseMatrix::from_dense(snf.P.select_rows(rest));
      s[n] = SparseMatrix::from_dense(snf.U.select_columns(rest));
    }
    dims[n] = q[n].rows();
  }
  std::vector<SparseMatrix> d;
  for (std::size_t n = 1; n < y.length(); ++n) d.push_back(q[n - 1] * y.d(n) * s[n]);
  ChainComplex c(ground, dims, d);
  ChainMap qm = ChainMap::trusted(y, c, q);
  return ChainCokernel{c, qm, s};
}

ChainKernel chain_kernel(const ChainMap& f) {
  const ChainComplex& x = f.src();
  std::vector<SparseMatrix> basis(x.length());
  std::vector<std::size_t> dims(x.length());
  for (std::size_t n = 0; n < x.length(); ++n) {
    SparseMatrix fn = component(f, n);
    if (x.ground() == Ground::Q) {
      basis[n] = fn.rows() ? SparseMatrix::from_dense(nullspace(fn.to_dense())) : SparseMatrix::identity(x.dim(n));
    } else {
      basis[n] = fn.rows() ? SparseMatrix::from_dense(integer_kernel(fn.to_int_dense())) : SparseMatrix::identity(x.dim(n));
    }
    dims[n] = basis[n].cols();
  }
  std::vector<SparseMatrix> d;
  for (std::size_t n = 1; n < x.length(); ++n) {
    SparseMatrix image = x.d(n) * basis[n];
    if (x.ground() == Ground::Q) {
      auto sol = solve(basis[n - 1].to_dense(), image.to_dense());
      if (!sol) throw std::logic_error("kernel is not a subcomplex");
      d.push_back(SparseMatrix::from_dense(*sol));
    } else {
      auto sol = LatticeSolver(basis[n - 1].to_int_dense()).solve(image.to_int_dense());
      if (!sol) throw std::logic_error("kernel is not a subcomplex");
      d.push_back(SparseMatrix::from_dense(*sol));
    }
  }
  ChainComplex k(x.ground(), dims, d);
  return ChainKernel{k, ChainMap::trusted(k, x, basis)};
}

ChainMap chain_factor_through_epi(const ChainMap& q, const ChainMap& g) {
  if (q.src() != g.src()) throw std::invalid_argument("factor_through_epi: different sources");
  const ChainComplex& c = q.tgt();
  std::vector<SparseMatrix> h;
  for (std::size_t n = 0; n < std::max(c.length(), g.tgt().length()); ++n) {
    if (c.dim(n) == 0) {
      h.emplace_back(g.tgt().dim(n), 0);
      continue;
    }
    SparseMatrix qn = component(q, n);
    SparseMatrix section;
    if (c.ground() == Ground::Q) {
      auto sol = solve(qn.to_dense(), RatMatrix::identity(c.dim(n)));
      if (!sol) throw std::invalid_argument("factor_through_epi: not surjective in degree " + std::to_string(n));
      section = SparseMatrix::from_dense(*sol);
    } else {
      auto sol = LatticeSolver(qn.to_int_dense()).solve(IntMatrix::identity(c.dim(n)));
      if (!sol) throw std::invalid_argument("factor_through_epi: not surjective in degree " + std::to_string(n));
      section = SparseMatrix::from_dense(*sol);
    }
    h.push_back(component(g, n) * section);
  }
  ChainMap out(c, g.tgt(), std::move(h));
  if (!chain_equal(chain_compose(out, q), g)) throw std::invalid_argument("factor_through_epi: g does not vanish on ker q");
  return out;
}

ChainMap chain_factor_through_mono(const ChainMap& i, const ChainMap& g) {
  if (i.tgt() != g.tgt()) throw std::invalid_argument("factor_through_mono: different targets");
  const ChainComplex& k = i.src();
  std::vector<SparseMatrix> h;
  for (std::size_t n = 0; n < std::max(k.length(), g.src().length()); ++n) {
    if (k.dim(n) == 0 || g.src().dim(n) == 0) {
      h.emplace_back(k.dim(n), g.src().dim(n));
      continue;
    }
    SparseMatrix in = component(i, n), gn = component(g, n);
    if (k.ground() == Ground::Q) {
      auto sol = solve(in.to_dense(), gn.to_dense());
      if (!sol) throw std::invalid_argument("factor_through_mono: image not contained in degree " + std::to_string(n));
      h.push_back(SparseMatrix::from_dense(*sol));
    } else {
      auto sol = LatticeSolver(in.to_int_dense()).solve(gn.to_int_dense());
      if (!sol) throw std::invalid_argument("factor_through_mono: image not contained in degree " + std::to_string(n));
      h.push_back(SparseMatrix::from_dense(*sol));
    }
  }
  return ChainMap::trusted(g.src(), k, std::move(h));
}

Pushout pushout(const ChainMap& f, const ChainMap& g) {
  if (f.src() != g.src()) throw std::invalid_argument("pushout: maps need a common source");
  ChainMap diff = chain_pair(f, chain_negate(g));
  auto ck = chain_cokernel(diff);
  ChainMap from_b = chain_compose(ck.q, chain_inj1(f.tgt(), g.tgt()));
  ChainMap from_c = chain_compose(ck.q, chain_inj2(f.tgt(), g.tgt()));
  return Pushout{ck.complex, from_b, from_c};
}

bool is_cofibration(const ChainMap& f) {
  if (!chain_is_injective(f)) return false;
  if (f.src().ground() == Ground::Q) return true;
  for (std::size_t n = 0; n < f.length(); ++n) {
    if (f.tgt().dim(n) == 0 || f.src().dim(n) == 0) continue;
    if (!is_saturated(component(f, n).to_int_dense())) return false;
  }
  return true;
}

}  // namespace mb
