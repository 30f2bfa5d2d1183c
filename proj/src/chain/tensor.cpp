#include "mb/chain/tensor.hpp"

#include <stdexcept>

namespace mb {

TensorLayout::TensorLayout(const std::vector<std::size_t>& dx, const std::vector<std::size_t>& dy, std::size_t cap) : dx_(dx), dy_(dy) {
  std::size_t len = (dx.empty() || dy.empty()) ? 0 : dx.size() + dy.size() - 1;
  if (cap != kNoCap) len = std::min(len, cap + 1);
  dims_.assign(len, 0);
  offset_.assign(len, {});
  for (std::size_t n = 0; n < len; ++n) {
    offset_[n].assign(std::min(n, dx.size() - 1) + 1, 0);
    std::size_t acc = 0;
    for (std::size_t p = 0; p <= n && p < dx.size(); ++p) {
      offset_[n][p] = acc;
      std::size_t q = n - p;
      if (q < dy.size()) acc += dx[p] * dy[q];
    }
    dims_[n] = acc;
  }
}

ChainComplex chain_unit(Ground ground) { return ChainComplex::sphere(ground, 0, 1); }

ChainComplex chain_tensor(const ChainComplex& x, const ChainComplex& y, std::size_t cap) {
  if (x.ground() != y.ground()) throw std::invalid_argument("tensor over different grounds");
  TensorLayout L(x.dims(), y.dims(), cap);
  std::vector<SparseMatrix> d;
  for (std::size_t n = 1; n < L.length(); ++n) {
    SparseMatrix m(L.dim(n - 1), L.dim(n));
    for (std::size_t p = 0; p <= n; ++p) {
      std::size_t q = n - p;
      if (!L.has(p, q)) continue;
      const SparseMatrix& dxp = x.d(p);
      const SparseMatrix& dyq = y.d(q);
      for (std::size_t a = 0; a < x.dim(p); ++a) {
        for (std::size_t b = 0; b < y.dim(q); ++b) {
          std::size_t col = L.index(p, a, q, b);
          SparseMatrix::Column out;
          // dx⊗y lands in block p−1, which precedes block p; x⊗dy lands in block p.
          if (p >= 1) {
            for (const auto& [i, v] : dxp.column(a)) out.emplace_back(static_cast<std::uint32_t>(L.index(p - 1, i, q, b)), v);
          }
          if (q >= 1) {
            bool odd = p % 2 == 1;
            for (const auto& [k, v] : dyq.column(b)) out.emplace_back(static_cast<std::uint32_t>(L.index(p, a, q - 1, k)), odd ? Rational(-v) : v);
          }
          m.set_column(col, std::move(out));
        }
      }
    }
    d.push_back(std::move(m));
  }
  return ChainComplex(x.ground(), L.dims(), std::move(d));
}

ChainMap chain_tensor(const ChainMap& f, const ChainMap& g, std::size_t cap) {
  ChainComplex src = chain_tensor(f.src(), g.src(), cap), tgt = chain_tensor(f.tgt(), g.tgt(), cap);
  TensorLayout Ls(f.src().dims(), g.src().dims(), cap), Lt(f.tgt().dims(), g.tgt().dims(), cap);
  std::vector<SparseMatrix> out;
  for (std::size_t n = 0; n < std::max(src.length(), tgt.length()); ++n) {
    SparseMatrix m(tgt.dim(n), src.dim(n));
    for (std::size_t p = 0; p <= n; ++p) {
      std::size_t q = n - p;
      if (!Ls.has(p, q)) continue;
      const SparseMatrix& fp = f.at(p);
      const SparseMatrix& gq = g.at(q);
      for (std::size_t a = 0; a < f.src().dim(p); ++a) {
        for (std::size_t b = 0; b < g.src().dim(q); ++b) {
          SparseMatrix::Column col;
          for (const auto& [i, u] : fp.column(a)) {
            for (const auto& [k, v] : gq.column(b)) col.emplace_back(static_cast<std::uint32_t>(Lt.index(p, i, q, k)), u * v);
          }
          m.set_column(Ls.index(p, a, q, b), std::move(col));
        }
      }
    }
    out.push_back(std::move(m));
  }
  return ChainMap::trusted(src, tgt, std::move(out));
}

ChainMap chain_symmetry(const ChainComplex& x, const ChainComplex& y, std::size_t cap) {
  ChainComplex src = chain_tensor(x, y, cap), tgt = chain_tensor(y, x, cap);
  TensorLayout Ls(x.dims(), y.dims(), cap), Lt(y.dims(), x.dims(), cap);
  std::vector<SparseMatrix> out;
  for (std::size_t n = 0; n < src.length(); ++n) {
    SparseMatrix m(tgt.dim(n), src.dim(n));
    for (std::size_t p = 0; p <= n; ++p) {
      std::size_t q = n - p;
      if (!Ls.has(p, q)) continue;
      Rational sign = (p * q) % 2 ? -1 : 1;
      for (std::size_t a = 0; a < x.dim(p); ++a) {
        for (std::size_t b = 0; b < y.dim(q); ++b) m.push(Lt.index(q, b, p, a), Ls.index(p, a, q, b), sign);
      }
    }
    out.push_back(std::move(m));
  }
  return ChainMap::trusted(src, tgt, std::move(out));
}

namespace {

std::vector<std::vector<std::size_t>> associator_permutation(const ChainComplex& x, const ChainComplex& y, const ChainComplex& z,
                                                             std::size_t cap) {
  TensorLayout Lxy(x.dims(), y.dims(), cap);
  TensorLayout Lxy_z(Lxy.dims(), z.dims(), cap);
  TensorLayout Lyz(y.dims(), z.dims(), cap);
  TensorLayout Lx_yz(x.dims(), Lyz.dims(), cap);
  std::vector<std::vector<std::size_t>> perm(Lxy_z.length());
  for (std::size_t n = 0; n < Lxy_z.length(); ++n) perm[n].assign(Lxy_z.dim(n), 0);
  for (std::size_t p = 0; p < x.length(); ++p) {
    for (std::size_t q = 0; q < y.length() && p + q < Lxy.length(); ++q) {
      for (std::size_t r = 0; r < z.length() && p + q + r < Lxy_z.length(); ++r) {
        for (std::size_t a = 0; a < x.dim(p); ++a) {
          for (std::size_t b = 0; b < y.dim(q); ++b) {
            for (std::size_t c = 0; c < z.dim(r); ++c) {
              std::size_t src = Lxy_z.index(p + q, Lxy.index(p, a, q, b), r, c);
              std::size_t tgt = Lx_yz.index(p, a, q + r, Lyz.index(q, b, r, c));
              perm[p + q + r][src] = tgt;
            }
          }
        }
      }
    }
  }
  return perm;
}

}  // namespace

ChainMap chain_associator(const ChainComplex& x, const ChainComplex& y, const ChainComplex& z, std::size_t cap) {
  ChainComplex src = chain_tensor(chain_tensor(x, y, cap), z, cap);
  ChainComplex tgt = chain_tensor(x, chain_tensor(y, z, cap), cap);
  auto perm = associator_permutation(x, y, z, cap);
  std::vector<SparseMatrix> out;
  for (std::size_t n = 0; n < perm.size(); ++n) out.push_back(SparseMatrix::permutation(perm[n], tgt.dim(n)));
  return ChainMap::trusted(src, tgt, std::move(out));
}

ChainMap chain_associator_inv(const ChainComplex& x, const ChainComplex& y, const ChainComplex& z, std::size_t cap) {
  ChainComplex src = chain_tensor(x, chain_tensor(y, z, cap), cap);
  ChainComplex tgt = chain_tensor(chain_tensor(x, y, cap), z, cap);
  auto perm = associator_permutation(x, y, z, cap);
  std::vector<SparseMatrix> out;
  for (std::size_t n = 0; n < perm.size(); ++n) {
    std::vector<std::size_t> inv(perm[n].size());
    for (std::size_t i = 0; i < perm[n].size(); ++i) inv[perm[n][i]] = i;
    out.push_back(SparseMatrix::permutation(inv, tgt.dim(n)));
  }
  return ChainMap::trusted(src, tgt, std::move(out));
}

}  // namespace mb
