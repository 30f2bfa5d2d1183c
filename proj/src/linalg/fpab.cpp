#include "mb/linalg/fpab.hpp"

#include <sstream>
#include <stdexcept>

namespace mb {

FpGroup FpGroup::free(std::size_t n) { return FpGroup{n, IntMatrix(n, 0)}; }

FpGroup FpGroup::cyclic(const Integer& order) {
  IntMatrix r(1, 1);
  r(0, 0) = order;
  return FpGroup{1, r};
}

FpGroup FpGroup::presented(IntMatrix relations) {
  std::size_t n = relations.rows();
  return FpGroup{n, std::move(relations)};
}

FpGroup FpGroup::sum_of_cyclics(const std::vector<long>& orders) {
  std::size_t torsion = 0;
  for (long o : orders) torsion += (o != 0);
  IntMatrix r(orders.size(), torsion);
  std::size_t c = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] != 0) r(i, c++) = orders[i];
  }
  return FpGroup{orders.size(), r};
}

std::string FpCanonical::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors) {
    os << (first ? "" : "+") << "Z/" << f.get_str();
    first = false;
  }
  if (rank > 0) {
    os << (first ? "" : "+") << "Z";
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

FpCanonical fp_canonical(const FpGroup& g) {
  auto s = smith_normal_form(g.rel);
  FpCanonical out;
  out.rank = g.gens - s.rank;
  for (std::size_t i = 0; i < s.rank; ++i) {
    if (s.D(i, i) != 1) out.factors.push_back(s.D(i, i));
  }
  return out;
}

std::optional<Integer> fp_order(const FpGroup& g) {
  auto c = fp_canonical(g);
  if (c.rank > 0) return std::nullopt;
  Integer n = 1;
  for (const auto& f : c.factors) n *= f;
  return n;
}

bool fp_element_is_zero(const FpGroup& g, const IntVector& v) { return LatticeSolver(g.rel).contains(v); }

bool fp_well_defined(const FpGroup& src, const FpGroup& tgt, const IntMatrix& m) {
  if (m.rows() != tgt.gens || m.cols() != src.gens) return false;
  if (src.rel.cols() == 0) return true;
  return LatticeSolver(tgt.rel).solve(m * src.rel).has_value();
}

FpMorphism fp_morphism(FpGroup src, FpGroup tgt, IntMatrix m) {
  if (!fp_well_defined(src, tgt, m)) throw std::invalid_argument("ill-defined group homomorphism");
  return FpMorphism{std::move(src), std::move(tgt), std::move(m)};
}

FpMorphism fp_identity(const FpGroup& g) { return FpMorphism{g, g, IntMatrix::identity(g.gens)}; }

FpMorphism fp_zero(const FpGroup& src, const FpGroup& tgt) { return FpMorphism{src, tgt, IntMatrix(tgt.gens, src.gens)}; }

FpMorphism fp_compose(const FpMorphism& g, const FpMorphism& f) {
  if (f.tgt != g.src) throw std::invalid_argument("composing non-composable group maps");
  return FpMorphism{f.src, g.tgt, g.m * f.m};
}

FpMorphism fp_add(const FpMorphism& f, const FpMorphism& g) {
  if (f.src != g.src || f.tgt != g.tgt) throw std::invalid_argument("adding maps with different ends");
  return FpMorphism{f.src, f.tgt, f.m + g.m};
}

FpMorphism fp_negate(const FpMorphism& f) { return FpMorphism{f.src, f.tgt, -f.m}; }

bool fp_equal(const FpMorphism& f, const FpMorphism& g) {
  if (f.src != g.src || f.tgt != g.tgt) return false;
  IntMatrix diff = f.m - g.m;
  if (diff.is_zero()) return true;
  return LatticeSolver(f.tgt.rel).solve(diff).has_value();
}

namespace {

// Integer kernel of [m | rel_tgt], cut down to the source coordinates.
IntMatrix preimage_of_zero(const FpMorphism& f) {
  IntMatrix k = integer_kernel(IntMatrix::hstack(f.m, f.tgt.rel));
  return k.block(0, 0, f.src.gens, k.cols());
}

}  // namespace

bool fp_is_injective(const FpMorphism& f) {
  IntMatrix k = preimage_of_zero(f);
  if (k.cols() == 0) return true;
  return LatticeSolver(f.src.rel).solve(k).has_value();
}

bool fp_is_surjective(const FpMorphism& f) {
  LatticeSolver solver(IntMatrix::hstack(f.m, f.tgt.rel));
  return solver.solve(IntMatrix::identity(f.tgt.gens)).has_value();
}

bool fp_is_iso(const FpMorphism& f) {
  if (!fp_well_defined(f.src, f.tgt, f.m)) throw std::invalid_argument("fp_is_iso on ill-defined map");
  return fp_is_surjective(f) && fp_is_injective(f);
}

std::optional<FpMorphism> fp_inverse(const FpMorphism& f) {
  if (!fp_is_iso(f)) return std::nullopt;
  LatticeSolver solver(IntMatrix::hstack(f.m, f.tgt.rel));
  auto y = solver.solve(IntMatrix::identity(f.tgt.gens));
  return FpMorphism{f.tgt, f.src, y->block(0, 0, f.src.gens, f.tgt.gens)};
}

FpSimplified fp_simplify(const FpGroup& g) {
  auto s = smith_normal_form(g.rel);
  std::vector<std::size_t> keep;
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < g.gens; ++i) {
    if (i < s.rank && s.D(i, i) == 1) continue;
    keep.push_back(i);
    orders.push_back(i < s.rank ? s.D(i, i) : Integer(0));
  }
  std::size_t torsion = 0;
  for (const auto& o : orders) torsion += (o != 0);
  IntMatrix rel(keep.size(), torsion);
  std::size_t c = 0;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (orders[i] != 0) rel(i, c++) = orders[i];
  }
  FpSimplified out;
  out.group = FpGroup{keep.size(), rel};
  out.to = s.P.select_rows(keep);
  out.from = s.U.select_columns(keep);
  return out;
}

FpKernel fp_kernel(const FpMorphism& f) {
  IntMatrix span = preimage_of_zero(f);
  IntMatrix basis = lattice_basis(IntMatrix::hstack(span, f.src.rel));
  LatticeSolver solver(basis);
  auto rel = solver.solve(f.src.rel);
  if (!rel) throw std::logic_error("kernel lattice misses source relations");
  FpGroup raw{basis.cols(), *rel};
  auto simp = fp_simplify(raw);
  return FpKernel{simp.group, FpMorphism{simp.group, f.src, basis * simp.from}};
}

FpCokernel fp_cokernel(const FpMorphism& f) {
  FpGroup c{f.tgt.gens, IntMatrix::hstack(f.tgt.rel, f.m)};
  return FpCokernel{c, FpMorphism{f.tgt, c, IntMatrix::identity(f.tgt.gens)}};
}

FpMorphism fp_factor_through_epi(const FpMorphism& q, const FpMorphism& g) {
  if (q.src != g.src) throw std::invalid_argument("factor_through_epi: different sources");
  LatticeSolver solver(IntMatrix::hstack(q.m, q.tgt.rel));
  auto y = solver.solve(IntMatrix::identity(q.tgt.gens));
  if (!y) throw std::invalid_argument("factor_through_epi: map is not surjective");
  IntMatrix section = y->block(0, 0, q.src.gens, q.tgt.gens);
  return fp_morphism(q.tgt, g.tgt, g.m * section);
}

FpMorphism fp_factor_through_mono(const FpMorphism& i, const FpMorphism& g) {
  if (i.tgt != g.tgt) throw std::invalid_argument("factor_through_mono: different targets");
  LatticeSolver solver(IntMatrix::hstack(i.m, i.tgt.rel));
  auto y = solver.solve(g.m);
  if (!y) throw std::invalid_argument("factor_through_mono: image not contained");
  return fp_morphism(g.src, i.src, y->block(0, 0, i.src.gens, g.src.gens));
}

FpGroup fp_direct_sum(const FpGroup& a, const FpGroup& b) {
  return FpGroup{a.gens + b.gens, IntMatrix::block_diag(a.rel, b.rel)};
}

FpGroup fp_tensor(const FpGroup& g, const FpGroup& h) {
  IntMatrix left = IntMatrix::kron(g.rel, IntMatrix::identity(h.gens));
  IntMatrix right = IntMatrix::kron(IntMatrix::identity(g.gens), h.rel);
  return FpGroup{g.gens * h.gens, IntMatrix::hstack(left, right)};
}

FpMorphism fp_tensor(const FpMorphism& f, const FpMorphism& g) {
  return FpMorphism{fp_tensor(f.src, g.src), fp_tensor(f.tgt, g.tgt), IntMatrix::kron(f.m, g.m)};
}

FpHom fp_hom(const FpGroup& g, const FpGroup& h) {
  const std::size_t nG = g.gens, nH = h.gens, mG = g.rel.cols(), mH = h.rel.cols();
  const std::size_t vars_m = nH * nG;
  IntMatrix basis;
  if (mG == 0) {
    basis = IntMatrix::identity(vars_m);
  } else {
    // M·R_G − R_H·N = 0 in the unknowns vec(M), vec(N).
    IntMatrix eq(nH * mG, vars_m + mH * mG);
    for (std::size_t i = 0; i < nH; ++i) {
      for (std::size_t c = 0; c < mG; ++c) {
        std::size_t row = i * mG + c;
        for (std::size_t j = 0; j < nG; ++j) eq(row, i * nG + j) = g.rel(j, c);
        for (std::size_t a = 0; a < mH; ++a) eq(row, vars_m + a * mG + c) = -h.rel(i, a);
      }
    }
    IntMatrix k = integer_kernel(eq);
    basis = lattice_basis(k.block(0, 0, vars_m, k.cols()));
  }
  auto solver = std::make_shared<LatticeSolver>(basis);

  // Null-homotopic maps M = R_H·K, one generator per entry of K.
  IntMatrix homotopies(vars_m, mH * nG);
  for (std::size_t a = 0; a < mH; ++a) {
    for (std::size_t j = 0; j < nG; ++j) {
      for (std::size_t i = 0; i < nH; ++i) homotopies(i * nG + j, a * nG + j) = h.rel(i, a);
    }
  }
  auto rel = solver->solve(homotopies);
  if (!rel) throw std::logic_error("homotopies outside the hom lattice");
  auto simp = fp_simplify(FpGroup{basis.cols(), *rel});

  FpHom out;
  out.src = g;
  out.tgt = h;
  out.group = simp.group;
  out.basis = basis;
  out.to = simp.to;
  out.solver = solver;
  IntMatrix vecs = basis * simp.from;
  for (std::size_t b = 0; b < vecs.cols(); ++b) {
    IntMatrix mb(nH, nG);
    for (std::size_t i = 0; i < nH; ++i) {
      for (std::size_t j = 0; j < nG; ++j) mb(i, j) = vecs(i * nG + j, b);
    }
    out.generators.push_back(std::move(mb));
  }
  return out;
}

FpGroup fp_hom_group(const FpGroup& g, const FpGroup& h) { return fp_hom(g, h).group; }

IntVector fp_hom_coordinates(const FpHom& hom, const IntMatrix& m) {
  const std::size_t nG = hom.src.gens, nH = hom.tgt.gens;
  if (m.rows() != nH || m.cols() != nG) throw std::invalid_argument("hom element shape mismatch");
  IntVector v(nH * nG);
  for (std::size_t i = 0; i < nH; ++i) {
    for (std::size_t j = 0; j < nG; ++j) v[i * nG + j] = m(i, j);
  }
  auto y = hom.solver->solve(v);
  if (!y) throw std::invalid_argument("matrix is not a homomorphism");
  IntVector out(hom.group.gens);
  for (std::size_t r = 0; r < hom.group.gens; ++r) {
    for (std::size_t k = 0; k < y->size(); ++k) out[r] += hom.to(r, k) * (*y)[k];
  }
  return out;
}

IntMatrix fp_hom_matrix(const FpHom& hom, const IntVector& coords) {
  IntMatrix m(hom.tgt.gens, hom.src.gens);
  for (std::size_t b = 0; b < coords.size(); ++b) {
    if (coords[b] != 0) m = m + hom.generators[b].scaled(coords[b]);
  }
  return m;
}

FpMorphism fp_eval(const FpHom& hom) {
  const std::size_t nG = hom.src.gens, nH = hom.tgt.gens;
  FpGroup src = fp_tensor(hom.group, hom.src);
  IntMatrix m(nH, src.gens);
  for (std::size_t b = 0; b < hom.group.gens; ++b) {
    for (std::size_t j = 0; j < nG; ++j) {
      for (std::size_t i = 0; i < nH; ++i) m(i, b * nG + j) = hom.generators[b](i, j);
    }
  }
  return FpMorphism{src, hom.tgt, m};
}

FpMorphism fp_curry(const FpMorphism& f, const FpGroup& x, const FpHom& hom_yz) {
  const std::size_t nY = hom_yz.src.gens, nZ = hom_yz.tgt.gens;
  if (f.src != fp_tensor(x, hom_yz.src) || f.tgt != hom_yz.tgt) throw std::invalid_argument("curry: shape mismatch");
  IntMatrix out(hom_yz.group.gens, x.gens);
  for (std::size_t i = 0; i < x.gens; ++i) {
    IntMatrix mi(nZ, nY);
    for (std::size_t z = 0; z < nZ; ++z) {
      for (std::size_t y = 0; y < nY; ++y) mi(z, y) = f.m(z, i * nY + y);
    }
    auto c = fp_hom_coordinates(hom_yz, mi);
    for (std::size_t r = 0; r < c.size(); ++r) out(r, i) = c[r];
  }
  return FpMorphism{x, hom_yz.group, out};
}

FpMorphism fp_uncurry(const FpMorphism& g, const FpHom& hom_yz) {
  if (g.tgt != hom_yz.group) throw std::invalid_argument("uncurry: target is not the hom object");
  return fp_compose(fp_eval(hom_yz), fp_tensor(g, fp_identity(hom_yz.src)));
}

FpMorphism fp_coev(const FpGroup& x, const FpHom& hom_y_xy) {
  return fp_curry(fp_identity(fp_tensor(x, hom_y_xy.src)), x, hom_y_xy);
}

std::string to_string(const FpGroup& g) { return "<" + std::to_string(g.gens) + " | " + to_string(g.rel) + ">"; }

}  // namespace mb
