#include "mb/gabriel/hom_tensor.hpp"

#include "mb/linalg/lattice.hpp"

#include <stdexcept>

namespace mb {

FpMorphism HomFromP::factor(const FpMorphism& g) const {
  if (g.tgt != inclusion.tgt) throw std::invalid_argument("hom factor: wrong ambient");
  if (whole) return FpMorphism{g.src, group, g.m};
  auto y = solver->solve(g.m);
  if (!y) throw std::invalid_argument("hom factor: map leaves Hom_S(P, -)");
  return FpMorphism{g.src, group, y->block(0, 0, group.gens, g.src.gens)};
}

HomFromP hom_from_projective(const ResolvedProjective& p, const SModule& n) {
  const FpGroup ambient = fp_tensor(n.carrier, FpGroup::free(p.p));
  const IntMatrix id_n = IntMatrix::identity(n.carrier.gens), id_p = IntMatrix::identity(p.p);
  IntMatrix d(0, ambient.gens);
  FpGroup stacked = FpGroup::free(0);
  for (std::size_t s = 0; s < p.action.size(); ++s) {
    d = IntMatrix::vstack(d, IntMatrix::kron(id_n, p.action[s].transpose()) - IntMatrix::kron(n.action[s], id_p));
    stacked = fp_direct_sum(stacked, ambient);
  }
  HomFromP h;
  if (d.is_zero()) {
    h.whole = true;
    h.group = ambient;
    h.inclusion = fp_identity(ambient);
    return h;
  }
  FpKernel k = fp_kernel(FpMorphism{ambient, stacked, d});
  h.group = k.group;
  h.inclusion = k.inclusion;
  h.solver = std::make_shared<LatticeSolver>(IntMatrix::hstack(k.inclusion.m, ambient.rel));
  return h;
}

HomTensorMonad::HomTensorMonad(ProjectiveSummand p) : p_(std::move(p)), r_(resolve(p_)) {}

SModule HomTensorMonad::tensor_p(const FpGroup& x) const {
  SModule m{p_.ring, fp_tensor(x, FpGroup::free(r_.p)), {}, ""};
  for (const auto& a : r_.action) m.action.push_back(IntMatrix::kron(IntMatrix::identity(x.gens), a));
  return m;
}

std::shared_ptr<const HomFromP> HomTensorMonad::hom(const FpGroup& x) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    for (const auto& [key, h] : cache_) {
      if (key == x) return h;
    }
  }
  auto h = std::make_shared<const HomFromP>(hom_from_projective(r_, tensor_p(x)));
  std::lock_guard<std::mutex> lock(mutex_);
  if (cache_.size() >= 64) cache_.erase(cache_.begin());
  cache_.emplace_back(x, h);
  return h;
}

FpMorphism HomTensorMonad::apply(const FpMorphism& f) const {
  auto hx = hom(f.src), hy = hom(f.tgt);
  const std::size_t p = r_.p;
  FpMorphism amb{hx->inclusion.tgt, hy->inclusion.tgt, IntMatrix::kron(f.m, IntMatrix::identity(p * p))};
  return hy->factor(fp_compose(amb, hx->inclusion));
}

FpMorphism HomTensorMonad::eta(const FpGroup& x) const {
  auto hx = hom(x);
  const std::size_t p = r_.p;
  IntMatrix m(x.gens * p * p, x.gens);
  for (std::size_t i = 0; i < x.gens; ++i)
    for (std::size_t q = 0; q < p; ++q) m(i * p * p + q * p + q, i) = 1;
  return hx->factor(FpMorphism{x, hx->inclusion.tgt, m});
}

FpMorphism HomTensorMonad::mu(const FpGroup& x) const {
  auto hx = hom(x);
  auto htx = hom(hx->group);
  const std::size_t p = r_.p, nt = hx->group.gens;
  const IntMatrix& iota = hx->inclusion.m;
  // g(b_qs) = t ⊗ b_qt evaluates to t(b_qt)
  IntMatrix ev(x.gens * p * p, nt * p * p);
  for (std::size_t t = 0; t < nt; ++t)
    for (std::size_t qt = 0; qt < p; ++qt)
      for (std::size_t qs = 0; qs < p; ++qs)
        for (std::size_t i = 0; i < x.gens; ++i)
          for (std::size_t q1 = 0; q1 < p; ++q1) {
            const Integer& c = iota((i * p + q1) * p + qt, t);
            if (c != 0) ev((i * p + q1) * p + qs, (t * p + qt) * p + qs) += c;
          }
  FpMorphism amb{htx->inclusion.tgt, hx->inclusion.tgt, ev};
  return hx->factor(fp_compose(amb, htx->inclusion));
}

FpMorphism HomTensorMonad::sigma(const FpGroup& x, const FpGroup& y) const {
  auto hy = hom(y);
  auto hxy = hom(fp_tensor(x, y));
  FpMorphism amb{fp_tensor(x, hy->group), hxy->inclusion.tgt, IntMatrix::kron(IntMatrix::identity(x.gens), hy->inclusion.m)};
  return hxy->factor(amb);
}

EndoRing endo_ring(const ProjectiveSummand& ps) {
  ResolvedProjective r = resolve(ps);
  SModule pm{ps.ring, FpGroup::free(r.p), r.action, ps.label};
  EndoRing out{{}, {}, hom_from_projective(r, pm)};
  const std::size_t p = r.p, k = out.hom.group.gens;
  if (!out.hom.group.rel.empty() && !out.hom.group.rel.is_zero()) throw std::logic_error("End(P) is not free abelian");
  auto as_matrix = [&](const IntVector& v) {
    IntMatrix m(p, p);
    for (std::size_t y = 0; y < p; ++y)
      for (std::size_t q = 0; q < p; ++q) m(y, q) = v[y * p + q];
    return m;
  };
  auto as_vector = [&](const IntMatrix& m) {
    IntVector v(p * p);
    for (std::size_t y = 0; y < p; ++y)
      for (std::size_t q = 0; q < p; ++q) v[y * p + q] = m(y, q);
    return v;
  };
  for (std::size_t j = 0; j < k; ++j) out.basis.push_back(as_matrix(column_of(out.hom.inclusion.m, j)));
  LatticeSolver solver(out.hom.inclusion.m);
  auto coords = [&](const IntMatrix& m) {
    auto c = solver.solve(as_vector(m));
    if (!c) throw std::logic_error("composite of endomorphisms left End(P)");
    return *c;
  };
  out.ring.name = "End(" + ps.label + ")";
  out.ring.rank = k;
  out.ring.mult = IntMatrix(k, k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      IntVector c = coords(out.basis[i] * out.basis[j]);
      for (std::size_t l = 0; l < k; ++l) out.ring.mult(l, i * k + j) = c[l];
    }
  out.ring.unit = coords(IntMatrix::identity(p));
  return out;
}

CheckReport check_linear_strength(const HomTensorMonad& t, const std::vector<FpGroup>& battery) {
  CheckReport rep;
  const FpAbContext& ctx = t.context();
  for (const auto& x : battery) {
    rep.run("gabriel.linear_strength", "hom-tensor/strength-invertible", t.name() + " " + ctx.describe(x), "battery",
            [&]() -> std::optional<std::string> {
              FpMorphism s = t.sigma(x, ctx.unit());
              if (fp_is_iso(s)) return std::nullopt;
              return "sigma: " + fp_canonical(s.src).str() + " -> " + fp_canonical(s.tgt).str() + " not invertible";
            });
  }
  return rep;
}

ComparisonImage comparison(const HomTensorMonad& t, const EndoRing& r, const SModule& x) {
  const std::size_t p = t.resolved().p;
  ComparisonImage out{hom_from_projective(t.resolved(), x), {}, {}};
  const HomFromP& h = out.hom;
  const IntMatrix id_x = IntMatrix::identity(x.carrier.gens);
  for (const IntMatrix& phi : r.basis) {
    FpMorphism pre{h.inclusion.tgt, h.inclusion.tgt, IntMatrix::kron(id_x, phi.transpose())};
    out.right_action.push_back(h.factor(fp_compose(pre, h.inclusion)).m);
  }
  // ξ(g)(b_qs) = Σ g_{h,qt,qs} h(b_qt)
  auto th = t.hom(h.group);
  const std::size_t nh = h.group.gens;
  IntMatrix ev(x.carrier.gens * p, nh * p * p);
  for (std::size_t k = 0; k < nh; ++k)
    for (std::size_t qt = 0; qt < p; ++qt)
      for (std::size_t qs = 0; qs < p; ++qs)
        for (std::size_t i = 0; i < x.carrier.gens; ++i) {
          const Integer& c = h.inclusion.m(i * p + qt, k);
          if (c != 0) ev(i * p + qs, (k * p + qt) * p + qs) += c;
        }
  out.structure = h.factor(fp_compose(FpMorphism{th->inclusion.tgt, h.inclusion.tgt, ev}, th->inclusion));
  return out;
}

FpCokernel tensor_over_endo(const FpGroup& y, const std::vector<IntMatrix>& right_action, const EndoRing& r) {
  const std::size_t p = r.basis.empty() ? 0 : r.basis[0].rows();
  const FpGroup ambient = fp_tensor(y, FpGroup::free(p));
  const IntMatrix id_y = IntMatrix::identity(y.gens), id_p = IntMatrix::identity(p);
  IntMatrix rel(ambient.gens, 0);
  for (std::size_t k = 0; k < r.basis.size(); ++k)
    rel = IntMatrix::hstack(rel, IntMatrix::kron(right_action[k], id_p) - IntMatrix::kron(id_y, r.basis[k]));
  return fp_cokernel(FpMorphism{ambient, ambient, rel});
}

namespace {

// [f ⊗ b_q] ↦ f(b_q)
FpMorphism counit(const HomFromP& h, const FpCokernel& c, const FpGroup& x, std::size_t p) {
  IntMatrix ev(x.gens, h.group.gens * p);
  for (std::size_t k = 0; k < h.group.gens; ++k)
    for (std::size_t q = 0; q < p; ++q)
      for (std::size_t i = 0; i < x.gens; ++i) ev(i, k * p + q) = h.inclusion.m(i * p + q, k);
  return fp_morphism(c.group, x, ev);
}

}  // namespace

CheckReport gabriel_roundtrip(const ProjectiveSummand& ps, const std::vector<SModule>& battery) {
  CheckReport rep;
  HomTensorMonad t(ps);
  EndoRing r = endo_ring(ps);
  const std::size_t p = t.resolved().p;
  const std::string who = t.name() + " ";
  for (const SModule& x : battery) {
    const std::string inst = who + x.label;
    std::optional<ComparisonImage> img;
    rep.run("gabriel.algebra", "gabriel/comparison-algebra", inst, "exact", [&]() -> std::optional<std::string> {
      img = comparison(t, r, x);
      const FpGroup& hg = img->hom.group;
      if (!fp_equal(fp_compose(img->structure, t.eta(hg)), fp_identity(hg))) return std::string("xi o eta != id");
      FpMorphism lhs = fp_compose(img->structure, t.mu(hg));
      FpMorphism rhs = fp_compose(img->structure, t.apply(img->structure));
      if (!fp_equal(lhs, rhs)) return std::string("xi o mu != xi o T(xi)");
      return std::nullopt;
    });
    rep.run("gabriel.roundtrip", "gabriel/projective-generator", inst, "battery", [&]() -> std::optional<std::string> {
      if (!img) img = comparison(t, r, x);
      FpCokernel back = tensor_over_endo(img->hom.group, img->right_action, r);
      FpMorphism eps = counit(img->hom, back, x.carrier, p);
      if (fp_is_iso(eps)) return std::nullopt;
      return "module " + x.label + ": Hom(P,X) = " + fp_canonical(img->hom.group).str() + ", Hom(P,X) (x)_R P = " +
             fp_canonical(back.group).str() + " vs X = " + fp_canonical(x.carrier).str();
    });
  }
  return rep;
}

CheckReport morita_correspondence(const ProjectiveSummand& ps, const std::vector<SModule>& battery) {
  if (ps.ring.name != "Z") throw std::invalid_argument("morita_correspondence: ground ring must be Z");
  CheckReport rep;
  HomTensorMonad t(ps);
  EndoRing r = endo_ring(ps);
  const std::size_t p = t.resolved().p;
  const RingPresentation rop = ring_opposite(r.ring);
  std::vector<std::string> src_classes, img_classes;
  for (const SModule& x : battery) {
    const std::string inst = t.name() + " " + x.label;
    ComparisonImage img = comparison(t, r, x);
    SModule y{rop, img.hom.group, img.right_action, "Hom(P," + x.label + ")"};
    rep.run("morita.module", "gabriel/morita", inst, "exact", [&]() { return module_violation(y); });
    FpCokernel gy = tensor_over_endo(y.carrier, y.action, r);
    rep.run("morita.counit", "gabriel/morita", inst, "battery", [&]() -> std::optional<std::string> {
      if (fp_is_iso(counit(img.hom, gy, x.carrier, p))) return std::nullopt;
      return std::string("Hom(P,X) (x)_R P -> X not invertible");
    });
    rep.run("morita.unit", "gabriel/morita", inst, "battery", [&]() -> std::optional<std::string> {
      // y ↦ (b_q ↦ [y ⊗ b_q]) into Hom(P, Y⊗_R P)
      HomFromP back = hom_from_projective(t.resolved(), z_module(gy.group));
      IntMatrix m(gy.group.gens * p, y.carrier.gens);
      for (std::size_t i = 0; i < y.carrier.gens; ++i)
        for (std::size_t q = 0; q < p; ++q) m((i * p + q) * p + q, i) = 1;
      FpMorphism unit = back.factor(FpMorphism{y.carrier, back.inclusion.tgt, m});
      if (fp_is_iso(unit)) return std::nullopt;
      return std::string("Y -> Hom(P, Y (x)_R P) not invertible");
    });
    src_classes.push_back(fp_canonical(x.carrier).str());
    img_classes.push_back(fp_canonical(y.carrier).str());
  }
  rep.run("morita.bijective", "gabriel/morita", t.name() + " battery", "battery", [&]() -> std::optional<std::string> {
    for (std::size_t i = 0; i < battery.size(); ++i)
      for (std::size_t j = 0; j < battery.size(); ++j)
        if ((src_classes[i] == src_classes[j]) != (img_classes[i] == img_classes[j]))
          return battery[i].label + " and " + battery[j].label + " are identified on one side only";
    return std::nullopt;
  });
  return rep;
}

}  // namespace mb
