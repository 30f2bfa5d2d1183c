#include "mb/algebras/algebras.hpp"

#include "mb/chain/excisive.hpp"
#include "mb/chain/homology.hpp"
#include "mb/chain/random.hpp"

#include <stdexcept>

namespace mb {

Coequalizer<FpAbContext> coequalize(const FpAbContext&, const FpMorphism& f, const FpMorphism& g) {
  FpCokernel c = fp_cokernel(fp_add(f, fp_negate(g)));
  return {c.group, c.projection};
}

Coequalizer<ChainContext> coequalize(const ChainContext&, const ChainMap& f, const ChainMap& g) {
  ChainCokernel c = chain_cokernel(chain_sub(f, g));
  return {c.complex, c.q};
}

FpMorphism factor_through_epi(const FpAbContext&, const FpMorphism& q, const FpMorphism& g) { return fp_factor_through_epi(q, g); }
ChainMap factor_through_epi(const ChainContext&, const ChainMap& q, const ChainMap& g) { return chain_factor_through_epi(q, g); }

template <class Ctx>
TAlgebra<Ctx> free_algebra(const StrongMonad<Ctx>& t, const typename Ctx::Object& x) {
  return {t.apply(x), t.mu(x)};
}

template <class Ctx>
std::optional<std::string> algebra_violation(const StrongMonad<Ctx>& t, const TAlgebra<Ctx>& a) {
  const Ctx& ctx = t.context();
  const auto tx = t.apply(a.carrier);
  if (!ctx.same(ctx.src(a.xi), tx) || !ctx.same(ctx.tgt(a.xi), a.carrier)) return std::string("structure map is not T(X) -> X");
  if (!ctx.equal(ctx.compose(a.xi, t.eta(a.carrier)), ctx.identity(a.carrier))) return std::string("xi o eta != id");
  if (!ctx.equal(ctx.compose(a.xi, t.mu(a.carrier)), ctx.compose(a.xi, t.apply(a.xi)))) return std::string("xi o mu != xi o T(xi)");
  return std::nullopt;
}

template <class Ctx>
bool check_algebra(const StrongMonad<Ctx>& t, const TAlgebra<Ctx>& a) {
  return !algebra_violation(t, a).has_value();
}

template <class Ctx>
bool is_algebra_map(const StrongMonad<Ctx>& t, const TAlgebra<Ctx>& a, const TAlgebra<Ctx>& b, const typename Ctx::Morphism& f) {
  const Ctx& ctx = t.context();
  return ctx.equal(ctx.compose(f, a.xi), ctx.compose(b.xi, t.apply(f)));
}

template <class Ctx>
std::optional<std::string> monoid_module_violation(const Ctx& ctx, const MonoidObject<Ctx>& m, const ModuleOverMonoid<Ctx>& x) {
  const auto& c = x.carrier;
  if (!ctx.same(ctx.src(x.rho), ctx.tensor(c, m.carrier)) || !ctx.same(ctx.tgt(x.rho), c)) return std::string("action is not X(x)M -> X");
  auto unit = ctx.compose(x.rho, ctx.compose(ctx.tensor(ctx.identity(c), m.e), ctx.right_unitor_inv(c)));
  if (!ctx.equal(unit, ctx.identity(c))) return std::string("unit of M does not act as the identity");
  auto lhs = ctx.compose(x.rho, ctx.tensor(x.rho, ctx.identity(m.carrier)));
  auto rhs = ctx.compose(x.rho, ctx.compose(ctx.tensor(ctx.identity(c), m.m), ctx.assoc(c, m.carrier, m.carrier)));
  if (!ctx.equal(lhs, rhs)) return std::string("(x.a).b != x.(ab)");
  return std::nullopt;
}

template <class Ctx>
ModuleOverMonoid<Ctx> free_monoid_module(const Ctx& ctx, const MonoidObject<Ctx>& m, const typename Ctx::Object& x) {
  return {ctx.tensor(x, m.carrier), ctx.compose(ctx.tensor(ctx.identity(x), m.m), ctx.assoc(x, m.carrier, m.carrier))};
}

template <class Ctx>
TAlgebra<Ctx> e_tensor(const StrongMonad<Ctx>& t, const typename Ctx::Object& z, const TAlgebra<Ctx>& a) {
  const Ctx& ctx = t.context();
  const auto& x = a.carrier;
  const auto zx = ctx.tensor(z, x);
  auto left = ctx.compose(t.mu(zx), t.apply(t.sigma(z, x)));
  auto right = t.apply(ctx.tensor(ctx.identity(z), a.xi));
  auto section = t.apply(ctx.tensor(ctx.identity(z), t.eta(x)));
  const auto id = ctx.identity(t.apply(zx));
  if (!ctx.equal(ctx.compose(left, section), id) || !ctx.equal(ctx.compose(right, section), id))
    throw std::logic_error("e_tensor: T(Z(x)eta) is not a common section");
  auto c = coequalize(ctx, left, right);
  return {c.object, factor_through_epi(ctx, t.apply(c.q), ctx.compose(c.q, t.mu(zx)))};
}

template <class Ctx>
ModuleOverMonoid<Ctx> lambda_star(const StrongMonad<Ctx>& t, const TAlgebra<Ctx>& a) {
  return {a.carrier, t.context().compose(a.xi, linear_approximation(t, a.carrier))};
}

template <class Ctx>
LambdaShriek<Ctx> lambda_shriek(const StrongMonad<Ctx>& t, const ModuleOverMonoid<Ctx>& m) {
  const Ctx& ctx = t.context();
  const auto& x = m.carrier;
  auto acted = t.apply(m.rho);
  auto lam = ctx.compose(t.mu(x), t.apply(linear_approximation(t, x)));
  // common section T((X⊗η_I)∘r⁻¹)
  auto section = t.apply(ctx.compose(ctx.tensor(ctx.identity(x), t.eta(ctx.unit())), ctx.right_unitor_inv(x)));
  const auto id = ctx.identity(t.apply(x));
  if (!ctx.equal(ctx.compose(acted, section), id) || !ctx.equal(ctx.compose(lam, section), id))
    throw std::logic_error("lambda_shriek: the pair is not reflexive");
  auto c = coequalize(ctx, acted, lam);
  TAlgebra<Ctx> alg{c.object, factor_through_epi(ctx, t.apply(c.q), ctx.compose(c.q, t.mu(x)))};
  return {alg, c.q};
}

template <class Ctx>
typename Ctx::Morphism adjunction_unit(const StrongMonad<Ctx>& t, const ModuleOverMonoid<Ctx>& m, const LambdaShriek<Ctx>& l) {
  return t.context().compose(l.q, t.eta(m.carrier));
}

template <class Ctx>
UnitVerdict adjunction_unit_check(const StrongMonad<Ctx>& t, const ModuleOverMonoid<Ctx>& m, std::size_t up_to) {
  const Ctx& ctx = t.context();
  LambdaShriek<Ctx> l = lambda_shriek(t, m);
  auto u = adjunction_unit(t, m, l);
  ModuleOverMonoid<Ctx> back = lambda_star(t, l.alg);
  const auto ti = t.apply(ctx.unit());
  UnitVerdict v;
  v.module_map = ctx.equal(ctx.compose(u, m.rho), ctx.compose(back.rho, ctx.tensor(u, ctx.identity(ti))));
  v.iso = ctx.is_iso(u);
  v.weq = ctx.is_weq(u, up_to);
  return v;
}

template <class Ctx>
CheckReport unit_is_strength(const StrongMonad<Ctx>& t, const std::vector<typename Ctx::Object>& battery) {
  const Ctx& ctx = t.context();
  CheckReport rep;
  MonoidObject<Ctx> ti = monoid_of_unit(t);
  for (const auto& x : battery) {
    if (!t.accepts(x)) continue;
    const std::string inst = t.name() + " X=" + ctx.describe(x);
    rep.run("adjunction.unit-is-strength", "adjunction/unit-at-free-modules", inst, "exact", [&]() -> std::optional<std::string> {
      ModuleOverMonoid<Ctx> m = free_monoid_module(ctx, ti, x);
      if (auto v = monoid_module_violation(ctx, ti, m)) return "free module: " + *v;
      LambdaShriek<Ctx> l = lambda_shriek(t, m);
      // λ_!(X⊗T(I)) → (T(X), μ_X), induced by μ_X∘T(λ_X)
      auto comparison = factor_through_epi(ctx, l.q, ctx.compose(t.mu(x), t.apply(linear_approximation(t, x))));
      if (!ctx.is_iso(comparison)) return std::string("lambda_!(X(x)T(I)) is not T(X)");
      if (!is_algebra_map(t, l.alg, free_algebra(t, x), comparison)) return std::string("comparison is not an algebra map");
      auto strength = ctx.compose(t.apply(ctx.right_unitor(x)), t.sigma(x, ctx.unit()));
      if (!ctx.equal(ctx.compose(comparison, adjunction_unit(t, m, l)), strength)) return std::string("unit != T(r) o sigma_{X,I}");
      return std::nullopt;
    });
  }
  return rep;
}

#define MB_INSTANTIATE(Ctx)                                                                                                        \
  template TAlgebra<Ctx> free_algebra<Ctx>(const StrongMonad<Ctx>&, const Ctx::Object&);                                          \
  template std::optional<std::string> algebra_violation<Ctx>(const StrongMonad<Ctx>&, const TAlgebra<Ctx>&);                      \
  template bool check_algebra<Ctx>(const StrongMonad<Ctx>&, const TAlgebra<Ctx>&);                                                \
  template bool is_algebra_map<Ctx>(const StrongMonad<Ctx>&, const TAlgebra<Ctx>&, const TAlgebra<Ctx>&, const Ctx::Morphism&);   \
  template std::optional<std::string> monoid_module_violation<Ctx>(const Ctx&, const MonoidObject<Ctx>&,                          \
                                                                   const ModuleOverMonoid<Ctx>&);                                 \
  template ModuleOverMonoid<Ctx> free_monoid_module<Ctx>(const Ctx&, const MonoidObject<Ctx>&, const Ctx::Object&);               \
  template TAlgebra<Ctx> e_tensor<Ctx>(const StrongMonad<Ctx>&, const Ctx::Object&, const TAlgebra<Ctx>&);                        \
  template ModuleOverMonoid<Ctx> lambda_star<Ctx>(const StrongMonad<Ctx>&, const TAlgebra<Ctx>&);                                 \
  template LambdaShriek<Ctx> lambda_shriek<Ctx>(const StrongMonad<Ctx>&, const ModuleOverMonoid<Ctx>&);                           \
  template Ctx::Morphism adjunction_unit<Ctx>(const StrongMonad<Ctx>&, const ModuleOverMonoid<Ctx>&, const LambdaShriek<Ctx>&);   \
  template UnitVerdict adjunction_unit_check<Ctx>(const StrongMonad<Ctx>&, const ModuleOverMonoid<Ctx>&, std::size_t);            \
  template CheckReport unit_is_strength<Ctx>(const StrongMonad<Ctx>&, const std::vector<Ctx::Object>&);

MB_INSTANTIATE(FpAbContext)
MB_INSTANTIATE(ChainContext)

// ---- bar construction ----

TAlgebra<ChainContext> trivial_algebra(const TensorMonad<ChainContext>& t) {
  const ChainContext& ctx = t.context();
  const MonoidObject<ChainContext>& m = t.monoid();
  const ChainComplex unit = ctx.unit();
  const SparseMatrix& e = m.e.at(0);
  if (e.cols() != 1 || e.column(0).size() != 1 || e.column(0)[0].second != 1)
    throw std::invalid_argument("trivial_algebra: the unit is not a basis vector");
  SparseMatrix a(1, m.carrier.dim(0));
  a.set(0, e.column(0)[0].first, 1);
  ChainMap aug(m.carrier, unit, {a});
  if (!chain_equal(chain_compose(aug, m.m), chain_compose(ctx.left_unitor(unit), ctx.tensor(aug, aug))))
    throw std::invalid_argument("trivial_algebra: the augmentation is not multiplicative");
  return {unit, chain_compose(ctx.right_unitor(unit), ctx.tensor(chain_identity(unit), aug))};
}

namespace {

ChainComplex power(const StrongMonad<ChainContext>& t, ChainComplex x, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) x = t.apply(x);
  return x;
}

ChainMap power(const StrongMonad<ChainContext>& t, ChainMap f, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) f = t.apply(f);
  return f;
}

std::string bound_of(std::size_t n) { return "degrees<=" + std::to_string(n == 0 ? 0 : n - 1); }

}  // namespace

BarResolution bar_resolution(const StrongMonad<ChainContext>& t, const TAlgebra<ChainContext>& a, std::size_t n) {
  if (auto v = algebra_violation(t, a)) throw std::invalid_argument("bar_resolution: " + *v);
  BarResolution b;
  b.N = n;
  SimplicialChainComplex& x = b.split.base;
  x.ground = t.context().ground;
  x.N = n;
  std::vector<ChainComplex> pw{a.carrier};
  for (std::size_t k = 1; k <= n + 2; ++k) pw.push_back(t.apply(pw.back()));
  for (std::size_t k = 0; k <= n; ++k) x.levels.push_back(pw[k + 1]);
  x.faces.resize(n + 1);
  x.degens.resize(n);
  for (std::size_t k = 1; k <= n; ++k) {
    x.faces[k].push_back(power(t, a.xi, k));
    for (std::size_t i = 1; i <= k; ++i) x.faces[k].push_back(power(t, t.mu(pw[i - 1]), k - i));
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j <= k; ++j) x.degens[k].push_back(power(t, t.eta(pw[j]), k - j + 1));
  b.split.bottom = a.carrier;
  b.split.eps = a.xi;
  for (std::size_t k = 0; k <= n; ++k) b.split.extra.push_back(t.eta(pw[k]));
  return b;
}

SimplicialMap bar_map(const StrongMonad<ChainContext>& t, const ChainMap& f, const BarResolution& src, const BarResolution& tgt) {
  SimplicialMap m{src.split.base, tgt.split.base, {}};
  for (std::size_t k = 0; k <= src.N; ++k) m.at.push_back(power(t, f, k + 1));
  return m;
}

CheckReport check_bar(const StrongMonad<ChainContext>& t, const TAlgebra<ChainContext>& a, const BarResolution& b) {
  CheckReport rep;
  const auto& x = b.split.base;
  const std::string inst = t.name() + " A=" + a.carrier.describe() + " N=" + std::to_string(b.N);
  rep.run("bar.simplicial", "bar/simplicial-identities", inst, "exact", [&]() { return simplicial_violation(x); });
  rep.run("bar.algebra-maps", "bar/faces-are-algebra-maps", inst, "exact", [&]() -> std::optional<std::string> {
    std::vector<TAlgebra<ChainContext>> level;
    ChainComplex p = a.carrier;
    for (std::size_t k = 0; k <= b.N + 1; ++k) {
      level.push_back(free_algebra(t, p));
      p = t.apply(p);
    }
    if (!is_algebra_map(t, level[0], a, a.xi)) return std::string("augmentation is not an algebra map");
    for (std::size_t k = 1; k <= b.N; ++k)
      for (std::size_t i = 0; i <= k; ++i)
        if (!is_algebra_map(t, level[k], level[k - 1], x.faces[k][i]))
          return "d_" + std::to_string(i) + " at level " + std::to_string(k) + " is not an algebra map";
    for (std::size_t k = 0; k < b.N; ++k)
      for (std::size_t j = 0; j <= k; ++j)
        if (!is_algebra_map(t, level[k], level[k + 1], x.degens[k][j]))
          return "s_" + std::to_string(j) + " at level " + std::to_string(k) + " is not an algebra map";
    return std::nullopt;
  });
  rep.run("bar.extra-degeneracies", "bar/extra-degeneracies", inst, "exact", [&]() { return split_violation(b.split); });
  return rep;
}

CheckReport bar_is_resolution(const StrongMonad<ChainContext>& t, const TAlgebra<ChainContext>& a, std::size_t n) {
  BarResolution b = bar_resolution(t, a, n);
  CheckReport rep = check_bar(t, a, b);
  const std::string inst = t.name() + " A=" + a.carrier.describe() + " N=" + std::to_string(n);
  const std::size_t top = n == 0 ? 0 : n - 1;
  rep.run("bar.resolution", "bar/cofibrant-replacement", inst, bound_of(n), [&]() -> std::optional<std::string> {
    Realization r = realize_full(b.split.base);
    if (auto k = quasi_iso_failure(realized_augmentation(b.split, r), top))
      return "H_" + std::to_string(*k) + "(|B|) = " + homology_label(r.complex, *k) + " vs " + homology_label(a.carrier, *k);
    return std::nullopt;
  });
  rep.run("bar.reedy", "bar/reedy-cofibrant", inst, "levels<=" + std::to_string(n), [&]() -> std::optional<std::string> {
    for (std::size_t k = 0; k <= n; ++k)
      if (!is_cofibration(latching(b.split.base, k).map)) return "latching map at level " + std::to_string(k) + " is not a cofibration";
    return std::nullopt;
  });
  rep.run("bar.tau", "bar/tau-cofibrant", inst, bound_of(n), [&]() -> std::optional<std::string> {
    if (!is_tau_cofibrant(b.split.base, top)) return std::string("fat realization does not compare to the geometric one");
    return std::nullopt;
  });
  return rep;
}

// ---- free cell attachments ----

namespace {

void require_additive(const StrongMonad<ChainContext>& t, const ChainComplex& a, const ChainComplex& b) {
  ChainMap split = chain_pair(t.apply(chain_proj1(a, b)), t.apply(chain_proj2(a, b)));
  if (!chain_is_iso(split)) throw std::invalid_argument(t.name() + ": T(A+B) -> T(A)+T(B) is not an iso; free cell attachments need an additive monad");
}

// Structure on a quotient q: A → Q of an algebra, when q∘ξ_A kills what T(q) kills.
TAlgebra<ChainContext> quotient_algebra(const StrongMonad<ChainContext>& t, const TAlgebra<ChainContext>& a, const ChainMap& q) {
  return {q.tgt(), chain_factor_through_epi(t.apply(q), chain_compose(q, a.xi))};
}

}  // namespace

FreeCellAttachment free_cell_attachment(const StrongMonad<ChainContext>& t, const ChainMap& i, const TAlgebra<ChainContext>& v,
                                        const ChainMap& attach) {
  if (!is_cofibration(i)) throw std::invalid_argument("free_cell_attachment: X -> Y is not a cofibration");
  if (auto bad = algebra_violation(t, v)) throw std::invalid_argument("free_cell_attachment: V: " + *bad);
  if (!is_algebra_map(t, free_algebra(t, i.src()), v, attach)) throw std::invalid_argument("free_cell_attachment: attaching map is not an algebra map");
  const ChainComplex ty = t.apply(i.tgt());
  require_additive(t, ty, v.carrier);
  FreeCellAttachment att{i, v, attach, {}, {}, {}, {}, {}, {}, {}};
  Pushout po = pushout(t.apply(i), attach);
  att.from_free = po.from_b;
  att.from_v = po.from_c;
  ChainMap onto = chain_copair(po.from_b, po.from_c);
  ChainMap sum_xi = chain_compose(chain_direct_sum(t.mu(i.tgt()), v.xi),
                                  chain_pair(t.apply(chain_proj1(ty, v.carrier)), t.apply(chain_proj2(ty, v.carrier))));
  att.w = quotient_algebra(t, TAlgebra<ChainContext>{chain_direct_sum(ty, v.carrier), sum_xi}, onto);
  ChainCokernel wv = chain_cokernel(att.from_v);
  att.to_quotient = wv.q;
  att.quotient = quotient_algebra(t, att.w, wv.q);
  ChainCokernel yx = chain_cokernel(i);
  att.cells = yx.complex;
  att.quotient_iso = chain_factor_through_epi(t.apply(yx.q), chain_compose(wv.q, att.from_free));
  return att;
}

FreeCellAttachment exterior_attachment_preset(const StrongMonad<ChainContext>& t) {
  const Ground g = t.context().ground;
  ChainComplex x = ChainComplex::sphere(g, 1), y = ChainComplex::disk(g, 2);
  ChainMap i(x, y, {SparseMatrix(0, 0), SparseMatrix::identity(1)});
  TAlgebra<ChainContext> v = free_algebra(t, x);
  return free_cell_attachment(t, i, v, chain_identity(v.carrier));
}

CheckReport verify_free_cofibre_sequence(const StrongMonad<ChainContext>& t, const FreeCellAttachment& att, std::size_t n) {
  CheckReport rep;
  const std::size_t top = n == 0 ? 0 : n - 1;
  const std::string inst = t.name() + " " + att.i.src().describe() + " >-> " + att.i.tgt().describe() + " along V=" + att.v.carrier.describe();
  rep.run("attachment.algebras", "cell/free-cell-attachment", inst, "exact", [&]() -> std::optional<std::string> {
    if (auto v = algebra_violation(t, att.w)) return "W: " + *v;
    if (auto v = algebra_violation(t, att.quotient)) return "W/V: " + *v;
    if (!chain_equal(chain_compose(att.from_free, t.apply(att.i)), chain_compose(att.from_v, att.attach))) return std::string("square does not commute");
    if (!is_algebra_map(t, att.v, att.w, att.from_v)) return std::string("V -> W is not an algebra map");
    if (!is_algebra_map(t, free_algebra(t, att.i.tgt()), att.w, att.from_free)) return std::string("F(Y) -> W is not an algebra map");
    return std::nullopt;
  });
  rep.run("attachment.quotient-free", "cell/quotient-is-free", inst, "exact", [&]() -> std::optional<std::string> {
    if (!chain_is_iso(att.quotient_iso)) return std::string("F(Y/X) -> W/V is not an iso");
    if (!is_algebra_map(t, free_algebra(t, att.cells), att.quotient, att.quotient_iso)) return std::string("F(Y/X) -> W/V is not an algebra map");
    return std::nullopt;
  });
  rep.run("cofibre.parallel", "cell/free-to-homotopy-cofibre", inst, bound_of(n), [&]() -> std::optional<std::string> {
    std::string bad = cofibre_violation(CofibreSeq{att.from_v, att.to_quotient});
    if (!bad.empty()) return "V -> W -> W/V: " + bad;
    auto r = homotopy_pushout_check(Square{t.apply(att.i), att.attach, att.from_free, att.from_v}, top);
    if (!r.comparison_weq || !r.parallel_cofibre_weq)
      return "comparison=" + std::to_string(r.comparison_weq) + " parallel=" + std::to_string(r.parallel_cofibre_weq);
    return std::nullopt;
  });
  rep.run("cofibre.bar", "cell/bar-of-quotient", inst, bound_of(n), [&]() -> std::optional<std::string> {
    BarResolution bv = bar_resolution(t, att.v, n), bw = bar_resolution(t, att.w, n), bq = bar_resolution(t, att.quotient, n);
    Realization rv = realize_full(bv.split.base), rw = realize_full(bw.split.base), rq = realize_full(bq.split.base);
    ChainMap j = realize(bar_map(t, att.from_v, bv, bw), rv, rw);
    ChainMap p = realize(bar_map(t, att.to_quotient, bw, bq), rw, rq);
    ChainCokernel c = chain_cokernel(j);
    ChainMap cmp = chain_factor_through_epi(c.q, p);
    if (auto k = quasi_iso_failure(cmp, top)) return "|B(W)|/|B(V)| -> |B(W/V)| fails on H_" + std::to_string(*k);
    return std::nullopt;
  });
  return rep;
}

CheckReport check_homotopically_right_exact(const StrongMonad<ChainContext>& t, const std::vector<ChainMap>& extensions,
                                            std::size_t up_to) {
  CheckReport rep;
  const std::string b = "degrees<=" + std::to_string(up_to);
  rep.run("right-exact.null", "right-exact/null-object", t.name(), "exact", [&]() -> std::optional<std::string> {
    ChainComplex t0 = t.apply(ChainComplex(t.context().ground));
    if (!t0.is_zero()) return "T(0) = " + t0.describe();
    return std::nullopt;
  });
  for (const auto& i : extensions) {
    const std::string inst = t.name() + " " + i.src().describe() + " >-> " + i.tgt().describe();
    rep.run("right-exact.quotient", "right-exact/cell-extension", inst, b, [&]() -> std::optional<std::string> {
      ChainMap ti = t.apply(i);
      if (!is_cofibration(ti)) return std::string("T(X) -> T(Y) is not a cofibration");
      ChainCokernel top = chain_cokernel(ti), bottom = chain_cokernel(i);
      ChainMap cmp = chain_factor_through_epi(top.q, t.apply(bottom.q));
      if (auto k = quasi_iso_failure(cmp, up_to)) return "T(Y)/T(X) -> T(Y/X) fails on H_" + std::to_string(*k);
      return std::nullopt;
    });
    rep.run("right-exact.free-cells", "right-exact/free-cell-extension", inst, "exact", [&]() -> std::optional<std::string> {
      const ChainComplex& x = i.src();
      TAlgebra<ChainContext> v = free_algebra(t, chain_direct_sum(x, x));
      FreeCellAttachment att = free_cell_attachment(t, i, v, t.apply(chain_inj1(x, x)));
      if (!is_cofibration(att.from_v)) return std::string("V -> W is not a cofibration");
      return std::nullopt;
    });
  }
  return rep;
}

CheckReport check_excellent_partial(const StrongMonad<ChainContext>& t, const std::vector<ChainComplex>& battery, std::uint64_t seed,
                                    std::size_t samples) {
  CheckReport rep;
  std::vector<ChainComplex> ok;
  for (const auto& x : battery)
    if (t.accepts(x)) ok.push_back(x);
  for (const auto& x : ok)
    rep.run("excellent.unit-cofibration", "excellent/well-pointed", t.name() + " X=" + x.describe(), "exact", [&]() -> std::optional<std::string> {
      if (!is_cofibration(t.eta(x))) return std::string("eta_X is not a cofibration");
      return std::nullopt;
    });
  Rng rng(seed);
  for (std::size_t k = 0; k < samples && !ok.empty(); ++k) {
    const ChainComplex& b = ok[rng() % ok.size()];
    const ChainComplex& c = ok[rng() % ok.size()];
    ChainMap h1 = random_chain_map(rng, c, b), h2 = random_chain_map(rng, c, b);
    const std::string inst = t.name() + " sample " + std::to_string(k) + " B=" + b.describe() + " C=" + c.describe();
    rep.run("excellent.reflexive-coequalizer", "excellent/reflexive-coequalizers", inst, "exact", [&]() -> std::optional<std::string> {
      ChainMap f = chain_copair(chain_identity(b), h1), g = chain_copair(chain_identity(b), h2);
      auto q = coequalize(t.context(), f, g);
      auto tq = coequalize(t.context(), t.apply(f), t.apply(g));
      ChainMap cmp = chain_factor_through_epi(tq.q, t.apply(q.q));
      if (!chain_is_iso(cmp)) return std::string("coeq(Tf, Tg) -> T(coeq(f, g)) is not an iso");
      return std::nullopt;
    });
  }
  rep.add("excellent.filtered-colimits", "excellent/filtered-colimits", t.name(), "assumed", true, "not sampled");
  return rep;
}

// ---- pointed monad ----

namespace {
ChainComplex point(Ground g) { return ChainComplex::sphere(g, 0); }
}  // namespace

ChainComplex PointedMonad::apply(const ChainComplex& x) const { return chain_direct_sum(x, point(ctx_.ground)); }

ChainMap PointedMonad::apply(const ChainMap& f) const { return chain_direct_sum(f, chain_identity(point(ctx_.ground))); }

ChainMap PointedMonad::mu(const ChainComplex& x) const {
  const ChainComplex p = point(ctx_.ground), tx = apply(x);
  return chain_copair(chain_identity(tx), chain_inj2(x, p));
}

ChainMap PointedMonad::eta(const ChainComplex& x) const { return chain_inj1(x, point(ctx_.ground)); }

ChainMap PointedMonad::sigma(const ChainComplex& x, const ChainComplex& y) const {
  // X ⊕ (Y ⊕ R) and (X ⊕ Y) ⊕ R share their basis order
  ChainComplex src = chain_direct_sum(x, apply(y)), tgt = apply(chain_direct_sum(x, y));
  std::vector<SparseMatrix> f;
  for (std::size_t n = 0; n < std::max(src.length(), tgt.length()); ++n) f.push_back(SparseMatrix::identity(src.dim(n)));
  return ChainMap(src, tgt, f);
}

}  // namespace mb
