#include "mb/monad/laws.hpp"

#include "mb/chain/homology.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace mb {

namespace {

template <class Ctx>
std::optional<std::string> differ(const Ctx& ctx, const typename Ctx::Morphism& lhs, const typename Ctx::Morphism& rhs) {
  if (ctx.equal(lhs, rhs)) return std::nullopt;
  if (!ctx.same(ctx.src(lhs), ctx.src(rhs)) || !ctx.same(ctx.tgt(lhs), ctx.tgt(rhs))) return std::string("sides have different ends");
  return "lhs " + ctx.describe(lhs) + " | rhs " + ctx.describe(rhs);
}

std::string shape_note(const FpMorphism& f) {
  return "source " + fp_canonical(f.src).str() + ", target " + fp_canonical(f.tgt).str();
}

std::string shape_note(const ChainMap& f) {
  for (std::size_t n = 0; n < std::max(f.src().length(), f.tgt().length()); ++n) {
    if (f.src().dim(n) != f.tgt().dim(n)) {
      return "degree " + std::to_string(n) + ": source dim " + std::to_string(f.src().dim(n)) + ", target dim " +
             std::to_string(f.tgt().dim(n));
    }
  }
  return "dimensions agree, map not invertible";
}

template <class Ctx>
std::string label(const Ctx& ctx, const std::vector<const typename Ctx::Object*>& objs) {
  std::string out;
  for (auto* o : objs) out += (out.empty() ? "" : ", ") + ctx.describe(*o);
  return "(" + out + ")";
}

}  // namespace

std::vector<std::array<std::size_t, 3>> sample_triples(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::vector<std::array<std::size_t, 3>> out;
  if (n == 0) return out;
  out.push_back({0, 0, 0});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  while (out.size() < count) out.push_back({pick(rng), pick(rng), pick(rng)});
  return out;
}

template <class Ctx>
CheckReport check_monad_laws(const StrongMonad<Ctx>& t, const std::vector<typename Ctx::Object>& battery, std::uint64_t seed,
                             std::size_t samples) {
  const Ctx& ctx = t.context();
  CheckReport rep;
  const std::string who = t.name() + " ";
  for (const auto& x : battery) {
    if (!t.accepts(x)) continue;
    const std::string inst = who + ctx.describe(x);
    rep.run("monad.associativity", "strong-monad/multiplication-associative", inst, "exact", [&]() {
      auto tx = t.apply(x);
      return differ(ctx, ctx.compose(t.mu(x), t.apply(t.mu(x))), ctx.compose(t.mu(x), t.mu(t.apply(x))));
    });
    rep.run("monad.left_unit", "strong-monad/unit-left", inst, "exact",
            [&]() { return differ(ctx, ctx.compose(t.mu(x), t.eta(t.apply(x))), ctx.identity(t.apply(x))); });
    rep.run("monad.right_unit", "strong-monad/unit-right", inst, "exact",
            [&]() { return differ(ctx, ctx.compose(t.mu(x), t.apply(t.eta(x))), ctx.identity(t.apply(x))); });
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, battery.size() - 1);
  for (std::size_t k = 0; k < samples && !battery.empty(); ++k) {
    const auto& x = battery[pick(rng)];
    const auto& y = battery[pick(rng)];
    if (!t.accepts(x) || !t.accepts(y)) continue;
    auto f = ctx.random_morphism(rng, x, y);
    const std::string inst = who + label(ctx, {&x, &y});
    rep.run("monad.eta_natural", "strong-monad/unit-natural", inst, "exact",
            [&]() { return differ(ctx, ctx.compose(t.apply(f), t.eta(x)), ctx.compose(t.eta(y), f)); });
    rep.run("monad.mu_natural", "strong-monad/multiplication-natural", inst, "exact",
            [&]() { return differ(ctx, ctx.compose(t.apply(f), t.mu(x)), ctx.compose(t.mu(y), t.apply(t.apply(f)))); });
  }
  return rep;
}

template <class Ctx>
CheckReport check_strength_laws(const StrongMonad<Ctx>& t, const std::vector<typename Ctx::Object>& battery,
                                const std::vector<std::array<std::size_t, 3>>& triples, std::uint64_t seed, std::size_t samples) {
  const Ctx& ctx = t.context();
  CheckReport rep;
  const std::string who = t.name() + " ";
  const auto i = ctx.unit();
  for (const auto& x : battery) {
    if (!t.accepts(x)) continue;
    rep.run("strength.unit", "strength/unit-constraint", who + ctx.describe(x), "exact", [&]() {
      auto lhs = ctx.compose(t.apply(ctx.left_unitor(x)), t.sigma(i, x));
      return differ(ctx, lhs, ctx.left_unitor(t.apply(x)));
    });
  }
  for (const auto& x : battery) {
    for (const auto& y : battery) {
      if (!t.accepts(x) || !t.accepts(y) || !t.accepts(ctx.tensor(x, y))) continue;
      const std::string inst = who + label(ctx, {&x, &y});
      rep.run("strength.eta", "strength/unit-naturality", inst, "exact", [&]() {
        auto lhs = ctx.compose(t.sigma(x, y), ctx.tensor(ctx.identity(x), t.eta(y)));
        return differ(ctx, lhs, t.eta(ctx.tensor(x, y)));
      });
      rep.run("strength.mu", "strength/multiplication-naturality", inst, "exact", [&]() {
        auto lhs = ctx.compose(t.sigma(x, y), ctx.tensor(ctx.identity(x), t.mu(y)));
        auto rhs = ctx.compose(t.mu(ctx.tensor(x, y)), ctx.compose(t.apply(t.sigma(x, y)), t.sigma(x, t.apply(y))));
        return differ(ctx, lhs, rhs);
      });
    }
  }
  for (const auto& tr : triples) {
    const auto& x = battery.at(tr[0]);
    const auto& y = battery.at(tr[1]);
    const auto& z = battery.at(tr[2]);
    if (!t.accepts(x) || !t.accepts(y) || !t.accepts(z)) continue;
    rep.run("strength.associativity", "strength/associativity-constraint", who + label(ctx, {&x, &y, &z}), "exact", [&]() {
      auto xy = ctx.tensor(x, y);
      auto lhs = ctx.compose(t.apply(ctx.assoc(x, y, z)), t.sigma(xy, z));
      auto rhs = ctx.compose(t.sigma(x, ctx.tensor(y, z)),
                             ctx.compose(ctx.tensor(ctx.identity(x), t.sigma(y, z)), ctx.assoc(x, y, t.apply(z))));
      return differ(ctx, lhs, rhs);
    });
  }
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  std::uniform_int_distribution<std::size_t> pick(0, battery.size() - 1);
  for (std::size_t k = 0; k < samples && !battery.empty(); ++k) {
    const auto& x = battery[pick(rng)];
    const auto& x2 = battery[pick(rng)];
    const auto& y = battery[pick(rng)];
    const auto& y2 = battery[pick(rng)];
    if (!t.accepts(x) || !t.accepts(x2) || !t.accepts(y) || !t.accepts(y2)) continue;
    auto f = ctx.random_morphism(rng, x, x2);
    auto g = ctx.random_morphism(rng, y, y2);
    rep.run("strength.natural", "strength/natural", who + label(ctx, {&x, &x2, &y, &y2}), "exact", [&]() {
      auto lhs = ctx.compose(t.sigma(x2, y2), ctx.tensor(f, t.apply(g)));
      auto rhs = ctx.compose(t.apply(ctx.tensor(f, g)), t.sigma(x, y));
      return differ(ctx, lhs, rhs);
    });
  }
  return rep;
}

template <class Ctx>
CheckReport check_monoid_laws(const Ctx& ctx, const MonoidObject<Ctx>& mo) {
  CheckReport rep;
  const auto& m = mo.carrier;
  const std::string inst = ctx.describe(m);
  rep.run("monoid.associativity", "monoid/associative", inst, "exact", [&]() {
    auto lhs = ctx.compose(mo.m, ctx.tensor(mo.m, ctx.identity(m)));
    auto rhs = ctx.compose(mo.m, ctx.compose(ctx.tensor(ctx.identity(m), mo.m), ctx.assoc(m, m, m)));
    return differ(ctx, lhs, rhs);
  });
  rep.run("monoid.left_unit", "monoid/unit-left", inst, "exact", [&]() {
    return differ(ctx, ctx.compose(mo.m, ctx.tensor(mo.e, ctx.identity(m))), ctx.left_unitor(m));
  });
  rep.run("monoid.right_unit", "monoid/unit-right", inst, "exact", [&]() {
    return differ(ctx, ctx.compose(mo.m, ctx.tensor(ctx.identity(m), mo.e)), ctx.right_unitor(m));
  });
  return rep;
}

template <class Ctx>
MonoidObject<Ctx> monoid_of_unit(const StrongMonad<Ctx>& t) {
  const Ctx& ctx = t.context();
  const auto i = ctx.unit();
  if (!t.accepts(i)) throw std::domain_error("monoid_of_unit: " + t.name() + " cannot evaluate on the unit object");
  const auto ti = t.apply(i);
  auto m = ctx.compose(t.mu(i), ctx.compose(t.apply(ctx.right_unitor(ti)), t.sigma(ti, i)));
  return MonoidObject<Ctx>{ti, m, t.eta(i)};
}

template <class Ctx>
typename Ctx::Morphism linear_approximation(const StrongMonad<Ctx>& t, const typename Ctx::Object& x) {
  const Ctx& ctx = t.context();
  return ctx.compose(t.apply(ctx.right_unitor(x)), t.sigma(x, ctx.unit()));
}

template <class Ctx>
CheckReport check_monad_morphism(const StrongMonad<Ctx>& s, const StrongMonad<Ctx>& t, const Transformation<Ctx>& lambda,
                                 const std::vector<typename Ctx::Object>& battery) {
  const Ctx& ctx = t.context();
  CheckReport rep;
  for (const auto& x : battery) {
    if (!t.accepts(x) || !s.accepts(x)) continue;
    const std::string inst = s.name() + "=>" + t.name() + " " + ctx.describe(x);
    rep.run("morphism.unit", "monad-morphism/unit", inst, "exact",
            [&]() { return differ(ctx, ctx.compose(lambda(x), s.eta(x)), t.eta(x)); });
    rep.run("morphism.multiplication", "monad-morphism/multiplication", inst, "exact", [&]() {
      auto lhs = ctx.compose(lambda(x), s.mu(x));
      auto rhs = ctx.compose(t.mu(x), ctx.compose(t.apply(lambda(x)), lambda(s.apply(x))));
      return differ(ctx, lhs, rhs);
    });
  }
  return rep;
}

template <class Ctx>
CheckReport check_strong_naturality(const StrongMonad<Ctx>& s, const StrongMonad<Ctx>& t, const Transformation<Ctx>& lambda,
                                    const std::vector<typename Ctx::Object>& battery) {
  const Ctx& ctx = t.context();
  CheckReport rep;
  for (const auto& x : battery) {
    for (const auto& y : battery) {
      if (!t.accepts(x) || !t.accepts(y) || !t.accepts(ctx.tensor(x, y))) continue;
      rep.run("morphism.strong", "monad-morphism/strong", s.name() + "=>" + t.name() + " " + label(ctx, {&x, &y}), "exact", [&]() {
        auto lhs = ctx.compose(lambda(ctx.tensor(x, y)), s.sigma(x, y));
        auto rhs = ctx.compose(t.sigma(x, y), ctx.tensor(ctx.identity(x), lambda(y)));
        return differ(ctx, lhs, rhs);
      });
    }
  }
  return rep;
}

template <class Ctx>
MonadPtr<Ctx> unit_tensor_monad(const StrongMonad<Ctx>& t) {
  return std::make_shared<TensorMonad<Ctx>>(t.context(), monoid_of_unit(t), "-(x)T(I)[" + t.name() + "]");
}

template <class Ctx>
LinearityVerdict is_linear(const StrongMonad<Ctx>& t, const std::vector<typename Ctx::Object>& battery) {
  const Ctx& ctx = t.context();
  for (const auto& x : battery) {
    for (const auto& y : battery) {
      if (!t.accepts(x) || !t.accepts(y) || !t.accepts(ctx.tensor(x, y))) continue;
      auto s = t.sigma(x, y);
      if (!ctx.is_iso(s)) return {false, "sigma" + label(ctx, {&x, &y}) + " not invertible; " + shape_note(s)};
    }
  }
  return {};
}

template <class Ctx>
LinearityVerdict strength_weak_invertibility(const StrongMonad<Ctx>& t, const std::vector<typename Ctx::Object>& battery,
                                             std::size_t up_to) {
  const Ctx& ctx = t.context();
  for (const auto& x : battery) {
    for (const auto& y : battery) {
      if (!t.accepts(x) || !t.accepts(y) || !t.accepts(ctx.tensor(x, y))) continue;
      auto s = t.sigma(x, y);
      if (!ctx.is_weq(s, up_to)) return {false, "sigma" + label(ctx, {&x, &y}) + " not a weak equivalence; " + shape_note(s)};
    }
  }
  return {};
}

template <class Ctx>
std::shared_ptr<TensorMonad<Ctx>> monad_from_monoid(const Ctx& ctx, const MonoidObject<Ctx>& m, std::string name) {
  CheckReport laws = check_monoid_laws(ctx, m);
  if (!laws.pass()) throw std::invalid_argument("monad_from_monoid: " + laws.first_failure()->check + " fails");
  return std::make_shared<TensorMonad<Ctx>>(ctx, m, std::move(name));
}

template <class Ctx>
std::optional<std::string> monoid_iso_violation(const Ctx& ctx, const MonoidObject<Ctx>& a, const MonoidObject<Ctx>& b,
                                                const typename Ctx::Morphism& phi) {
  if (!ctx.is_iso(phi)) return std::string("comparison map is not invertible");
  if (auto w = differ(ctx, ctx.compose(phi, a.m), ctx.compose(b.m, ctx.tensor(phi, phi)))) return "multiplication: " + *w;
  if (auto w = differ(ctx, ctx.compose(phi, a.e), b.e)) return "unit: " + *w;
  return std::nullopt;
}

#define MB_INSTANTIATE(Ctx)                                                                                                          \
  template CheckReport check_monad_laws<Ctx>(const StrongMonad<Ctx>&, const std::vector<Ctx::Object>&, std::uint64_t, std::size_t); \
  template CheckReport check_strength_laws<Ctx>(const StrongMonad<Ctx>&, const std::vector<Ctx::Object>&,                          \
                                                const std::vector<std::array<std::size_t, 3>>&, std::uint64_t, std::size_t);       \
  template CheckReport check_monoid_laws<Ctx>(const Ctx&, const MonoidObject<Ctx>&);                                              \
  template MonoidObject<Ctx> monoid_of_unit<Ctx>(const StrongMonad<Ctx>&);                                                         \
  template Ctx::Morphism linear_approximation<Ctx>(const StrongMonad<Ctx>&, const Ctx::Object&);                                   \
  template CheckReport check_monad_morphism<Ctx>(const StrongMonad<Ctx>&, const StrongMonad<Ctx>&, const Transformation<Ctx>&,     \
                                                 const std::vector<Ctx::Object>&);                                                 \
  template CheckReport check_strong_naturality<Ctx>(const StrongMonad<Ctx>&, const StrongMonad<Ctx>&, const Transformation<Ctx>&,  \
                                                    const std::vector<Ctx::Object>&);                                              \
  template MonadPtr<Ctx> unit_tensor_monad<Ctx>(const StrongMonad<Ctx>&);                                                          \
  template LinearityVerdict is_linear<Ctx>(const StrongMonad<Ctx>&, const std::vector<Ctx::Object>&);                              \
  template LinearityVerdict strength_weak_invertibility<Ctx>(const StrongMonad<Ctx>&, const std::vector<Ctx::Object>&, std::size_t); \
  template std::shared_ptr<TensorMonad<Ctx>> monad_from_monoid<Ctx>(const Ctx&, const MonoidObject<Ctx>&, std::string);            \
  template std::optional<std::string> monoid_iso_violation<Ctx>(const Ctx&, const MonoidObject<Ctx>&, const MonoidObject<Ctx>&,     \
                                                                const Ctx::Morphism&);

MB_INSTANTIATE(FpAbContext)
MB_INSTANTIATE(ChainContext)

}  // namespace mb
