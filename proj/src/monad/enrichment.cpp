#include "mb/monad/enrichment.hpp"

namespace mb {

FpMorphism strength_to_enrichment(const StrongMonad<FpAbContext>& t, const FpGroup& a1, const FpGroup& a2) {
  const FpAbContext& ctx = t.context();
  FpHom hom = fp_hom(a1, a2);
  FpMorphism body = ctx.compose(t.apply(fp_eval(hom)), t.sigma(hom.group, a1));
  return fp_curry(body, hom.group, fp_hom(t.apply(a1), t.apply(a2)));
}

Enrichment enrichment_of(const StrongMonad<FpAbContext>& t) {
  return [&t](const FpGroup& a1, const FpGroup& a2) { return strength_to_enrichment(t, a1, a2); };
}

FpMorphism enrichment_to_strength(const StrongMonad<FpAbContext>& t, const Enrichment& phi, const FpGroup& x, const FpGroup& a) {
  const FpAbContext& ctx = t.context();
  const FpGroup xa = ctx.tensor(x, a);
  FpMorphism coev = fp_coev(x, fp_hom(a, xa));
  return fp_uncurry(ctx.compose(phi(a, xa), coev), fp_hom(t.apply(a), t.apply(xa)));
}

CheckReport check_enrichment_roundtrip(const StrongMonad<FpAbContext>& t, const std::vector<FpGroup>& battery) {
  const FpAbContext& ctx = t.context();
  CheckReport rep;
  Enrichment phi = enrichment_of(t);
  for (const auto& x : battery) {
    for (const auto& a : battery) {
      rep.run("enrichment.roundtrip", "strength/enrichment-correspondence", t.name() + " (" + ctx.describe(x) + ", " + ctx.describe(a) + ")",
              "exact", [&]() -> std::optional<std::string> {
                FpMorphism back = enrichment_to_strength(t, phi, x, a);
                FpMorphism orig = t.sigma(x, a);
                if (ctx.equal(back, orig)) return std::nullopt;
                return "recovered " + ctx.describe(back) + " vs " + ctx.describe(orig);
              });
    }
  }
  // φ preserves identities: φ(id_A) = id_{TA}
  for (const auto& a : battery) {
    rep.run("enrichment.identity", "strength/enrichment-correspondence", t.name() + " " + ctx.describe(a), "exact",
            [&]() -> std::optional<std::string> {
              FpHom hom = fp_hom(a, a);
              FpHom thom = fp_hom(t.apply(a), t.apply(a));
              FpMorphism p = phi(a, a);
              IntVector c = fp_hom_coordinates(hom, IntMatrix::identity(a.gens));
              IntVector image = column_of(p.m * from_columns({c}, c.size()), 0);
              IntMatrix got = fp_hom_matrix(thom, image);
              if (fp_equal(FpMorphism{t.apply(a), t.apply(a), got}, ctx.identity(t.apply(a)))) return std::nullopt;
              return "phi(id) = " + to_string(got);
            });
  }
  return rep;
}

}  // namespace mb
