#include "catch_amalgamated.hpp"

#include "mb/chain/tensor.hpp"
#include "mb/chain/homology.hpp"
#include "mb/monad/enrichment.hpp"
#include "mb/monad/laws.hpp"
#include "mb/monad/tensor_algebra.hpp"

using namespace mb;

namespace {

template <class Ctx>
CheckReport all_laws(const StrongMonad<Ctx>& t, const std::vector<typename Ctx::Object>& battery) {
  CheckReport rep = check_monad_laws(t, battery, 7);
  rep.append(check_strength_laws(t, battery, sample_triples(battery.size(), 12, 7), 7));
  return rep;
}

template <class Ctx>
void require_clean(const CheckReport& rep) {
  INFO((rep.first_failure() ? rep.first_failure()->check + ": " + rep.first_failure()->witness : std::string()));
  CHECK(rep.pass());
  CHECK(rep.records.size() > 20);
}

const FpAbContext fpab{};
const ChainContext chq{Ground::Q, ChainMode::Tensor};

}  // namespace

TEST_CASE("shipped monoids satisfy the monoid laws", "[monad]") {
  CHECK(check_monoid_laws(fpab, group_ring_c2()).pass());
  CHECK(check_monoid_laws(fpab, z_mod_2_ring()).pass());
  CHECK(check_monoid_laws(fpab, fpab_unit_monoid()).pass());
  CHECK(check_monoid_laws(chq, dual_numbers()).pass());
  CHECK(check_monoid_laws(chq, exterior_algebra()).pass());
  CHECK(check_monoid_laws(chq, chain_group_ring_c2()).pass());
  CHECK(check_monoid_laws(ChainContext{Ground::Z, ChainMode::Tensor}, exterior_algebra(Ground::Z)).pass());
}

TEST_CASE("broken multiplications are rejected", "[monad]") {
  auto bad = group_ring_c2();
  // g·g = g: still associative and unital
  bad.m = fp_morphism(bad.m.src, bad.m.tgt, IntMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 1, 1}}));
  CHECK(check_monoid_laws(fpab, bad).pass());
  // g·1 = 0 breaks the right unit law
  bad.m = fp_morphism(bad.m.src, bad.m.tgt, IntMatrix::from_rows({{1, 0, 0, 1}, {0, 0, 1, 0}}));
  CHECK_FALSE(check_monoid_laws(fpab, bad).pass());
  CHECK_THROWS_AS(monad_from_monoid(fpab, bad, "bad"), std::invalid_argument);
}

TEST_CASE("identity and tensor monads pass every law on FPAb", "[monad]") {
  auto battery = fpab_battery();
  require_clean<FpAbContext>(all_laws(IdentityMonad<FpAbContext>(fpab), battery));
  require_clean<FpAbContext>(all_laws(TensorMonad<FpAbContext>(fpab, group_ring_c2(), "-(x)Z[C2]"), battery));
  require_clean<FpAbContext>(all_laws(TensorMonad<FpAbContext>(fpab, z_mod_2_ring(), "-(x)Z/2"), battery));
}

TEST_CASE("tensor monads pass every law on chains", "[monad]") {
  auto battery = chain_battery(Ground::Q);
  require_clean<ChainContext>(all_laws(IdentityMonad<ChainContext>(chq), battery));
  require_clean<ChainContext>(all_laws(TensorMonad<ChainContext>(chq, dual_numbers(), "-(x)Q[e]"), battery));
  require_clean<ChainContext>(all_laws(TensorMonad<ChainContext>(chq, exterior_algebra(), "-(x)L(x)"), battery));
}

TEST_CASE("seeded perturbations are caught", "[monad]") {
  auto fb = fpab_battery();
  MonadPtr<FpAbContext> zc2 = std::make_shared<TensorMonad<FpAbContext>>(fpab, group_ring_c2(), "-(x)Z[C2]");
  for (const auto& p : seeded_perturbations(zc2, 0xBEEF)) {
    INFO(p->name());
    CHECK_FALSE(all_laws(*p, fb).pass());
  }
  auto cb = chain_battery(Ground::Q);
  MonadPtr<ChainContext> ext = std::make_shared<TensorMonad<ChainContext>>(chq, exterior_algebra(), "-(x)L(x)");
  for (const auto& p : seeded_perturbations(ext, 0xBEEF)) {
    INFO(p->name());
    CHECK_FALSE(all_laws(*p, cb).pass());
  }
}

TEST_CASE("monoid of the unit recovers the multiplication table", "[monad]") {
  for (const auto& m : {group_ring_c2(), z_mod_2_ring()}) {
    TensorMonad<FpAbContext> t(fpab, m, "t");
    auto got = monoid_of_unit(t);
    CHECK(got.carrier == m.carrier);
    CHECK(got.m.m == m.m.m);
    CHECK(got.e.m == m.e.m);
  }
  for (const auto& m : {dual_numbers(), exterior_algebra()}) {
    TensorMonad<ChainContext> t(chq, m, "t");
    auto got = monoid_of_unit(t);
    CHECK(got.carrier == m.carrier);
    CHECK(chain_equal(got.m, m.m));
    CHECK(chain_equal(got.e, m.e));
  }
  // the identity monad gives the unit monoid
  auto unit = monoid_of_unit(IdentityMonad<FpAbContext>(fpab));
  CHECK(unit.m.m == IntMatrix::identity(1));
}

TEST_CASE("linear approximation of a tensor monad is the identity", "[monad]") {
  auto battery = chain_battery(Ground::Q);
  auto t = std::make_shared<TensorMonad<ChainContext>>(chq, exterior_algebra(), "-(x)L(x)");
  auto s = unit_tensor_monad<ChainContext>(*t);
  Transformation<ChainContext> lambda = [&](const ChainComplex& x) { return linear_approximation<ChainContext>(*t, x); };
  CHECK(check_monad_morphism<ChainContext>(*s, *t, lambda, battery).pass());
  CHECK(check_strong_naturality<ChainContext>(*s, *t, lambda, battery).pass());
  for (const auto& x : battery) CHECK(chq.is_iso(lambda(x)));
  CHECK(is_linear<ChainContext>(*t, battery).linear);

  // a wrong transformation (zero) fails the unit condition
  Transformation<ChainContext> zero = [&](const ChainComplex& x) { return chq.zero_map(s->apply(x), t->apply(x)); };
  CHECK_FALSE(check_monad_morphism<ChainContext>(*s, *t, zero, battery).pass());
}

TEST_CASE("monoid isomorphism check", "[monad]") {
  auto c2 = group_ring_c2();
  CHECK_FALSE(monoid_iso_violation(fpab, c2, c2, fp_identity(c2.carrier)).has_value());
  // swapping 1 and g is not multiplicative
  auto swap = fp_morphism(c2.carrier, c2.carrier, IntMatrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(monoid_iso_violation(fpab, c2, c2, swap).has_value());
  // g ↦ −g is an automorphism of ℤ[C₂]
  auto neg = fp_morphism(c2.carrier, c2.carrier, IntMatrix::from_rows({{1, 0}, {0, -1}}));
  CHECK_FALSE(monoid_iso_violation(fpab, c2, c2, neg).has_value());
}

TEST_CASE("tensor algebra word counts", "[monad][tensoralg]") {
  TensorAlgebraMonad t(Ground::Q, 4);
  // X = ℚ[1]: one word per degree, x^n, and d = 0
  auto s1 = t.apply(ChainComplex::sphere(Ground::Q, 1));
  for (std::size_t n = 1; n <= 4; ++n) CHECK(s1.dim(n) == 1);
  // X = ℚ²[1]: 2^n words in degree n
  auto s11 = t.apply(ChainComplex::sphere(Ground::Q, 1, 2));
  for (std::size_t n = 1; n <= 4; ++n) CHECK(s11.dim(n) == (std::size_t(1) << n));
  // X = D²: T(D²) is acyclic below the cap; the words are x^a and y-containing words
  auto td = t.apply(ChainComplex::disk(Ground::Q, 2));
  CHECK(td.dim(1) == 1);
  CHECK(td.dim(2) == 2);
  CHECK(td.dim(3) == 3);
  CHECK(td.dim(4) == 5);
  CHECK(is_acyclic(td.truncated(3), 2));
  CHECK_FALSE(t.accepts(ChainComplex::sphere(Ground::Q, 0)));
  CHECK_FALSE(t.accepts(ChainComplex::sphere(Ground::Q, 5)));
}

TEST_CASE("tensor algebra monad laws and perturbations", "[monad][tensoralg]") {
  auto t = std::make_shared<TensorAlgebraMonad>(Ground::Q, 4);
  auto battery = positive_chain_battery(Ground::Q, 4);
  require_clean<ChainContext>(all_laws(*t, battery));
  for (const auto& p : seeded_perturbations<ChainContext>(t, 0xBEEF)) {
    INFO(p->name());
    CHECK_FALSE(all_laws(*p, battery).pass());
  }
}

TEST_CASE("tensor algebra is not linear", "[monad][tensoralg]") {
  auto t = std::make_shared<TensorAlgebraMonad>(Ground::Q, 4);
  auto battery = positive_chain_battery(Ground::Q, 4);
  auto verdict = is_linear<ChainContext>(*t, battery);
  CHECK_FALSE(verdict.linear);
  CHECK(verdict.witness.find("degree 2") != std::string::npos);
  CHECK_FALSE(strength_weak_invertibility<ChainContext>(*t, battery, 3).linear);

  // T(0) = 0, so λ_X = η_X, a monad morphism that misses x⊗x
  auto s = unit_tensor_monad<ChainContext>(*t);
  Transformation<ChainContext> lambda = [&](const ChainComplex& x) { return linear_approximation<ChainContext>(*t, x); };
  CHECK(check_monad_morphism<ChainContext>(*s, *t, lambda, battery).pass());
  CHECK(check_strong_naturality<ChainContext>(*s, *t, lambda, battery).pass());
  auto q1 = ChainComplex::sphere(Ground::Q, 1);
  auto l = lambda(q1);
  CHECK(l.src().dim(2) == 0);
  CHECK(l.tgt().dim(2) == 1);
  CHECK_FALSE(is_quasi_iso(l, 3));
  CHECK(chain_equal(l, t->eta(q1)));
}

TEST_CASE("strength and enrichment determine each other", "[monad][enrichment]") {
  auto battery = fpab_battery();
  IdentityMonad<FpAbContext> id(fpab);
  TensorMonad<FpAbContext> z2(fpab, z_mod_2_ring(), "-(x)Z/2");
  auto r1 = check_enrichment_roundtrip(id, battery);
  auto r2 = check_enrichment_roundtrip(z2, battery);
  INFO((r2.first_failure() ? r2.first_failure()->witness : std::string()));
  CHECK(r1.pass());
  CHECK(r2.pass());
  CHECK(r2.records.size() == battery.size() * battery.size() + battery.size());

  // identity monad: φ is the identity of Hom(ℤ², ℤ/4)
  auto phi = strength_to_enrichment(id, FpGroup::free(2), FpGroup::cyclic(4));
  CHECK(fp_equal(phi, fp_identity(phi.src)));

  // −⊗ℤ/2 on Hom(ℤ,ℤ) = ℤ is reduction mod 2 onto Hom(ℤ/2,ℤ/2) = ℤ/2
  auto red = strength_to_enrichment(z2, FpGroup::free(1), FpGroup::free(1));
  CHECK(fp_canonical(red.src).str() == fp_canonical(FpGroup::free(1)).str());
  CHECK(fp_canonical(red.tgt).str() == fp_canonical(FpGroup::cyclic(2)).str());
  CHECK(fp_is_surjective(red));
  auto k = fp_kernel(red);
  auto twice = fp_morphism(FpGroup::free(1), red.src, IntMatrix::from_rows({{2}}));
  CHECK(fp_equal(fp_compose(red, twice), fp_zero(twice.src, red.tgt)));
  CHECK(fp_canonical(fp_cokernel(k.inclusion).group).str() == "Z/2");

  // a perturbed strength does not survive the round trip
  MonadPtr<FpAbContext> base = std::make_shared<TensorMonad<FpAbContext>>(fpab, z_mod_2_ring(), "-(x)Z/2");
  PerturbedMonad<FpAbContext> bad(base, MonadComponent::Sigma, 3);
  CHECK_FALSE(check_enrichment_roundtrip(bad, battery).pass());
}
