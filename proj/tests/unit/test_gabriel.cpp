#include "catch_amalgamated.hpp"

#include "mb/gabriel/hom_tensor.hpp"
#include "mb/monad/laws.hpp"

using namespace mb;

namespace {

const FpAbContext fpab{};

std::string canon(const FpGroup& g) { return fp_canonical(g).str(); }

// Brute force: multiply the four 2×2 matrix units as integer matrices.
MonoidObject<FpAbContext> m2z_by_hand() {
  std::vector<IntMatrix> units;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      IntMatrix e(2, 2);
      e(i, j) = 1;
      units.push_back(e);
    }
  IntMatrix table(4, 16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      IntMatrix prod = units[a] * units[b];
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) table(2 * i + j, 4 * a + b) = prod(i, j);
    }
  FpGroup r = FpGroup::free(4);
  return {r, FpMorphism{fp_tensor(r, r), r, table}, FpMorphism{FpGroup::free(1), r, IntMatrix::from_rows({{1}, {0}, {0}, {1}})}};
}

}  // namespace

TEST_CASE("ring presets", "[gabriel]") {
  for (const char* name : {"Z", "ZxZ", "M2Z", "C2"}) {
    INFO(name);
    CHECK_FALSE(ring_violation(ring_preset(name)).has_value());
    CHECK_FALSE(ring_violation(ring_opposite(ring_preset(name))).has_value());
    for (const auto& m : module_battery(ring_preset(name))) {
      INFO(m.label);
      CHECK_FALSE(module_violation(m).has_value());
    }
  }
  CHECK_THROWS(ring_preset("Q"));
  RingPresentation bad = ring_c2();
  bad.mult(1, 2) = 0;  // g·1 = 0
  CHECK(ring_violation(bad).has_value());
  // g acting by 2 on ℤ does not square to 1
  SModule m{ring_c2(), FpGroup::free(1), {IntMatrix::identity(1), IntMatrix::from_rows({{2}})}, "bad"};
  CHECK(module_violation(m).has_value());
}

TEST_CASE("projective summands", "[gabriel]") {
  CHECK(resolve(projective_preset("Z", "Z2")).p == 2);
  CHECK(resolve(projective_preset("ZxZ", "e1")).p == 1);
  CHECK(resolve(projective_preset("M2Z", "col")).p == 2);
  CHECK(resolve(projective_preset("C2", "S")).p == 2);
  ProjectiveSummand two{ring_z(), 1, {IntVector{Integer(2)}}, "2"};
  CHECK(idempotent_violation(two).has_value());
  CHECK_THROWS_AS(HomTensorMonad(two), std::invalid_argument);
  CHECK_THROWS(projective_preset("Z", "e1"));
}

TEST_CASE("hom-tensor values", "[gabriel]") {
  HomTensorMonad z2(projective_preset("Z", "Z2"));
  CHECK(canon(z2.apply(FpGroup::cyclic(4))) == canon(FpGroup::sum_of_cyclics({4, 4, 4, 4})));
  CHECK(canon(z2.apply(FpGroup::free(1))) == "Z^4");
  HomTensorMonad z1(projective_preset("Z", "Z"));
  HomTensorMonad e1(projective_preset("ZxZ", "e1"));
  HomTensorMonad col(projective_preset("M2Z", "col"));
  HomTensorMonad c2(projective_preset("C2", "S"));
  for (const auto& x : fpab_battery()) {
    CHECK(canon(z1.apply(x)) == canon(x));
    CHECK(canon(e1.apply(x)) == canon(x));
    CHECK(canon(col.apply(x)) == canon(x));
    CHECK(canon(c2.apply(x)) == canon(fp_direct_sum(x, x)));
  }
}

TEST_CASE("hom-tensor monads pass the law suites", "[gabriel]") {
  auto battery = fpab_battery();
  auto triples = sample_triples(battery.size(), 8, 11);
  for (const auto& [s, p] : std::vector<std::pair<std::string, std::string>>{{"Z", "Z2"}, {"ZxZ", "e1"}, {"M2Z", "col"}, {"C2", "S"}}) {
    HomTensorMonad t(projective_preset(s, p));
    CheckReport rep = check_monad_laws(t, battery, 3, 4);
    rep.append(check_strength_laws(t, battery, triples, 3, 4));
    INFO(t.name() << " " << (rep.first_failure() ? rep.first_failure()->check + " " + rep.first_failure()->witness : ""));
    CHECK(rep.pass());
    CHECK(is_linear(t, battery).linear);
    CHECK(check_linear_strength(t, battery).pass());
  }
}

TEST_CASE("hom-tensor perturbations are caught", "[gabriel]") {
  auto battery = fpab_battery();
  auto triples = sample_triples(battery.size(), 6, 11);
  MonadPtr<FpAbContext> t = std::make_shared<HomTensorMonad>(projective_preset("Z", "Z2"));
  for (const auto& p : seeded_perturbations(t, 0xBEEF)) {
    INFO(p->name());
    CheckReport rep = check_monad_laws(*p, battery, 3, 2);
    rep.append(check_strength_laws(*p, battery, triples, 3, 2));
    CHECK_FALSE(rep.pass());
  }
}

TEST_CASE("monoid of the unit of hom-tensor is End(P)", "[gabriel]") {
  HomTensorMonad t(projective_preset("Z", "Z2"));
  auto got = monoid_of_unit(t);
  CHECK(check_monoid_laws(fpab, got).pass());
  auto oracle = m2z_by_hand();
  // generator (y, q) of T(ℤ) is the endomorphism b_q ↦ b_y, the matrix unit at 2y + q
  FpMorphism phi{got.carrier, oracle.carrier, t.hom(fpab.unit())->inclusion.m};
  auto violation = monoid_iso_violation(fpab, got, oracle, phi);
  INFO(violation.value_or(""));
  CHECK_FALSE(violation.has_value());
  // the opposite multiplication does not match along the same map
  auto opposite = oracle;
  opposite.m = FpMorphism{oracle.m.src, oracle.m.tgt, fpab.compose(oracle.m, fpab.symmetry(oracle.carrier, oracle.carrier)).m};
  CHECK(monoid_iso_violation(fpab, got, opposite, phi).has_value());

  EndoRing r = endo_ring(projective_preset("Z", "Z2"));
  CHECK(r.ring.mult == ring_m2z().mult);
  CHECK(r.ring.unit == ring_m2z().unit);
  CHECK(endo_ring(projective_preset("ZxZ", "e1")).ring.rank == 1);
  CHECK(endo_ring(projective_preset("Z", "Z")).ring.mult == ring_z().mult);
}

TEST_CASE("linear approximation of hom-tensor", "[gabriel]") {
  auto battery = fpab_battery();
  auto t = std::make_shared<HomTensorMonad>(projective_preset("Z", "Z2"));
  auto s = unit_tensor_monad<FpAbContext>(*t);
  Transformation<FpAbContext> lambda = [&](const FpGroup& x) { return linear_approximation<FpAbContext>(*t, x); };
  CHECK(check_monad_morphism<FpAbContext>(*s, *t, lambda, battery).pass());
  for (const auto& x : battery) CHECK(fp_is_iso(lambda(x)));
  // X = ℤ/2: both sides of σ_{X,ℤ} are (ℤ/2)⁴
  auto sig = t->sigma(FpGroup::cyclic(2), fpab.unit());
  CHECK(canon(sig.src) == canon(FpGroup::sum_of_cyclics({2, 2, 2, 2})));
  CHECK(canon(sig.tgt) == canon(sig.src));
}

TEST_CASE("Gabriel round trip", "[gabriel]") {
  auto zb = module_battery(ring_z());
  REQUIRE(zb.size() == 9);
  auto rep = gabriel_roundtrip(projective_preset("Z", "Z2"), zb);
  INFO((rep.first_failure() ? rep.first_failure()->witness : std::string()));
  CHECK(rep.pass());
  CHECK(rep.records.size() == 18);
  CHECK(gabriel_roundtrip(projective_preset("Z", "Z"), zb).pass());
  CHECK(gabriel_roundtrip(projective_preset("ZxZ", "S"), module_battery(ring_zxz())).pass());
  CHECK(gabriel_roundtrip(projective_preset("M2Z", "col"), module_battery(ring_m2z())).pass());
  CHECK(gabriel_roundtrip(projective_preset("C2", "S"), module_battery(ring_c2())).pass());

  // the first factor of ℤ×ℤ does not generate: the second factor is invisible to Hom(P, -)
  auto bad = gabriel_roundtrip(projective_preset("ZxZ", "e1"), module_battery(ring_zxz()));
  REQUIRE_FALSE(bad.pass());
  CHECK(bad.first_failure()->instance.find("second factor") != std::string::npos);
  CHECK(bad.first_failure()->witness.find("Hom(P,X) = 0") != std::string::npos);
}

TEST_CASE("Morita correspondence between Z and M2(Z)", "[gabriel]") {
  auto rep = morita_correspondence(projective_preset("Z", "Z2"), module_battery(ring_z()));
  INFO((rep.first_failure() ? rep.first_failure()->check + " " + rep.first_failure()->witness : std::string()));
  CHECK(rep.pass());
  CHECK_THROWS(morita_correspondence(projective_preset("C2", "S"), module_battery(ring_c2())));
}
