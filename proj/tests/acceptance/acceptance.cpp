// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include "mb/algebras/algebras.hpp"
#include "mb/chain/excisive.hpp"
#include "mb/chain/homology.hpp"
#include "mb/chain/random.hpp"
#include "mb/cli/suites.hpp"
#include "mb/gabriel/hom_tensor.hpp"
#include "mb/monad/enrichment.hpp"
#include "mb/monad/laws.hpp"
#include "mb/monad/tensor_algebra.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace mb;

namespace {

const FpAbContext fpab{};
const ChainContext chq{Ground::Q, ChainMode::Tensor};
constexpr std::uint64_t kSeed = 0xC0FFEE;

// Collects the first problem; a criterion passes when nothing was noted.
struct Verdict {
  std::string problem;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && problem.empty()) problem = what;
  }
  void require(const CheckReport& rep, const std::string& what) {
    if (rep.pass()) return;
    const CheckRecord* f = rep.first_failure();
    require(false, what + ": " + f->check + " [" + f->instance + "] " + f->witness);
  }
};

std::shared_ptr<TensorMonad<FpAbContext>> fp_tensor_monad(MonoidObject<FpAbContext> m, std::string name) {
  return std::make_shared<TensorMonad<FpAbContext>>(fpab, std::move(m), std::move(name));
}
std::shared_ptr<TensorMonad<ChainContext>> ch_tensor_monad(MonoidObject<ChainContext> m, std::string name) {
  return std::make_shared<TensorMonad<ChainContext>>(chq, std::move(m), std::move(name));
}

template <class Ctx>
CheckReport laws(const StrongMonad<Ctx>& t, const std::vector<typename Ctx::Object>& battery, std::size_t triples, std::size_t samples) {
  CheckReport rep = check_monad_laws(t, battery, kSeed, samples);
  rep.append(check_strength_laws(t, battery, sample_triples(battery.size(), triples, kSeed), kSeed, samples));
  return rep;
}

template <class Ctx>
void laws_and_perturbations(Verdict& v, const MonadPtr<Ctx>& t, const std::vector<typename Ctx::Object>& battery, std::size_t triples,
                            std::size_t samples, std::size_t& caught) {
  v.require(laws(*t, battery, triples, samples), t->name());
  for (const auto& p : seeded_perturbations(t, kSeed)) {
    bool hit = !laws(*p, battery, triples, samples).pass();
    v.require(hit, p->name() + " not caught");
    caught += hit;
  }
}

// M₂(ℤ) on matrix units E_ij at 2i + j, products computed as integer matrices.
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

// 1. monad and strength laws; perturbations caught
Verdict law_suites() {
  Verdict v;
  std::size_t caught = 0, monads = 0;
  auto fb = fpab_battery(kSeed);
  auto cb = chain_battery(Ground::Q, kSeed);
  auto pb = positive_chain_battery(Ground::Q, 4, kSeed);
  laws_and_perturbations<FpAbContext>(v, std::make_shared<IdentityMonad<FpAbContext>>(fpab), fb, 12, 6, caught), ++monads;
  laws_and_perturbations<FpAbContext>(v, fp_tensor_monad(group_ring_c2(), "-(x)Z[C2]"), fb, 12, 6, caught), ++monads;
  laws_and_perturbations<ChainContext>(v, ch_tensor_monad(dual_numbers(), "-(x)Q[e]"), cb, 12, 6, caught), ++monads;
  laws_and_perturbations<ChainContext>(v, ch_tensor_monad(exterior_algebra(), "-(x)L(x)"), cb, 12, 6, caught), ++monads;
  laws_and_perturbations<ChainContext>(v, std::make_shared<TensorAlgebraMonad>(Ground::Q, 4), pb, 12, 6, caught), ++monads;
  laws_and_perturbations<FpAbContext>(v, std::make_shared<HomTensorMonad>(projective_preset("Z", "Z2")), fb, 6, 2, caught), ++monads;
  v.detail = std::to_string(monads) + " monads, " + std::to_string(caught) + "/" + std::to_string(6 * monads) + " perturbations caught";
  return v;
}

// 2. T(I) recovers the monoid
Verdict unit_monoid() {
  Verdict v;
  auto c2 = group_ring_c2();
  auto got = monoid_of_unit(*fp_tensor_monad(c2, "c2"));
  v.require(got.carrier == c2.carrier && got.m.m == c2.m.m && got.e.m == c2.e.m, "Z[C2] table");
  for (const auto& m : {dual_numbers(), exterior_algebra()}) {
    auto g = monoid_of_unit(*ch_tensor_monad(m, "m"));
    v.require(g.carrier == m.carrier && chain_equal(g.m, m.m) && chain_equal(g.e, m.e), "chain monoid table");
  }
  HomTensorMonad t(projective_preset("Z", "Z2"));
  auto end = monoid_of_unit(t);
  auto oracle = m2z_by_hand();
  FpMorphism phi{end.carrier, oracle.carrier, t.hom(fpab.unit())->inclusion.m};
  auto bad = monoid_iso_violation(fpab, end, oracle, phi);
  v.require(!bad.has_value(), "End(Z^2) vs brute-force M2(Z): " + bad.value_or(""));
  v.detail = "Z[C2], Q[e]/e^2, L(x) exact; hom-tensor(Z,Z^2) = M2(Z) by brute force";
  return v;
}

// 3. λ is a monad morphism; linearity
Verdict linear_approximation_check() {
  Verdict v;
  auto fb = fpab_battery(kSeed);
  std::vector<FpGroup> small(fb.begin(), fb.begin() + std::min<std::size_t>(fb.size(), 6));
  auto cb = chain_battery(Ground::Q, kSeed);
  auto pb = positive_chain_battery(Ground::Q, 4, kSeed);
  std::size_t count = 0;
  auto fp = [&](const MonadPtr<FpAbContext>& t, const std::vector<FpGroup>& battery, bool linear) {
    auto s = unit_tensor_monad(*t);
    Transformation<FpAbContext> l = [&](const FpGroup& x) { return linear_approximation(*t, x); };
    v.require(check_monad_morphism(*s, *t, l, battery), t->name() + " lambda");
    v.require(is_linear(*t, battery).linear == linear, t->name() + " linearity");
    ++count;
  };
  auto ch = [&](const MonadPtr<ChainContext>& t, const std::vector<ChainComplex>& battery, bool linear) {
    auto s = unit_tensor_monad(*t);
    Transformation<ChainContext> l = [&](const ChainComplex& x) { return linear_approximation(*t, x); };
    v.require(check_monad_morphism(*s, *t, l, battery), t->name() + " lambda");
    auto verdict = is_linear(*t, battery);
    v.require(verdict.linear == linear, t->name() + " linearity");
    if (!linear) {
      v.require(verdict.witness.find("degree 2") != std::string::npos, "no degree-2 witness: " + verdict.witness);
      v.detail = "tensoralg: " + verdict.witness;
    }
    ++count;
  };
  fp(std::make_shared<IdentityMonad<FpAbContext>>(fpab), fb, true);
  fp(fp_tensor_monad(group_ring_c2(), "-(x)Z[C2]"), fb, true);
  fp(fp_tensor_monad(z_mod_2_ring(), "-(x)Z/2"), fb, true);
  fp(std::make_shared<HomTensorMonad>(projective_preset("Z", "Z2")), small, true);
  ch(ch_tensor_monad(dual_numbers(), "-(x)Q[e]"), cb, true);
  ch(ch_tensor_monad(exterior_algebra(), "-(x)L(x)"), cb, true);
  ch(std::make_shared<TensorAlgebraMonad>(Ground::Q, 4), pb, false);
  v.detail = std::to_string(count) + " monads; " + v.detail;
  return v;
}

// 4. Gabriel round trip
Verdict gabriel() {
  Verdict v;
  auto zb = module_battery(ring_z());
  v.require(zb.size() == 9, "battery size " + std::to_string(zb.size()));
  v.require(gabriel_roundtrip(projective_preset("Z", "Z2"), zb), "Z:Z2");
  auto bad = gabriel_roundtrip(projective_preset("ZxZ", "e1"), module_battery(ring_zxz()));
  const CheckRecord* f = bad.first_failure();
  v.require(f != nullptr, "ZxZ:e1 round trip passed");
  if (f) {
    v.require(f->instance.find("second factor") != std::string::npos, "ZxZ:e1 witness: " + f->instance);
    v.detail = "9 modules iso for Z^2; ZxZ:e1 fails at " + f->instance + ": " + f->witness;
  }
  return v;
}

// 5. σ → φ → σ
Verdict enrichment() {
  Verdict v;
  auto fb = fpab_battery(kSeed);
  IdentityMonad<FpAbContext> id(fpab);
  TensorMonad<FpAbContext> z2(fpab, z_mod_2_ring(), "-(x)Z/2");
  auto a = check_enrichment_roundtrip(id, fb), b = check_enrichment_roundtrip(z2, fb);
  v.require(a, "identity");
  v.require(b, "-(x)Z/2");
  v.detail = std::to_string(a.records.size() + b.records.size()) + " exact comparisons";
  return v;
}

// 6. excisive suite
Verdict excisive() {
  Verdict v;
  auto tallies = run_excisive_suite(Ground::Q, 4, kSeed, 50);
  std::ostringstream os;
  for (const auto& t : tallies) {
    v.require(t.instances >= 50, t.property + ": only " + std::to_string(t.instances) + " instances");
    v.require(t.failures == 0, t.property + ": " + t.witness);
    os << t.property << " " << t.instances << "/" << t.hypothesis_held << " ";
  }
  for (const char* p : {"suspension", "saturation", "condition_a", "condition_b", "homotopy_pushout"}) {
    bool found = false;
    for (const auto& t : tallies) found |= t.property == p;
    v.require(found, std::string("missing property ") + p);
  }
  v.detail = "instances/hypothesis held: " + os.str();
  return v;
}

// 7. τ counts, coend oracle, fat comparison
Verdict tau_and_fat() {
  Verdict v;
  Tau t = tau(constant_simplicial(ChainComplex::sphere(Ground::Q, 0), 4));
  for (std::size_t n = 0; n <= 4; ++n)
    v.require(t.tau.levels[n].dim(0) == (std::size_t(1) << n), "tau_" + std::to_string(n) + " summands");

  Rng rng(kSeed);
  std::size_t coends = 0;
  for (Ground g : {Ground::Q, Ground::Z})
    for (std::size_t n : {1, 2, 3}) {
      auto x = random_simplicial(rng, g, n, 1, 1);
      v.require(chain_is_iso(coend_realize(x).from_totalization), "coend at N=" + std::to_string(n));
      ++coends;
    }

  // split-augmented objects: constants, décalages, and bar objects
  std::vector<SimplicialChainComplex> split;
  for (const auto& a : chain_battery(Ground::Q, kSeed)) {
    if (split.size() >= 4) break;
    split.push_back(constant_split(a, 4).base);
  }
  for (int k = 0; k < 2; ++k) split.push_back(decalage(random_simplicial(rng, Ground::Q, 5, 1, 1)).base);
  for (const auto& m : {exterior_algebra(), dual_numbers()}) {
    TensorMonad<ChainContext> tm(chq, m, "t");
    split.push_back(bar_resolution(tm, trivial_algebra(tm), 4).split.base);
  }
  std::size_t fats = 0;
  for (const auto& x : split) {
    auto f = fat_realize(x);
    v.require(is_quasi_iso(f.comparison, 3), "fat comparison at object " + std::to_string(fats));
    ++fats;
  }
  v.detail = "tau 1,2,4,8,16; " + std::to_string(coends) + " coend isos; " + std::to_string(fats) + " split objects quasi-iso <= 3";
  return v;
}

// 8. bar resolution of ℚ
Verdict bar() {
  Verdict v;
  std::ostringstream os;
  for (const auto& [m, name] : {std::pair{dual_numbers(), "-(x)Q[e]/e^2"}, std::pair{exterior_algebra(), "-(x)L(x)"}}) {
    TensorMonad<ChainContext> t(chq, m, name);
    auto a = trivial_algebra(t);
    v.require(a.carrier == ChainComplex::sphere(Ground::Q, 0), std::string(name) + ": A is not Q");
    auto rep = bar_is_resolution(t, a, 4);
    v.require(rep, name);
    bool reedy = false, tau_ok = false;
    for (const auto& r : rep.records) {
      reedy |= r.check == "bar.reedy" && r.pass;
      tau_ok |= r.check == "bar.tau" && r.pass;
    }
    v.require(reedy && tau_ok, std::string(name) + ": Reedy/tau records missing");
    ChainComplex r = realize(bar_resolution(t, a, 4).split.base);
    v.require(homology_label(r, 0) == "Q", std::string(name) + ": H0 = " + homology_label(r, 0));
    for (std::size_t n = 1; n <= 3; ++n) v.require(betti(r, n) == 0, std::string(name) + ": H" + std::to_string(n));
    os << name << " H0=" << homology_label(r, 0) << " H1..3=0; ";
  }
  v.detail = os.str() + "Reedy and tau cofibrant";
  return v;
}

// 9. free cofibre sequence for the Λ(x) attachment
Verdict cofibre() {
  Verdict v;
  TensorMonad<ChainContext> e(chq, exterior_algebra(), "-(x)L(x)");
  auto rep = verify_free_cofibre_sequence(e, exterior_attachment_preset(e), 4);
  v.require(rep, "attachment");
  bool parallel = false, barq = false;
  for (const auto& r : rep.records) {
    parallel |= r.check == "cofibre.parallel" && r.pass;
    barq |= r.check == "cofibre.bar" && r.pass;
  }
  v.require(parallel && barq, "parallel-cofibre or bar record missing");
  v.detail = std::to_string(rep.records.size()) + " records, degrees <= 3";
  return v;
}

// 10. adjunction unit = strength
Verdict adjunction() {
  Verdict v;
  auto fb = fpab_battery(kSeed);
  std::vector<FpGroup> small{FpGroup::free(0), FpGroup::free(1), FpGroup::cyclic(2), FpGroup::sum_of_cyclics({0, 3})};
  auto cb = chain_battery(Ground::Q, kSeed);
  auto pb = positive_chain_battery(Ground::Q, 4, kSeed);
  std::size_t count = 0;
  auto fp = [&](const StrongMonad<FpAbContext>& t, const std::vector<FpGroup>& battery) {
    v.require(unit_is_strength(t, battery), t.name());
    auto m = monoid_of_unit(t);
    for (const auto& x : battery) {
      auto u = adjunction_unit_check(t, free_monoid_module(fpab, m, x), 0);
      v.require(u.module_map && u.iso, t.name() + " unit not iso at " + fpab.describe(x));
    }
    v.require(strength_weak_invertibility(t, battery, 0).linear, t.name() + " strength");
    ++count;
  };
  auto ch = [&](const StrongMonad<ChainContext>& t, const std::vector<ChainComplex>& battery, bool linear) {
    v.require(unit_is_strength(t, battery), t.name());
    auto m = monoid_of_unit(t);
    bool all_weq = true;
    for (const auto& x : battery) {
      auto u = adjunction_unit_check(t, free_monoid_module(t.context(), m, x), 3);
      v.require(u.module_map, t.name() + " unit not a module map");
      if (linear) v.require(u.iso, t.name() + " unit not iso at " + t.context().describe(x));
      all_weq = all_weq && u.weq;
    }
    bool weak = strength_weak_invertibility(t, battery, 3).linear;
    v.require(all_weq == linear && weak == linear, t.name() + " unit/strength verdicts disagree");
    ++count;
  };
  fp(IdentityMonad<FpAbContext>(fpab), fb);
  fp(TensorMonad<FpAbContext>(fpab, group_ring_c2(), "-(x)Z[C2]"), fb);
  fp(TensorMonad<FpAbContext>(fpab, z_mod_2_ring(), "-(x)Z/2"), fb);
  fp(HomTensorMonad(projective_preset("Z", "Z2")), small);
  ch(TensorMonad<ChainContext>(chq, dual_numbers(), "-(x)Q[e]"), cb, true);
  ch(TensorMonad<ChainContext>(chq, exterior_algebra(), "-(x)L(x)"), cb, true);
  ch(TensorAlgebraMonad(Ground::Q, 4), pb, false);
  v.detail = std::to_string(count) + " monads; unit = strength exactly; iso iff linear, tensoralg not a weq";
  return v;
}

// 11. byte-identical reports
Verdict determinism() {
  Verdict v;
  std::vector<SuiteConfig> configs{{"laws", "tensor:ext"}, {"bar", "tensoralg"}, {"gabriel"}, {"excisive"}, {"morita"}};
  SuiteConfig realize{"realize"};
  realize.preset = "bar-ext";
  configs.push_back(realize);
  std::size_t bytes = 0;
  for (const auto& c : configs) {
    auto a = run(c).text(), b = run(c).text();
    v.require(a == b, c.suite + " reports differ");
    bytes += a.size();
  }
  v.detail = std::to_string(configs.size()) + " suites run twice, " + std::to_string(bytes) + " bytes identical";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"law suites and perturbations", law_suites},
      {"monoid of the unit", unit_monoid},
      {"linear approximation", linear_approximation_check},
      {"Gabriel round trip", gabriel},
      {"strength/enrichment round trip", enrichment},
      {"excisive suite", excisive},
      {"tau and fat realization", tau_and_fat},
      {"bar resolution", bar},
      {"free cofibre sequences", cofibre},
      {"adjunction unit", adjunction},
      {"determinism", determinism},
  };
  int failures = 0, k = 0;
  for (const auto& [name, body] : criteria) {
    ++k;
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = body();
    } catch (const std::exception& e) {
      v.problem = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = v.problem.empty();
    failures += !ok;
    char t[32];
    std::snprintf(t, sizeof t, "%.2fs", secs);
    std::cout << (ok ? "PASS " : "FAIL ") << k << ". " << name << " (" << t << "): " << (ok ? v.detail : v.problem) << std::endl;
  }
  return failures;
}
