#include "mb/cli/suites.hpp"

#include "mb/algebras/algebras.hpp"
#include "mb/chain/excisive.hpp"
#include "mb/chain/homology.hpp"
#include "mb/gabriel/hom_tensor.hpp"
#include "mb/monad/enrichment.hpp"
#include "mb/monad/laws.hpp"
#include "mb/monad/tensor_algebra.hpp"

#include <fstream>
#include <sstream>

namespace mb {

namespace {

const char* kModelAssumption = "transferred model structure on T-algebras is assumed, not constructed";
const char* kBatteryAssumption = "\"for all objects\" is checked on the seeded battery only";

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Ground chain_ground(const std::string& context) {
  if (context == "chain-Q" || context.empty()) return Ground::Q;
  if (context == "chain-Z") return Ground::Z;
  throw InputError("context '" + context + "' is not a chain context");
}

bool is_chain(const std::string& context) { return context == "chain-Q" || context == "chain-Z"; }

void check_context(const std::string& context) {
  if (!context.empty() && context != "fpab" && !is_chain(context))
    throw InputError("unknown context '" + context + "' (fpab | chain-Q | chain-Z)");
}

// "S<n>" sphere, "S<n>^<r>" rank r, "D<n>" disk.
ChainComplex parse_object(const std::string& s, Ground g) {
  try {
    if (s.size() >= 2 && s[0] == 'D') return ChainComplex::disk(g, std::stoul(s.substr(1)));
    if (s.size() >= 2 && s[0] == 'S') {
      auto caret = s.find('^');
      std::size_t n = std::stoul(s.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
      std::size_t r = caret == std::string::npos ? 1 : std::stoul(s.substr(caret + 1));
      return ChainComplex::sphere(g, n, r);
    }
  } catch (const std::logic_error&) {
  }
  throw InputError("object '" + s + "' (expected S<n>, S<n>^<r> or D<n>)");
}

template <class Ctx>
CheckReport law_battery(const StrongMonad<Ctx>& t, const std::vector<typename Ctx::Object>& battery, std::uint64_t seed,
                        std::size_t triples, std::size_t samples) {
  CheckReport rep = check_monad_laws(t, battery, seed, samples);
  rep.append(check_strength_laws(t, battery, sample_triples(battery.size(), triples, seed), seed, samples));
  return rep;
}

template <class Ctx>
void laws_suite(const MonadPtr<Ctx>& t, const std::vector<typename Ctx::Object>& battery, const SuiteConfig& cfg, bool heavy,
                SuiteResult& out) {
  const std::size_t triples = heavy ? 6 : 12, samples = heavy ? 2 : 6;
  CheckReport& rep = out.report;
  rep.append(law_battery(*t, battery, cfg.seed, heavy ? 8 : 12, heavy ? 4 : 6));

  for (const auto& p : seeded_perturbations(t, cfg.seed)) {
    CheckReport pr = law_battery(*p, battery, cfg.seed, triples, samples);
    const CheckRecord* f = pr.first_failure();
    rep.add("perturbation.caught", "laws/perturbation-detected", p->name(), "battery", f != nullptr,
            f ? "caught by " + f->check + " at " + f->instance : "no law failed");
  }

  auto unit_monoid = monoid_of_unit(*t);
  rep.append(check_monoid_laws(t->context(), unit_monoid));
  if (auto tm = std::dynamic_pointer_cast<const TensorMonad<Ctx>>(t)) {
    rep.run("unit-monoid.table", "unit-monoid/recovers-M", t->name(), "exact", [&]() -> std::optional<std::string> {
      const auto& ctx = t->context();
      const auto& m = tm->monoid();
      if (!ctx.same(unit_monoid.carrier, m.carrier)) return "carrier " + ctx.describe(unit_monoid.carrier);
      if (!ctx.equal(unit_monoid.m, m.m)) return "multiplication differs";
      if (!ctx.equal(unit_monoid.e, m.e)) return "unit differs";
      return std::nullopt;
    });
  }

  auto s = unit_tensor_monad(*t);
  Transformation<Ctx> lambda = [&](const typename Ctx::Object& x) { return linear_approximation(*t, x); };
  rep.append(check_monad_morphism(*s, *t, lambda, battery));
  rep.append(check_strong_naturality(*s, *t, lambda, battery));

  auto verdict = is_linear(*t, battery);
  out.footer["linear"] = verdict.linear;
  if (!verdict.linear) out.footer["linearity_witness"] = verdict.witness;
}

std::vector<ChainComplex> chain_battery_for(const MonadPtr<ChainContext>& t, Ground g, std::uint64_t seed) {
  if (auto ta = std::dynamic_pointer_cast<const TensorAlgebraMonad>(t)) return positive_chain_battery(g, ta->cap(), seed);
  return chain_battery(g, seed);
}

void run_laws(const SuiteConfig& cfg, SuiteResult& out) {
  auto m = make_monad(cfg.monad, cfg.context);
  if (m.fpab) {
    const bool heavy = std::dynamic_pointer_cast<const HomTensorMonad>(m.fpab) != nullptr;
    auto battery = fpab_battery(cfg.seed);
    laws_suite<FpAbContext>(m.fpab, battery, cfg, heavy, out);
    if (cfg.monad == "identity" || cfg.monad == "tensor:Z2") out.report.append(check_enrichment_roundtrip(*m.fpab, battery));
  } else {
    laws_suite<ChainContext>(m.chain, chain_battery_for(m.chain, m.chain->context().ground, cfg.seed), cfg, false, out);
  }
}

TAlgebra<ChainContext> bar_algebra(const MonadPtr<ChainContext>& t, const std::string& preset, std::string& label) {
  const Ground g = t->context().ground;
  if (preset.rfind("free:", 0) == 0) {
    label = preset;
    return free_algebra(*t, parse_object(preset.substr(5), g));
  }
  if (!preset.empty() && preset != "trivial") throw InputError("bar preset '" + preset + "' (trivial | free:<object>)");
  if (auto tm = std::dynamic_pointer_cast<const TensorMonad<ChainContext>>(t)) {
    try {
      label = "trivial";
      return trivial_algebra(*tm);
    } catch (const std::invalid_argument&) {
      if (preset == "trivial") throw InputError("the unit coefficient of " + t->name() + " is not multiplicative");
    }
  } else if (preset == "trivial") {
    throw InputError("trivial algebra needs a tensor monad");
  }
  const bool positive = std::dynamic_pointer_cast<const TensorAlgebraMonad>(t) != nullptr;
  label = positive ? "free:S1" : "free:S0";
  return free_algebra(*t, ChainComplex::sphere(g, positive ? 1 : 0));
}

void run_bar(const SuiteConfig& cfg, SuiteResult& out) {
  if (cfg.context == "fpab") throw InputError("the bar suite runs on chain complexes");
  auto m = make_monad(cfg.monad, cfg.context.empty() ? "chain-Q" : cfg.context);
  if (!m.chain) throw InputError("monad '" + cfg.monad + "' has no chain instance");
  const auto& t = m.chain;
  std::string label;
  auto a = bar_algebra(t, cfg.preset, label);
  if (auto v = algebra_violation(*t, a)) throw InputError("not an algebra: " + *v);
  out.footer["algebra"] = label;

  CheckReport& rep = out.report;
  rep.append(check_bar(*t, a, bar_resolution(*t, a, cfg.N)));
  rep.append(bar_is_resolution(*t, a, cfg.N));

  auto battery = chain_battery_for(t, t->context().ground, cfg.seed);
  rep.append(unit_is_strength(*t, battery));
  auto weak = strength_weak_invertibility(*t, battery, cfg.N - 1);
  rep.add("bar.strength-weak-invertibility", "bar/strength-weak-equivalence", t->name(),
          "degrees<=" + std::to_string(cfg.N - 1), weak.linear, weak.witness);
}

void run_gabriel(const SuiteConfig& cfg, SuiteResult& out) {
  auto parts = split(cfg.preset.empty() ? "Z:Z2" : cfg.preset, ':');
  if (parts.size() != 2) throw InputError("gabriel preset is <ring>:<projective>");
  ProjectiveSummand p;
  try {
    p = projective_preset(parts[0], parts[1]);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  auto t = std::make_shared<HomTensorMonad>(p);
  auto battery = fpab_battery(cfg.seed);
  CheckReport& rep = out.report;
  rep.append(law_battery(*t, battery, cfg.seed, 8, 4));
  rep.append(check_linear_strength(*t, battery));

  const FpAbContext& ctx = t->context();
  EndoRing r = endo_ring(p);
  rep.run("gabriel.end-ring", "gabriel/unit-monoid-is-End(P)", t->name() + ", End(P) of rank " + std::to_string(r.ring.rank), "exact",
          [&]() -> std::optional<std::string> {
            auto got = monoid_of_unit(*t);
            const std::size_t k = r.ring.rank;
            FpGroup carrier = FpGroup::free(k);
            IntMatrix unit(k, 1);
            for (std::size_t i = 0; i < k; ++i) unit(i, 0) = r.ring.unit[i];
            MonoidObject<FpAbContext> end{carrier, FpMorphism{ctx.tensor(carrier, carrier), carrier, r.ring.mult},
                                          FpMorphism{ctx.unit(), carrier, unit}};
            auto h = r.hom.factor(FpMorphism{got.carrier, r.hom.inclusion.tgt, t->hom(ctx.unit())->inclusion.m});
            return monoid_iso_violation(ctx, got, end, FpMorphism{got.carrier, carrier, h.m});
          });
  if (r.ring.mult == ring_m2z().mult && r.ring.unit == ring_m2z().unit) out.footer["end_ring"] = "M2(Z)";
  else out.footer["end_ring"] = r.ring.name;
  rep.append(gabriel_roundtrip(p, module_battery(p.ring)));
}

void run_morita(const SuiteConfig& cfg, SuiteResult& out) {
  auto parts = split(cfg.preset.empty() ? "Z:Z2" : cfg.preset, ':');
  if (parts.size() != 2) throw InputError("morita preset is <ring>:<projective>");
  try {
    auto p = projective_preset(parts[0], parts[1]);
    out.report.append(morita_correspondence(p, module_battery(p.ring)));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

void run_excisive(const SuiteConfig& cfg, SuiteResult& out) {
  const Ground g = chain_ground(cfg.context);
  const std::size_t count = 50;
  for (const auto& tally : run_excisive_suite(g, cfg.N, cfg.seed, count)) {
    std::string inst = std::to_string(tally.instances) + " seeded instances, hypothesis held in " + std::to_string(tally.hypothesis_held);
    out.report.add("excisive." + tally.property, "excisive/" + tally.property, inst,
                   "degrees<=" + std::to_string(cfg.N - 1), tally.failures == 0 && tally.instances >= count, tally.witness);
  }
}

SimplicialChainComplex realize_input(const SuiteConfig& cfg) {
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) throw InputError("cannot read '" + cfg.input + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return simplicial_from_json(j);
  }
  const std::string preset = cfg.preset.empty() ? "empty" : cfg.preset;
  if (preset == "empty") return zero_simplicial(Ground::Q, cfg.N);
  if (preset == "bar-ext" || preset == "bar-dual") {
    const ChainContext ctx{Ground::Q, ChainMode::Tensor};
    TensorMonad<ChainContext> t(ctx, preset == "bar-ext" ? exterior_algebra() : dual_numbers(), preset == "bar-ext" ? "-(x)L(x)" : "-(x)Q[e]");
    return bar_resolution(t, trivial_algebra(t), cfg.N).split.base;
  }
  if (preset.rfind("constant:", 0) == 0) return constant_simplicial(parse_object(preset.substr(9), Ground::Q), cfg.N);
  throw InputError("realize preset '" + preset + "' (empty | bar-ext | bar-dual | constant:<object>)");
}

void run_realize(const SuiteConfig& cfg, SuiteResult& out) {
  auto x = realize_input(cfg);
  if (x.N < 2) throw InputError("N must be at least 2");
  auto geo = realize_full(x);
  auto fat = fat_realize(x);
  const std::size_t up = x.N - 1;
  const std::string bound = "degrees<=" + std::to_string(up);
  Json table = Json::array();
  for (std::size_t n = 0; n <= up; ++n)
    table.push_back(Json{{"degree", n}, {"geometric", homology_label(geo.complex, n)}, {"fat", homology_label(fat.fat, n)}});
  out.report.run("realize.simplicial", "realize/simplicial-identities", "N=" + std::to_string(x.N), "exact",
                 [&] { return simplicial_violation(x); });
  out.report.run("realize.fat-comparison", "realize/fat-comparison",
                 "N=" + std::to_string(x.N), bound, [&]() -> std::optional<std::string> {
                   if (auto d = quasi_iso_failure(fat.comparison, up)) return "homology differs in degree " + std::to_string(*d);
                   return std::nullopt;
                 });
  out.footer["geometric"] = to_json(geo.complex.truncated(up + 1));
  out.footer["fat"] = to_json(fat.fat.truncated(up + 1));
  out.footer["homology"] = table;
}

}  // namespace

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::uppercase << std::hex << v;
  return os.str();
}

std::uint64_t parse_hex(const std::string& s) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &used, 16);
  } catch (const std::logic_error&) {
    throw InputError("seed '" + s + "' is not hexadecimal");
  }
  if (used != s.size()) throw InputError("seed '" + s + "' is not hexadecimal");
  return v;
}

ResolvedMonad make_monad(const std::string& name, const std::string& context) {
  check_context(context);
  ResolvedMonad out;
  const FpAbContext fpab{};
  if (name == "identity") {
    if (is_chain(context)) out.chain = std::make_shared<IdentityMonad<ChainContext>>(ChainContext{chain_ground(context), ChainMode::Tensor});
    else out.fpab = std::make_shared<IdentityMonad<FpAbContext>>(fpab);
    return out;
  }
  if (name.rfind("tensor:", 0) == 0) {
    const std::string m = name.substr(7);
    const bool chain = is_chain(context) || (context.empty() && (m == "dual" || m == "ext"));
    if (!chain) {
      if (m == "C2") out.fpab = std::make_shared<TensorMonad<FpAbContext>>(fpab, group_ring_c2(), "-(x)Z[C2]");
      else if (m == "Z2") out.fpab = std::make_shared<TensorMonad<FpAbContext>>(fpab, z_mod_2_ring(), "-(x)Z/2");
      else if (m == "Z") out.fpab = std::make_shared<TensorMonad<FpAbContext>>(fpab, fpab_unit_monoid(), "-(x)Z");
      else throw InputError("monoid '" + m + "' has no FPAb instance (C2 | Z2 | Z)");
      return out;
    }
    const Ground g = chain_ground(context);
    const ChainContext ctx{g, ChainMode::Tensor};
    if (m == "C2") out.chain = std::make_shared<TensorMonad<ChainContext>>(ctx, chain_group_ring_c2(g), "-(x)R[C2]");
    else if (m == "Z") out.chain = std::make_shared<TensorMonad<ChainContext>>(ctx, chain_unit_monoid(g), "-(x)R");
    else if (m == "dual") out.chain = std::make_shared<TensorMonad<ChainContext>>(ctx, dual_numbers(g), "-(x)R[e]/e^2");
    else if (m == "ext") out.chain = std::make_shared<TensorMonad<ChainContext>>(ctx, exterior_algebra(g), "-(x)L(x)");
    else throw InputError("monoid '" + m + "' has no chain instance (C2 | Z | dual | ext)");
    return out;
  }
  if (name == "tensoralg") {
    if (context == "fpab") throw InputError("tensoralg lives on chain complexes");
    out.chain = std::make_shared<TensorAlgebraMonad>(chain_ground(context), 4);
    return out;
  }
  if (name.rfind("homtensor:", 0) == 0) {
    if (is_chain(context)) throw InputError("homtensor lives on FPAb");
    auto parts = split(name.substr(10), ':');
    if (parts.size() != 2) throw InputError("homtensor:<S>:<P>");
    try {
      out.fpab = std::make_shared<HomTensorMonad>(projective_preset(parts[0], parts[1]));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    return out;
  }
  throw InputError("unknown monad '" + name + "' (identity | tensor:<C2|Z2|Z|dual|ext> | tensoralg | homtensor:<S>:<P>)");
}

std::string SuiteResult::text() const { return report_jsonl(footer.value("suite", std::string()), report, footer); }

SuiteResult run(const SuiteConfig& cfg) {
  if (cfg.N < 2) throw InputError("truncation N must be at least 2");
  check_context(cfg.context);
  SuiteResult out;
  out.footer["suite"] = cfg.suite;
  out.footer["seed"] = hex(cfg.seed);
  out.footer["N"] = cfg.N;
  out.footer["bound"] = "degrees<=" + std::to_string(cfg.N - 1);
  if (cfg.suite == "laws") {
    out.footer["monad"] = cfg.monad;
    run_laws(cfg, out);
  } else if (cfg.suite == "bar") {
    out.footer["monad"] = cfg.monad;
    run_bar(cfg, out);
  } else if (cfg.suite == "gabriel") {
    out.footer["preset"] = cfg.preset.empty() ? "Z:Z2" : cfg.preset;
    run_gabriel(cfg, out);
  } else if (cfg.suite == "morita") {
    out.footer["preset"] = cfg.preset.empty() ? "Z:Z2" : cfg.preset;
    run_morita(cfg, out);
  } else if (cfg.suite == "excisive") {
    run_excisive(cfg, out);
  } else if (cfg.suite == "realize") {
    run_realize(cfg, out);
  } else {
    throw InputError("unknown suite '" + cfg.suite + "' (laws | bar | gabriel | excisive | morita | realize)");
  }
  out.footer["assumptions"] = Json::array({kBatteryAssumption, kModelAssumption});
  return out;
}

}  // namespace mb
