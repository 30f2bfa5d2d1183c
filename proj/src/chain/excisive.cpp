#include "mb/chain/excisive.hpp"

#include "mb/chain/constructions.hpp"
#include "mb/chain/homology.hpp"
#include "mb/chain/random.hpp"
#include "mb/chain/tensor.hpp"
#include "mb/linalg/rational.hpp"

#include <stdexcept>

namespace mb {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

std::size_t span(const ChainMap& f) { return std::max({f.src().length(), f.tgt().length(), std::size_t{1}}); }

}  // namespace

CofibreSeq cofibre_sequence(const ChainMap& i) {
  require(is_cofibration(i), "cofibre_sequence: not a cofibration");
  return CofibreSeq{i, chain_cokernel(i).q};
}

std::string cofibre_violation(const CofibreSeq& s) {
  if (s.i.tgt() != s.q.src()) return "i and q are not composable";
  if (!is_cofibration(s.i)) return "i is not a cofibration";
  if (!chain_is_surjective(s.q)) return "q is not surjective";
  if (!chain_equal(chain_compose(s.q, s.i), chain_zero(s.i.src(), s.q.tgt()))) return "q∘i ≠ 0";
  for (std::size_t n = 0; n < s.q.src().length(); ++n) {
    std::size_t ri = s.i.src().dim(n) ? rank(s.i.at(n)) : 0;
    if (s.q.src().dim(n) - s.q.tgt().dim(n) != ri) return "ker q ≠ im i in degree " + std::to_string(n);
  }
  return {};
}

ChainMap induced_on_quotients(const CofibreSeq& top, const CofibreSeq& bottom, const ChainMap& beta) {
  return chain_factor_through_epi(top.q, chain_compose(bottom.q, beta));
}

SaturationReport saturation_check(const CofibreSeq& top, const CofibreSeq& bottom, const ChainMap& alpha, const ChainMap& beta,
                                  const ChainMap& gamma, std::size_t up_to) {
  require(cofibre_violation(top).empty(), "saturation_check: top row: " + cofibre_violation(top));
  require(cofibre_violation(bottom).empty(), "saturation_check: bottom row: " + cofibre_violation(bottom));
  require(chain_equal(chain_compose(bottom.i, alpha), chain_compose(beta, top.i)), "saturation_check: left square does not commute");
  require(chain_equal(chain_compose(bottom.q, beta), chain_compose(gamma, top.q)), "saturation_check: right square does not commute");
  SaturationReport r;
  r.alpha = is_quasi_iso(alpha, up_to);
  r.beta = is_quasi_iso(beta, up_to);
  r.gamma = is_quasi_iso(gamma, up_to);
  r.ab_gives_g = {r.alpha && r.beta, r.gamma};
  r.ag_gives_b = {r.alpha && r.gamma, r.beta};
  r.bg_gives_a = {r.beta && r.gamma, r.alpha};
  return r;
}

std::pair<bool, bool> suspension_conservativity(const ChainMap& f, std::size_t n) {
  return {is_quasi_iso(f, n), is_quasi_iso(suspension(f), n + 1)};
}

Implication condition_a(const ChainMap& i, std::size_t up_to) {
  require(is_cofibration(i), "condition_a: not a cofibration");
  auto ck = chain_cokernel(i);
  return {is_acyclic(ck.complex, up_to), is_quasi_iso(i, up_to)};
}

Implication condition_b(const ChainMap& i, const ChainMap& i2, const ChainMap& h, std::size_t up_to) {
  require(is_cofibration(i) && is_cofibration(i2), "condition_b: legs must be cofibrations");
  require(i.src() == i2.src(), "condition_b: legs need a common source");
  require(chain_equal(chain_compose(h, i), i2), "condition_b: h is not a map under X");
  CofibreSeq top = cofibre_sequence(i), bottom = cofibre_sequence(i2);
  ChainMap hq = induced_on_quotients(top, bottom, h);
  return {is_quasi_iso(hq, up_to), is_quasi_iso(h, up_to)};
}

ChainMap pushout_comparison(const Square& s) {
  ChainMap diff = chain_pair(s.f, chain_negate(s.g));
  auto ck = chain_cokernel(diff);
  return chain_factor_through_epi(ck.q, chain_copair(s.k, s.l));
}

HomotopyPushoutReport homotopy_pushout_check(const Square& s, std::size_t up_to) {
  require(s.f.src() == s.g.src() && s.k.src() == s.f.tgt() && s.l.src() == s.g.tgt() && s.k.tgt() == s.l.tgt(),
          "homotopy_pushout_check: square shape");
  require(chain_equal(chain_compose(s.k, s.f), chain_compose(s.l, s.g)), "homotopy_pushout_check: square does not commute");
  require(is_cofibration(s.f) && is_cofibration(s.l), "homotopy_pushout_check: f and l must be cofibrations");
  HomotopyPushoutReport r;
  r.comparison_weq = is_quasi_iso(pushout_comparison(s), up_to);
  ChainMap cof = induced_on_quotients(cofibre_sequence(s.f), cofibre_sequence(s.l), s.k);
  r.parallel_cofibre_weq = is_quasi_iso(cof, up_to);
  return r;
}

ChainMap pushout_product(const ChainMap& f, const ChainMap& g) {
  const ChainComplex &x = f.src(), &y = f.tgt(), &v = g.src(), &z = g.tgt();
  ChainMap xg = chain_tensor(chain_identity(x), g);  // X⊗V → X⊗Z
  ChainMap fv = chain_tensor(f, chain_identity(v));  // X⊗V → Y⊗V
  ChainMap fz = chain_tensor(f, chain_identity(z));  // X⊗Z → Y⊗Z
  ChainMap yg = chain_tensor(chain_identity(y), g);  // Y⊗V → Y⊗Z
  Square s{xg, fv, fz, yg};
  return pushout_comparison(s);
}

bool pushout_product_comparison(const ChainMap& f, const ChainMap& g) {
  require(is_cofibration(f), "pushout_product_comparison: f must be a cofibration");
  const std::size_t up = span(f) + span(g);
  require(is_quasi_iso(g, up), "pushout_product_comparison: g must be a quasi-iso");
  return is_quasi_iso(pushout_product(f, g), up);
}

ChainMap gluing_map(const GluingCube& c) {
  require(chain_equal(chain_compose(c.f2, c.a), chain_compose(c.b, c.f)), "gluing: X-Y face does not commute");
  require(chain_equal(chain_compose(c.g2, c.a), chain_compose(c.c, c.g)), "gluing: X-T face does not commute");
  Pushout front = pushout(c.f2, c.g2);
  // Z → Z' from the pair (Y → Y' → Z', T → T' → Z').
  ChainMap diff = chain_pair(c.f, chain_negate(c.g));
  auto ck = chain_cokernel(diff);
  return chain_factor_through_epi(ck.q, chain_copair(chain_compose(front.from_b, c.b), chain_compose(front.from_c, c.c)));
}

bool gluing_check(const GluingCube& c, std::size_t up_to) {
  require(is_cofibration(c.f) && is_cofibration(c.f2), "gluing: f, f' must be cofibrations");
  require(is_quasi_iso(c.a, up_to) && is_quasi_iso(c.b, up_to) && is_quasi_iso(c.c, up_to), "gluing: a, b, c must be quasi-isos");
  return is_quasi_iso(gluing_map(c), up_to);
}

// ---- seeded suite ----

namespace {

struct Gen {
  Rng rng;
  Ground ground;
  std::size_t n;

  bool coin(int one_in = 2) { return std::uniform_int_distribution<int>(0, one_in - 1)(rng) == 0; }

  ChainComplex complex(bool acyclic = false, std::size_t max_dim = 2) {
    RandomComplexSpec spec;
    spec.ground = ground;
    spec.top = n;
    spec.max_dim = max_dim;
    spec.acyclic = acyclic;
    return random_complex(rng, spec);
  }
  // X ↣ X ⊕_t Q followed by a change of basis.
  CofibreSeq extension(const ChainComplex& x, const ChainComplex& q) {
    TwistedSum ts = twisted_sum(x, q, random_twist(rng, x, q));
    ChainMap iso = random_iso_from(rng, ts.total);
    return cofibre_sequence(chain_compose(iso, ts.incl));
  }
};

void tally(ExcisiveTally& t, bool hypothesis, bool ok, std::size_t k, const std::string& detail) {
  ++t.instances;
  if (hypothesis) ++t.hypothesis_held;
  if (!ok) {
    if (t.failures == 0) t.witness = "instance " + std::to_string(k) + ": " + detail;
    ++t.failures;
  }
}

}  // namespace

std::vector<ExcisiveTally> run_excisive_suite(Ground ground, std::size_t n, std::uint64_t seed, std::size_t count) {
  Gen g{Rng(seed), ground, n};
  std::vector<ExcisiveTally> out;

  ExcisiveTally susp{"suspension"};
  for (std::size_t k = 0; k < count; ++k) {
    ChainComplex x = g.complex();
    ChainMap f = g.coin() ? random_quasi_iso(g.rng, x) : random_chain_map(g.rng, x, g.complex());
    auto [plain, shifted] = suspension_conservativity(f, n);
    tally(susp, plain, plain == shifted, k, "qi(f)=" + std::to_string(plain) + " qi(Σf)=" + std::to_string(shifted));
  }
  out.push_back(susp);

  ExcisiveTally sat{"saturation"};
  for (std::size_t k = 0; k < count; ++k) {
    ChainComplex x = g.complex(), q = g.complex();
    CofibreSeq top = g.extension(x, q);
    SaturationReport r;
    if (k % 2 == 0) {
      // Pushout ladder along α: X → X'.
      ChainMap alpha = g.coin() ? random_quasi_iso(g.rng, x) : random_chain_map(g.rng, x, g.complex());
      Pushout p = pushout(top.i, alpha);
      CofibreSeq bottom = cofibre_sequence(p.from_c);
      ChainMap beta = p.from_b;
      r = saturation_check(top, bottom, alpha, beta, induced_on_quotients(top, bottom, beta), n);
    } else {
      // Sum ladder: bottom = top ⊕ (A ↣ B → B/A), pieces acyclic or not at random.
      ChainComplex a = g.complex(g.coin()), c = g.complex(g.coin());
      CofibreSeq extra = g.extension(a, c);
      CofibreSeq bottom = cofibre_sequence(chain_direct_sum(top.i, extra.i));
      ChainMap alpha = chain_inj1(x, a);
      ChainMap beta = chain_inj1(top.i.tgt(), extra.i.tgt());
      r = saturation_check(top, bottom, alpha, beta, induced_on_quotients(top, bottom, beta), n);
    }
    bool hyp = r.ab_gives_g.hypothesis || r.ag_gives_b.hypothesis || r.bg_gives_a.hypothesis;
    tally(sat, hyp, r.ok(), k,
          "alpha=" + std::to_string(r.alpha) + " beta=" + std::to_string(r.beta) + " gamma=" + std::to_string(r.gamma));
  }
  out.push_back(sat);

  ExcisiveTally ca{"condition_a"};
  for (std::size_t k = 0; k < count; ++k) {
    ChainComplex x = g.complex(), q = g.complex(k % 4 != 3);
    CofibreSeq s = g.extension(x, q);
    Implication im = condition_a(s.i, n);
    tally(ca, im.hypothesis, im.ok(), k, "quotient acyclic but i not a quasi-iso");
  }
  out.push_back(ca);

  ExcisiveTally cb{"condition_b"};
  for (std::size_t k = 0; k < count; ++k) {
    // Y = X ⊕_t Q, Y' = X ⊕_{t'} Q', h = [[1, κ], [0, ψ]] with t = dκ + t'ψ − κd.
    ChainComplex x = g.complex(), q = g.complex();
    ChainMap psi = g.coin() ? random_quasi_iso(g.rng, q) : random_chain_map(g.rng, q, g.complex());
    const ChainComplex& q2 = psi.tgt();
    std::vector<SparseMatrix> t2 = random_twist(g.rng, x, q2);
    const std::size_t len = std::max({x.length(), q.length(), q2.length()});
    std::vector<SparseMatrix> kappa(len), t(len);
    for (std::size_t d = 0; d < len; ++d) {
      RatMatrix m(x.dim(d), q.dim(d));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = std::uniform_int_distribution<int>(-1, 1)(g.rng);
      kappa[d] = SparseMatrix::from_dense(m);
    }
    for (std::size_t d = 1; d < len; ++d) {
      SparseMatrix tw2 = d < t2.size() ? t2[d] : SparseMatrix(x.dim(d - 1), q2.dim(d));
      t[d] = x.d(d) * kappa[d] + tw2 * psi.at(d) - kappa[d - 1] * q.d(d);
    }
    TwistedSum y = twisted_sum(x, q, t), y2 = twisted_sum(x, q2, t2);
    std::vector<SparseMatrix> h(len);
    for (std::size_t d = 0; d < len; ++d) {
      h[d] = SparseMatrix::vstack(SparseMatrix::hstack(SparseMatrix::identity(x.dim(d)), kappa[d]),
                                  SparseMatrix::hstack(SparseMatrix(q2.dim(d), x.dim(d)), psi.at(d)));
    }
    ChainMap hm(y.total, y2.total, h);
    Implication im = condition_b(y.incl, y2.incl, hm, n);
    tally(cb, im.hypothesis, im.ok(), k, "h/X quasi-iso but h not");
  }
  out.push_back(cb);

  ExcisiveTally hp{"homotopy_pushout"};
  for (std::size_t k = 0; k < count; ++k) {
    ChainComplex a = g.complex();
    CofibreSeq fs = g.extension(a, g.complex());
    ChainMap gm = random_chain_map(g.rng, a, g.complex());
    Pushout p = pushout(fs.i, gm);
    Square s{fs.i, gm, p.from_b, p.from_c};
    if (k % 3 == 1) {
      // Enlarge D by a quasi-iso out of it.
      ChainMap qi = random_quasi_iso(g.rng, p.complex);
      s.k = chain_compose(qi, s.k);
      s.l = chain_compose(qi, s.l);
    } else if (k % 3 == 2) {
      // D = P ⊕_t E with E random; a homotopy pushout only when E is acyclic.
      CofibreSeq e = g.extension(p.complex, g.complex(g.coin()));
      s.k = chain_compose(e.i, s.k);
      s.l = chain_compose(e.i, s.l);
    }
    auto r = homotopy_pushout_check(s, n);
    tally(hp, r.comparison_weq, r.ok(), k,
          "comparison=" + std::to_string(r.comparison_weq) + " parallel=" + std::to_string(r.parallel_cofibre_weq));
  }
  out.push_back(hp);

  ExcisiveTally pp{"pushout_product"};
  {
    Gen small{Rng(seed ^ 0x9e3779b97f4a7c15ULL), ground, std::min<std::size_t>(n, 2)};
    for (std::size_t k = 0; k < count; ++k) {
      ChainComplex x = small.complex(false, 1), v = small.complex(false, 1);
      CofibreSeq f = small.extension(x, small.complex(false, 1));
      ChainMap gq = random_quasi_iso(small.rng, v);
      bool ok = pushout_product_comparison(f.i, gq);
      tally(pp, true, ok, k, "f□g not a quasi-iso");
    }
  }
  out.push_back(pp);

  ExcisiveTally gl{"gluing"};
  for (std::size_t k = 0; k < count; ++k) {
    ChainComplex x = g.complex();
    CofibreSeq f = g.extension(x, g.complex());
    ChainMap gm = random_chain_map(g.rng, x, g.complex());
    ChainMap a = random_quasi_iso(g.rng, x);
    Pushout py = pushout(f.i, a);   // Y → Y', X' ↣ Y'
    Pushout pt = pushout(a, gm);    // X' → T', T → T'
    ChainMap qy = random_quasi_iso(g.rng, py.complex), qt = random_quasi_iso(g.rng, pt.complex);
    GluingCube cube{f.i, gm, chain_compose(qy, py.from_c), chain_compose(qt, pt.from_b), a, chain_compose(qy, py.from_b),
                    chain_compose(qt, pt.from_c)};
    bool ok = gluing_check(cube, n);
    tally(gl, true, ok, k, "Z → Z' not a quasi-iso");
  }
  out.push_back(gl);
  return out;
}

}  // namespace mb
