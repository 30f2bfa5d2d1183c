#include "catch_amalgamated.hpp"

#include "mb/chain/constructions.hpp"
#include "mb/chain/excisive.hpp"
#include "mb/chain/homology.hpp"
#include "mb/chain/random.hpp"
#include "mb/chain/tensor.hpp"
#include "mb/linalg/rational.hpp"

using namespace mb;

namespace {

SparseMatrix scalar(long v) { return SparseMatrix::from_dense(IntMatrix::from_rows({{v}})); }

// ℤ →(×k) ℤ in degrees 1, 0.
ChainComplex times(Ground g, long k) { return ChainComplex(g, {1, 1}, {scalar(k)}); }

ChainMap scalar_map(const ChainComplex& x, long k) {
  std::vector<SparseMatrix> f;
  for (std::size_t n = 0; n < x.length(); ++n) f.push_back(SparseMatrix::identity(x.dim(n)).scaled(Rational(k)));
  return ChainMap(x, x, f);
}

}  // namespace

TEST_CASE("homology of spheres, disks and x2", "[chain]") {
  ChainComplex s2 = ChainComplex::sphere(Ground::Q, 2);
  CHECK(betti(s2, 2) == 1);
  CHECK(betti(s2, 0) == 0);
  CHECK(betti(s2, 1) == 0);
  CHECK(is_acyclic(ChainComplex::disk(Ground::Q, 2), 4));
  ChainComplex c = times(Ground::Z, 2);
  CHECK(homology(c, 0).str() == "Z/2");
  CHECK(homology(c, 1).is_zero());
  // A nonzero square differential is rejected.
  CHECK_THROWS(ChainComplex(Ground::Q, {1, 1, 1}, {scalar(1), scalar(1)}));
}

TEST_CASE("quasi-isomorphism examples", "[chain]") {
  ChainComplex q0 = ChainComplex::sphere(Ground::Q, 0);
  CHECK(is_quasi_iso(chain_identity(q0), 3));
  CHECK_FALSE(is_quasi_iso(chain_zero(q0, ChainComplex::zero(Ground::Q)), 3));
  CHECK(is_quasi_iso(chain_zero(ChainComplex::disk(Ground::Q, 1), ChainComplex::zero(Ground::Q)), 3));
  // ×2 on ℤ[0] is rationally but not integrally invertible.
  ChainComplex z0 = ChainComplex::sphere(Ground::Z, 0);
  CHECK_FALSE(is_quasi_iso(scalar_map(z0, 2), 2));
  CHECK(is_quasi_iso(scalar_map(q0, 2), 2));
}

TEST_CASE("mapping cone examples", "[chain]") {
  ChainComplex q0 = ChainComplex::sphere(Ground::Q, 0);
  Cone c = mapping_cone(chain_identity(q0));
  CHECK(c.complex.trimmed() == ChainComplex(Ground::Q, {1, 1}, {scalar(1)}));
  CHECK(is_acyclic(c.complex, 3));

  ChainComplex y = times(Ground::Q, 3);
  Cone c0 = mapping_cone(chain_zero(ChainComplex::zero(Ground::Q), y));
  CHECK(c0.complex.trimmed() == y);

  ChainComplex z0 = ChainComplex::sphere(Ground::Z, 0);
  Cone c2 = mapping_cone(scalar_map(z0, 2));
  CHECK(homology(c2.complex, 0).str() == "Z/2");
  CHECK(homology(c2.complex, 1).is_zero());
  CHECK(c2.incl.violation().empty());
  CHECK(c2.proj.violation().empty());
}

TEST_CASE("suspension examples", "[chain]") {
  CHECK(suspension(ChainComplex::sphere(Ground::Q, 0)) == ChainComplex::sphere(Ground::Q, 1));
  CHECK(suspension(ChainComplex::zero(Ground::Q)).is_zero());
  ChainMap f = scalar_map(ChainComplex::sphere(Ground::Z, 0), 2);
  auto [a, b] = suspension_conservativity(f, 3);
  CHECK_FALSE(a);
  CHECK_FALSE(b);
}

TEST_CASE("pushout examples", "[chain]") {
  Rng rng(11);
  RandomComplexSpec spec;
  ChainComplex c = random_complex(rng, spec);
  ChainComplex a = random_complex(rng, spec);
  ChainMap g = random_chain_map(rng, a, c);
  Pushout p = pushout(chain_identity(a), g);
  CHECK(chain_is_iso(p.from_c));

  ChainComplex zero = ChainComplex::zero(Ground::Q);
  Pushout p0 = pushout(chain_zero(zero, zero), chain_zero(zero, c));
  CHECK(chain_is_iso(p0.from_c));

  ChainComplex z0 = ChainComplex::sphere(Ground::Z, 0);
  Pushout p23 = pushout(scalar_map(z0, 2), scalar_map(z0, 3));
  CHECK(homology(p23.complex, 0).str() == "Z");
  CHECK(p23.complex.dim(0) == 1);
}

TEST_CASE("cofibration examples", "[chain]") {
  ChainComplex y = times(Ground::Z, 4);
  CHECK(is_cofibration(chain_zero(ChainComplex::zero(Ground::Z), y)));
  CHECK_FALSE(is_cofibration(scalar_map(ChainComplex::sphere(Ground::Z, 0), 2)));
  ChainComplex q0 = ChainComplex::sphere(Ground::Q, 0);
  ChainMap diag = chain_pair(chain_identity(q0), chain_identity(q0));
  CHECK(is_cofibration(diag));
}

TEST_CASE("saturation examples", "[chain][excisive]") {
  Rng rng(5);
  RandomComplexSpec spec;
  ChainComplex x = random_complex(rng, spec), q = random_complex(rng, spec);
  TwistedSum ts = twisted_sum(x, q, random_twist(rng, x, q));
  CofibreSeq top = cofibre_sequence(ts.incl);
  ChainMap idy = chain_identity(ts.total);

  // α = β = id ⇒ γ quasi-iso.
  auto r = saturation_check(top, top, chain_identity(x), idy, induced_on_quotients(top, top, idy), 4);
  CHECK(r.ab_gives_g.hypothesis);
  CHECK(r.gamma);
  CHECK(r.ok());

  // α a seeded quasi-iso, β = the pushout map, γ an isomorphism.
  for (int k = 0; k < 5; ++k) {
    ChainMap alpha = random_quasi_iso(rng, x);
    Pushout p = pushout(top.i, alpha);
    CofibreSeq bottom = cofibre_sequence(p.from_c);
    auto rr = saturation_check(top, bottom, alpha, p.from_b, induced_on_quotients(top, bottom, p.from_b), 4);
    CHECK(rr.alpha);
    CHECK(rr.beta);
    CHECK(rr.gamma);
  }

  // Vacuous branch: β = ×2 over ℤ on a complex with nonzero homology.
  ChainComplex z0 = ChainComplex::sphere(Ground::Z, 0);
  CofibreSeq zs = cofibre_sequence(chain_zero(ChainComplex::zero(Ground::Z), z0));
  ChainMap beta = scalar_map(z0, 2);
  auto rv = saturation_check(zs, zs, chain_identity(ChainComplex::zero(Ground::Z)), beta, induced_on_quotients(zs, zs, beta), 2);
  CHECK_FALSE(rv.beta);
  CHECK_FALSE(rv.ab_gives_g.hypothesis);
  CHECK_FALSE(rv.ag_gives_b.hypothesis);
  CHECK_FALSE(rv.bg_gives_a.hypothesis);

  // A non-commuting ladder is rejected.
  CHECK_THROWS(saturation_check(top, top, chain_zero(x, x), idy, idy, 4));
}

TEST_CASE("homotopy pushout examples", "[chain][excisive]") {
  Rng rng(7);
  RandomComplexSpec spec;
  ChainComplex a = random_complex(rng, spec), q = random_complex(rng, spec), c = random_complex(rng, spec);
  TwistedSum ts = twisted_sum(a, q, random_twist(rng, a, q));
  ChainMap g = random_chain_map(rng, a, c);
  Pushout p = pushout(ts.incl, g);
  auto r = homotopy_pushout_check(Square{ts.incl, g, p.from_b, p.from_c}, 4);
  CHECK(r.comparison_weq);
  CHECK(r.parallel_cofibre_weq);

  // Corner replaced by C itself with B → C zero: cofibres B/A and 0 differ.
  ChainComplex s0 = ChainComplex::sphere(Ground::Q, 0);
  ChainComplex zero = ChainComplex::zero(Ground::Q);
  Square bad{chain_zero(zero, s0), chain_zero(zero, zero), chain_zero(s0, zero), chain_identity(zero)};
  auto rb = homotopy_pushout_check(bad, 3);
  CHECK_FALSE(rb.comparison_weq);
  CHECK_FALSE(rb.parallel_cofibre_weq);

  // Pushout followed by a quasi-iso.
  ChainMap qi = random_quasi_iso(rng, p.complex);
  auto rq = homotopy_pushout_check(Square{ts.incl, g, chain_compose(qi, p.from_b), chain_compose(qi, p.from_c)}, 4);
  CHECK(rq.comparison_weq);
  CHECK(rq.parallel_cofibre_weq);

  // Non-commuting square.
  CHECK_THROWS(homotopy_pushout_check(Square{ts.incl, g, chain_zero(ts.total, p.complex), p.from_c}, 4));
}

TEST_CASE("pushout-product examples", "[chain][excisive]") {
  ChainComplex zero = ChainComplex::zero(Ground::Q);
  ChainComplex q0 = ChainComplex::sphere(Ground::Q, 0);
  ChainComplex d1 = ChainComplex::disk(Ground::Q, 1);
  CHECK(pushout_product_comparison(chain_zero(zero, q0), chain_identity(q0)));
  ChainMap incl(q0, d1, {SparseMatrix::identity(1)});
  CHECK(pushout_product_comparison(incl, chain_zero(d1, zero)));
  CHECK(pushout_product_comparison(chain_identity(d1), chain_identity(q0)));
  // f□g with an honest non-iso quasi-iso.
  Rng rng(3);
  RandomComplexSpec spec;
  spec.top = 2;
  spec.max_dim = 1;
  ChainComplex v = random_complex(rng, spec);
  CHECK(pushout_product_comparison(incl, random_quasi_iso(rng, v)));
  CHECK_THROWS(pushout_product_comparison(chain_zero(q0, zero), chain_identity(q0)));
}

TEST_CASE("gluing examples", "[chain][excisive]") {
  Rng rng(9);
  RandomComplexSpec spec;
  ChainComplex x = random_complex(rng, spec), q = random_complex(rng, spec), t = random_complex(rng, spec);
  TwistedSum ts = twisted_sum(x, q, random_twist(rng, x, q));
  ChainMap g = random_chain_map(rng, x, t);
  GluingCube same{ts.incl, g, ts.incl, g, chain_identity(x), chain_identity(ts.total), chain_identity(t)};
  CHECK(gluing_check(same, 4));

  // Front square = back square pushed along a seeded quasi-iso.
  ChainMap a = random_quasi_iso(rng, x);
  Pushout py = pushout(ts.incl, a), pt = pushout(a, g);
  GluingCube pushed{ts.incl, g, py.from_c, pt.from_b, a, py.from_b, pt.from_c};
  CHECK(gluing_check(pushed, 4));

  // X = Y: the pushout is T.
  GluingCube degenerate{chain_identity(x), g, chain_identity(x), g, chain_identity(x), chain_identity(x), chain_identity(t)};
  CHECK(gluing_check(degenerate, 4));
}

TEST_CASE("gluing with suspended squares", "[chain][excisive]") {
  Rng rng(21);
  RandomComplexSpec spec;
  spec.top = 3;
  ChainComplex x = random_complex(rng, spec), q = random_complex(rng, spec), t = random_complex(rng, spec);
  TwistedSum ts = twisted_sum(x, q, random_twist(rng, x, q));
  ChainMap g = random_chain_map(rng, x, t);
  // Back: ΣX ↣ ΣY, ΣX → ΣT. Front: the same square with every corner replaced by a quasi-isomorphic one.
  ChainMap sf = suspension(ts.incl), sg = suspension(g);
  ChainMap a = random_quasi_iso(rng, sf.src());
  Pushout py = pushout(sf, a), pt = pushout(a, sg);
  ChainMap qy = random_quasi_iso(rng, py.complex), qt = random_quasi_iso(rng, pt.complex);
  GluingCube cube{sf, sg, chain_compose(qy, py.from_c), chain_compose(qt, pt.from_b), a, chain_compose(qy, py.from_b),
                  chain_compose(qt, pt.from_c)};
  CHECK(gluing_check(cube, 5));
}

TEST_CASE("cone exactness and Euler characteristic", "[chain][property]") {
  Rng rng(1);
  RandomComplexSpec spec;
  for (int k = 0; k < 40; ++k) {
    ChainComplex x = random_complex(rng, spec), y = random_complex(rng, spec);
    ChainMap f = random_chain_map(rng, x, y);
    Cone c = mapping_cone(f);
    CHECK(euler_characteristic(c.complex) == euler_characteristic(y) - euler_characteristic(x));
    // Homological Euler characteristic agrees with the chain-level one.
    long hchi = 0;
    for (std::size_t n = 0; n < c.complex.length(); ++n) hchi += (n % 2 ? -1 : 1) * static_cast<long>(betti(c.complex, n));
    CHECK(hchi == euler_characteristic(c.complex));
  }
}

TEST_CASE("cone long exact sequence ranks", "[chain][property]") {
  // dim H_n(Cone f) = (b_n(Y) − r_n) + (b_{n−1}(X) − r_{n−1}) with r_m = rank H_m(f).
  Rng rng(2);
  RandomComplexSpec spec;
  for (int k = 0; k < 30; ++k) {
    ChainComplex x = random_complex(rng, spec), y = random_complex(rng, spec);
    ChainMap f = random_chain_map(rng, x, y);
    Cone c = mapping_cone(f);
    // rank H_m(f) = rank[f Z_X | B_Y] − rank B_Y
    auto r = [&](std::size_t m) -> long {
      if (x.dim(m) == 0 || y.dim(m) == 0) return 0;
      RatMatrix zx = (m >= 1 && x.dim(m - 1)) ? nullspace(x.d(m).to_dense()) : RatMatrix::identity(x.dim(m));
      RatMatrix by = y.dim(m + 1) ? y.d(m + 1).to_dense() : RatMatrix(y.dim(m), 0);
      return static_cast<long>(rank(RatMatrix::hstack(f.at(m).to_dense() * zx, by))) - static_cast<long>(rank(by));
    };
    for (std::size_t n = 0; n <= spec.top + 1; ++n) {
      long expect = static_cast<long>(betti(y, n)) - r(n);
      if (n >= 1) expect += static_cast<long>(betti(x, n - 1)) - r(n - 1);
      CHECK(static_cast<long>(betti(c.complex, n)) == expect);
    }
  }
}

TEST_CASE("pushout along CX agrees with the algebraic cone", "[chain][property]") {
  Rng rng(4);
  for (Ground gr : {Ground::Q, Ground::Z}) {
    RandomComplexSpec spec;
    spec.ground = gr;
    for (int k = 0; k < 10; ++k) {
      ChainComplex x = random_complex(rng, spec), y = random_complex(rng, spec);
      ChainMap f = random_chain_map(rng, x, y);
      Cone cx = mapping_cone(chain_identity(x));
      Pushout p = pushout(f, cx.incl);
      Cone cf = mapping_cone(f);
      // CX → Cone(f): (x', x) ↦ (x', f x).
      std::vector<SparseMatrix> m;
      for (std::size_t n = 0; n < cx.complex.length(); ++n) {
        std::size_t sx = n ? x.dim(n - 1) : 0;
        m.push_back(SparseMatrix::block_diag(SparseMatrix::identity(sx), f.at(n).rows() == y.dim(n) && f.at(n).cols() == x.dim(n) ? f.at(n) : SparseMatrix(y.dim(n), x.dim(n))));
      }
      ChainMap toc(cx.complex, cf.complex, m);
      ChainMap cmp = chain_factor_through_epi(chain_cokernel(chain_pair(f, chain_negate(cx.incl))).q, chain_copair(cf.incl, toc));
      CHECK(chain_is_iso(cmp));
    }
  }
}

TEST_CASE("seeded excisive suite over Q and Z", "[chain][excisive][property]") {
  for (Ground gr : {Ground::Q, Ground::Z}) {
    auto tallies = run_excisive_suite(gr, 3, 0xC0FFEE, 12);
    for (const auto& t : tallies) {
      INFO(t.property << " " << t.witness);
      CHECK(t.instances == 12);
      CHECK(t.failures == 0);
    }
  }
}

TEST_CASE("condition (a) and (b) on seeded instances", "[chain][excisive][property]") {
  Rng rng(8);
  RandomComplexSpec spec;
  std::size_t held = 0;
  for (int k = 0; k < 20; ++k) {
    ChainComplex x = random_complex(rng, spec);
    RandomComplexSpec acyc = spec;
    acyc.acyclic = true;
    ChainComplex d = random_complex(rng, acyc);
    TwistedSum ts = twisted_sum(x, d, random_twist(rng, x, d));
    Implication im = condition_a(ts.incl, 4);
    held += im.hypothesis;
    CHECK(im.ok());
  }
  CHECK(held == 20);
}

TEST_CASE("random generators produce valid data", "[chain][property]") {
  Rng rng(12);
  for (Ground gr : {Ground::Q, Ground::Z}) {
    RandomComplexSpec spec;
    spec.ground = gr;
    for (int k = 0; k < 20; ++k) {
      ChainComplex x = random_complex(rng, spec), y = random_complex(rng, spec);
      CHECK(random_chain_map(rng, x, y).violation().empty());
      ChainMap qi = random_quasi_iso(rng, x);
      CHECK(is_quasi_iso(qi, 5));
      CHECK(is_cofibration(qi));
      CHECK(chain_is_iso(random_iso_from(rng, x)));
    }
  }
}

TEST_CASE("tensor of complexes", "[chain]") {
  Rng rng(13);
  RandomComplexSpec spec;
  spec.top = 2;
  for (int k = 0; k < 10; ++k) {
    ChainComplex x = random_complex(rng, spec), y = random_complex(rng, spec), z = random_complex(rng, spec);
    ChainComplex xy = chain_tensor(x, y);
    // Künneth over ℚ.
    for (std::size_t n = 0; n < xy.length(); ++n) {
      std::size_t expect = 0;
      for (std::size_t p = 0; p <= n; ++p) expect += betti(x, p) * betti(y, n - p);
      CHECK(betti(xy, n) == expect);
    }
    ChainMap s = chain_symmetry(x, y);
    CHECK(chain_equal(chain_compose(chain_symmetry(y, x), s), chain_identity(xy)));
    ChainMap a = chain_associator(x, y, z);
    CHECK(a.violation().empty());
    CHECK(chain_equal(chain_compose(chain_associator_inv(x, y, z), a), chain_identity(chain_tensor(xy, z))));
    ChainMap f = random_chain_map(rng, x, y);
    CHECK(chain_tensor(f, chain_identity(z)).violation().empty());
  }
}
