#include "catch_amalgamated.hpp"

#include "mb/chain/homology.hpp"
#include "mb/chain/random.hpp"
#include "mb/simplicial/simplicial.hpp"

using namespace mb;

namespace {

std::vector<std::size_t> dims_of(const ChainComplex& c) { return c.trimmed().dims(); }

// Tot of a vertical complex C_0 ← C_1 ← …: the oracle for |ΓC|.
ChainComplex total(const std::vector<ChainComplex>& c, const std::vector<ChainMap>& b) {
  std::size_t top = 0;
  for (std::size_t p = 0; p < c.size(); ++p)
    if (c[p].length()) top = std::max(top, p + c[p].length() - 1);
  std::vector<std::size_t> dims(top + 1, 0);
  for (std::size_t p = 0; p < c.size(); ++p)
    for (std::size_t q = 0; q < c[p].length(); ++q) dims[p + q] += c[p].dim(q);
  std::vector<SparseMatrix> d;
  for (std::size_t t = 1; t <= top; ++t) {
    SparseMatrix m(dims[t - 1], dims[t]);
    std::size_t c0 = 0;
    for (std::size_t p = 0; p <= std::min(t, c.size() - 1); ++p) {
      const std::size_t q = t - p;
      std::size_t r_same = 0, r_left = 0;
      for (std::size_t p2 = 0; p2 < p; ++p2) r_same += c[p2].dim(t - 1 - p2);
      for (std::size_t p2 = 0; p2 + 1 < p; ++p2) r_left += c[p2].dim(t - 1 - p2);
      if (q >= 1 && c[p].dim(q) && c[p].dim(q - 1)) m = m + SparseMatrix::embed(c[p].d(q), m.rows(), m.cols(), r_same, c0);
      if (p >= 1 && c[p].dim(q) && c[p - 1].dim(q)) {
        SparseMatrix h = b[p - 1].at(q);
        if (q % 2) h = -h;
        m = m + SparseMatrix::embed(h, m.rows(), m.cols(), r_left, c0);
      }
      c0 += c[p].dim(q);
    }
    d.push_back(m);
  }
  return ChainComplex(c[0].ground(), dims, d);
}

SplitAugmentation perturbed(SplitAugmentation s, std::size_t k) {
  s.extra[k] = chain_scale(s.extra[k], Rational(2));
  return s;
}

}  // namespace

TEST_CASE("surjections and epi-mono factorization", "[simplicial]") {
  for (std::size_t n = 0; n <= 4; ++n) CHECK(surjections(n).size() == (std::size_t(1) << n));
  CHECK(surjections(1) == std::vector<Monotone>{{0, 0}, {0, 1}});
  auto [s, i] = epi_mono({0, 0, 2, 2}, 3);
  CHECK(s == Monotone{0, 0, 1, 1});
  CHECK(i == Monotone{0, 2});
  CHECK_THROWS(epi_mono({0, 4}, 3));
}

TEST_CASE("simplicial identities", "[simplicial]") {
  Rng rng(7);
  for (Ground g : {Ground::Q, Ground::Z}) {
    for (int k = 0; k < 3; ++k) {
      auto x = random_simplicial(rng, g, 3);
      INFO(simplicial_violation(x).value_or(""));
      CHECK(check_simplicial_identities(x));
    }
  }
  CHECK(check_simplicial_identities(constant_simplicial(ChainComplex::disk(Ground::Z, 1), 3)));
  CHECK(check_simplicial_identities(zero_simplicial(Ground::Q, 2)));

  auto x = random_simplicial(rng, Ground::Q, 2, 1, 2);
  // flip one face: some identity must break
  auto bad = x;
  bad.faces[2][1] = chain_scale(bad.faces[2][1], Rational(3));
  bool changed = !chain_equal(bad.faces[2][1], x.faces[2][1]);
  if (changed) CHECK_FALSE(check_simplicial_identities(bad));
  bad = x;
  bad.degens[0][0] = chain_zero(x.levels[0], x.levels[1]);
  if (x.levels[0].trimmed().length()) {
    auto v = simplicial_violation(bad);
    REQUIRE(v.has_value());
    CHECK(v->find("d_i s_j") != std::string::npos);
  }
}

TEST_CASE("operators agree with faces and degeneracies", "[simplicial]") {
  Rng rng(11);
  auto x = random_simplicial(rng, Ground::Z, 3);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      Monotone a;
      for (std::size_t v = 0; v <= n; ++v)
        if (v != i) a.push_back(v);
      CHECK(chain_equal(x.op(a, n), x.faces[n][i]));
    }
  // functoriality on a composite: X(β∘α) = X(α)∘X(β)
  Monotone alpha{0, 0, 1}, beta{1, 3};  // α: [2] → [1], β: [1] → [3]
  Monotone ba{beta[0], beta[0], beta[1]};
  CHECK(chain_equal(x.op(ba, 3), chain_compose(x.op(alpha, 1), x.op(beta, 3))));
}

TEST_CASE("tau has one summand per surjection", "[simplicial]") {
  Rng rng(3);
  auto x = random_simplicial(rng, Ground::Q, 3, 1, 2);
  Tau t = tau(x);
  CHECK(check_simplicial_identities(t.tau));
  CHECK_FALSE(simplicial_map_violation(t.counit).has_value());
  // τ_1 = X_0 ⊕ X_1
  CHECK(dims_of(t.tau.levels[1]) == dims_of(chain_direct_sum(x.levels[0], x.levels[1])));
  // τ_n: summand count by image size is binomial
  for (std::size_t n = 0; n <= 3; ++n) {
    std::size_t expect = 0;
    for (const auto& s : surjections(n)) expect += x.levels[s.back()].dim(0);
    CHECK(t.tau.levels[n].dim(0) == expect);
  }
  // the counit is split by the summand σ = id
  for (std::size_t n = 0; n <= 3; ++n) CHECK(chain_is_surjective(t.counit.at[n]));

  auto y = random_simplicial(rng, Ground::Q, 3, 1, 2);
  auto z = zero_simplicial(Ground::Q, 3);
  SimplicialMap to_zero{x, z, {}};
  for (std::size_t n = 0; n <= 3; ++n) to_zero.at.push_back(chain_zero(x.levels[n], z.levels[n]));
  Tau tz = tau(z);
  auto tf = tau(to_zero, t, tz);
  CHECK_FALSE(simplicial_map_violation(tf).has_value());
  auto id = tau(simplicial_identity(x), t, t);
  CHECK_FALSE(simplicial_map_violation(id).has_value());
  for (std::size_t n = 0; n <= 3; ++n) CHECK(chain_equal(id.at[n], chain_identity(t.tau.levels[n])));
  (void)y;
}

TEST_CASE("realization of constant and Dold-Kan objects", "[simplicial]") {
  ChainComplex a = ChainComplex::disk(Ground::Z, 2);
  CHECK(dims_of(realize(constant_simplicial(a, 3))) == dims_of(a));

  Rng rng(5);
  RandomComplexSpec spec;
  spec.ground = Ground::Z;
  spec.top = 2;
  spec.max_dim = 2;
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<ChainComplex> c;
    for (int k = 0; k < 3; ++k) c.push_back(random_complex(rng, spec).trimmed());
    std::vector<ChainMap> b{random_chain_map(rng, c[1], c[0]), chain_zero(c[2], c[1])};
    auto x = dold_kan(c, b);
    REQUIRE(check_simplicial_identities(x));
    ChainComplex r = realize(x), tot = total(c, b);
    CHECK(dims_of(r) == dims_of(tot));
    for (std::size_t n = 0; n < tot.length(); ++n) CHECK(homology(r, n).str() == homology(tot, n).str());
  }
}

TEST_CASE("totalization agrees with the coend", "[simplicial]") {
  Rng rng(17);
  for (Ground g : {Ground::Q, Ground::Z}) {
    for (std::size_t n : {1, 2, 3}) {
      auto x = random_simplicial(rng, g, n, 1, 1);
      CoendRealization ce = coend_realize(x);
      INFO(to_string(g) << " N=" << n);
      CHECK(chain_is_iso(ce.from_totalization));
    }
  }
  auto c = coend_realize(constant_simplicial(ChainComplex::sphere(Ground::Q, 1), 2));
  CHECK(dims_of(c.complex) == std::vector<std::size_t>{0, 1});
  CHECK_THROWS(coend_realize(zero_simplicial(Ground::Q, 4)));
}

TEST_CASE("simplex chains", "[simplicial]") {
  ChainComplex d2 = simplex_chains(Ground::Z, 2);
  CHECK(d2.dims() == std::vector<std::size_t>{3, 3, 1});
  CHECK(homology(d2, 0).str() == "Z");
  CHECK(is_acyclic(d2, 2) == false);
  CHECK(betti(d2, 1) == 0);
  // the codegeneracy [3] → [2] collapses the top simplex
  auto s = simplex_chains_map(Ground::Z, {0, 1, 1, 2}, 2);
  CHECK(s.at(3).rows() == 0);
}

TEST_CASE("latching objects and Reedy cofibrancy", "[simplicial]") {
  ChainComplex a = ChainComplex::sphere(Ground::Z, 0, 2);
  auto k = constant_simplicial(a, 3);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto l = latching(k, n);
    CHECK(dims_of(l.object) == dims_of(a));
    CHECK(chain_is_iso(l.map));
  }
  Rng rng(23);
  for (Ground g : {Ground::Q, Ground::Z}) {
    auto x = random_simplicial(rng, g, 3, 1, 2);
    CHECK(is_reedy_cofibrant(x, 3));
    CHECK(is_tau_cofibrant(x, 2));
    // L_2 of Γ: the degenerate part of X_2 is X_0 ⊕ X_1 ⊕ X_1
    auto l2 = latching(x, 2);
    CHECK(l2.object.dim(0) == x.levels[0].dim(0) + 2 * (x.levels[1].dim(0) - x.levels[0].dim(0)));

    auto id = simplicial_identity(x);
    CHECK(is_reedy_cofibration(id, 3));
    CHECK(is_tau_cofibration(id, 2));
    auto z = zero_simplicial(g, 3);
    SimplicialMap from_zero{z, x, {}}, to_zero{x, z, {}};
    for (std::size_t n = 0; n <= 3; ++n) {
      from_zero.at.push_back(chain_zero(z.levels[n], x.levels[n]));
      to_zero.at.push_back(chain_zero(x.levels[n], z.levels[n]));
    }
    CHECK(is_reedy_cofibration(from_zero, 3));
    CHECK(is_tau_cofibration(from_zero, 2));
    if (x.levels[0].trimmed().length()) CHECK_FALSE(is_reedy_cofibration(to_zero, 3));
  }
  // multiplication by 2 on a constant ℤ is injective without free cokernel
  ChainComplex zc = ChainComplex::sphere(Ground::Z, 0);
  auto cz = constant_simplicial(zc, 2);
  SimplicialMap twice{cz, cz, {}};
  for (int n = 0; n <= 2; ++n) twice.at.push_back(chain_scale(chain_identity(zc), Rational(2)));
  CHECK_FALSE(is_reedy_cofibration(twice, 2));
}

TEST_CASE("split augmentations and decalage", "[simplicial]") {
  auto c = constant_split(ChainComplex::disk(Ground::Z, 1), 3);
  CHECK(check_split_augmented(c));
  CHECK(contraction_homology(c).pass());

  Rng rng(29);
  for (Ground g : {Ground::Q, Ground::Z}) {
    auto x = random_simplicial(rng, g, 3, 1, 2);
    auto s = decalage(x);
    INFO(split_violation(s).value_or(""));
    CHECK(check_split_augmented(s));
    auto rep = contraction_homology(s);
    INFO((rep.first_failure() ? rep.first_failure()->witness : std::string()));
    CHECK(rep.pass());
    CHECK(rep.records.size() == 3);
  }

  // perturbations name the first broken identity
  auto bad = perturbed(constant_split(ChainComplex::sphere(Ground::Q, 0), 2), 0);
  auto v = split_violation(bad);
  REQUIRE(v.has_value());
  CHECK(v->find("(-1, 0)") != std::string::npos);
  auto bad2 = perturbed(constant_split(ChainComplex::sphere(Ground::Q, 0), 2), 2);
  auto v2 = split_violation(bad2);
  REQUIRE(v2.has_value());
  CHECK(v2->find("(1, 2)") != std::string::npos);
  CHECK_FALSE(contraction_homology(bad2).pass());
  CHECK_THROWS(decalage(zero_simplicial(Ground::Q, 0)));
}

TEST_CASE("fat realization compares to the geometric one", "[simplicial]") {
  Rng rng(31);
  for (Ground g : {Ground::Q, Ground::Z}) {
    auto x = random_simplicial(rng, g, 3, 1, 2);
    FatRealization f = fat_realize(x);
    CHECK(is_quasi_iso(f.comparison, 2));
    CHECK(chain_is_surjective(f.comparison));
  }
}
