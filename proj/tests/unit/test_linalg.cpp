#include "catch_amalgamated.hpp"

#include "mb/linalg/fpab.hpp"
#include "mb/linalg/rational.hpp"
#include "mb/linalg/smith.hpp"
#include "mb/linalg/sparse.hpp"

#include <numeric>
#include <random>
#include <set>

using namespace mb;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> f(-2, 2);
  for (int k = 0; k < 3 * static_cast<int>(n); ++k) {
    std::size_t a = idx(rng), b = idx(rng);
    if (a != b) u.add_row_multiple(a, b, Integer(f(rng)));
  }
  return u;
}

// gcd of all k×k minors, by brute force over index subsets.
Integer determinantal_divisor(const IntMatrix& a, std::size_t k) {
  std::vector<std::size_t> rows(k), cols(k);
  Integer g = 0;
  std::vector<bool> rsel(a.rows()), csel(a.cols());
  std::fill(rsel.begin(), rsel.begin() + k, true);
  do {
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.begin(), csel.begin() + k, true);
    do {
      std::vector<std::size_t> r, c;
      for (std::size_t i = 0; i < a.rows(); ++i) if (rsel[i]) r.push_back(i);
      for (std::size_t j = 0; j < a.cols(); ++j) if (csel[j]) c.push_back(j);
      Integer d = determinant(a.select_rows(r).select_columns(c));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    } while (std::prev_permutation(csel.begin(), csel.end()));
  } while (std::prev_permutation(rsel.begin(), rsel.end()));
  return g;
}

// Homomorphism count between sums of finite cyclics, by enumerating generator images.
long brute_hom_count(const std::vector<long>& src, const std::vector<long>& tgt) {
  long elements = 1;
  for (long t : tgt) elements *= t;
  long count_per_gen_product = 1;
  for (long a : src) {
    long ok = 0;
    for (long e = 0; e < elements; ++e) {
      long rest = e;
      bool killed = true;
      for (long t : tgt) {
        long coord = rest % t;
        rest /= t;
        if ((coord * a) % t != 0) killed = false;
      }
      ok += killed;
    }
    count_per_gen_product *= ok;
  }
  return count_per_gen_product;
}

}  // namespace

TEST_CASE("smith normal form of small fixed matrices", "[linalg][snf]") {
  auto z = smith_normal_form(IntMatrix(2, 3));
  CHECK(z.D.is_zero());
  CHECK(z.U == IntMatrix::identity(2));
  CHECK(z.V == IntMatrix::identity(3));

  auto id = smith_normal_form(IntMatrix::identity(3));
  CHECK(id.D == IntMatrix::identity(3));

  IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
  auto s = smith_normal_form(a);
  // d1 = gcd of entries, d1·d2 = gcd of 2×2 minors.
  Integer d1 = determinantal_divisor(a, 1);
  Integer d12 = determinantal_divisor(a, 2);
  CHECK(d1 == 2);
  CHECK(d12 == 8);
  CHECK(s.D(0, 0) == d1);
  CHECK(s.D(1, 1) == d12 / d1);
  CHECK(s.U * s.D * s.V == a);
}

TEST_CASE("smith round trip on fuzzed matrices", "[linalg][snf][property]") {
  std::mt19937_64 rng(0xC0FFEE);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix a = random_matrix(rng, dim(rng), dim(rng), -9, 9);
    auto s = smith_normal_form(a);
    REQUIRE(s.U * s.D * s.V == a);
    REQUIRE(s.P * a * s.Q == s.D);
    REQUIRE(abs(determinant(s.U)) == 1);
    REQUIRE(abs(determinant(s.V)) == 1);
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j) REQUIRE(s.D(i, j) == 0);
    for (std::size_t i = 0; i + 1 < s.rank; ++i) REQUIRE(s.D(i + 1, i + 1) % s.D(i, i) == 0);
    for (std::size_t i = 0; i < s.rank; ++i) REQUIRE(s.D(i, i) > 0);
    // invariants against determinantal divisors (small sizes only)
    if (a.rows() <= 4 && a.cols() <= 4) {
      Integer prod = 1;
      for (std::size_t k = 1; k <= s.rank; ++k) {
        prod *= s.D(k - 1, k - 1);
        REQUIRE(determinantal_divisor(a, k) == prod);
      }
    }
  }
}

TEST_CASE("canonical forms", "[linalg][fpab]") {
  CHECK(fp_canonical(FpGroup::free(2)) == FpCanonical{2, {}});
  CHECK(fp_canonical(FpGroup::cyclic(4)) == FpCanonical{0, {Integer(4)}});
  // ℤ/2 ⊕ ℤ/3 ≅ ℤ/6 by CRT
  CHECK(fp_canonical(FpGroup::sum_of_cyclics({2, 3})) == FpCanonical{0, {Integer(6)}});
  CHECK(fp_canonical(FpGroup::sum_of_cyclics({2, 0})).str() == "Z/2+Z");
}

TEST_CASE("canonical form is a presentation invariant", "[linalg][fpab][property]") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = dim(rng), m = dim(rng);
    IntMatrix r = random_matrix(rng, n, m, -5, 5);
    IntMatrix u = random_unimodular(rng, n), v = random_unimodular(rng, m);
    REQUIRE(fp_canonical(FpGroup::presented(r)) == fp_canonical(FpGroup::presented(u * r * v)));
  }
}

TEST_CASE("hom groups", "[linalg][fpab][hom]") {
  FpGroup z = FpGroup::free(1);
  FpGroup z2 = FpGroup::cyclic(2), z4 = FpGroup::cyclic(4);
  FpGroup mixed = FpGroup::sum_of_cyclics({2, 0});
  CHECK(fp_canonical(fp_hom_group(z, mixed)) == fp_canonical(mixed));
  CHECK(fp_canonical(fp_hom_group(z2, z)).is_zero());
  // brute force: homomorphisms ℤ/2 → ℤ/4
  CHECK(brute_hom_count({2}, {4}) == 2);
  CHECK(fp_order(fp_hom_group(z2, z4)) == Integer(2));
  CHECK(fp_canonical(fp_hom_group(z2, z4)) == FpCanonical{0, {Integer(2)}});
}

TEST_CASE("hom counts agree with enumeration", "[linalg][fpab][hom][property]") {
  std::vector<std::vector<long>> groups = {{2}, {4}, {2, 2}, {3}, {6}, {2, 4}, {3, 9}};
  for (const auto& a : groups) {
    for (const auto& b : groups) {
      auto h = fp_hom_group(FpGroup::sum_of_cyclics(a), FpGroup::sum_of_cyclics(b));
      REQUIRE(fp_order(h) == Integer(brute_hom_count(a, b)));
    }
  }
}

TEST_CASE("tensor products", "[linalg][fpab][tensor]") {
  FpGroup z = FpGroup::free(1), z2 = FpGroup::cyclic(2), z3 = FpGroup::cyclic(3), z4 = FpGroup::cyclic(4);
  FpGroup h = FpGroup::sum_of_cyclics({4, 0});
  CHECK(fp_canonical(fp_tensor(z, h)) == fp_canonical(h));
  // ℤ/a ⊗ ℤ/b ≅ ℤ/gcd(a,b)
  CHECK(std::gcd(2, 3) == 1);
  CHECK(fp_canonical(fp_tensor(z2, z3)).is_zero());
  CHECK(fp_canonical(fp_tensor(z2, z4)) == FpCanonical{0, {Integer(std::gcd(2, 4))}});
}

TEST_CASE("tensor-hom adjunction by element counts", "[linalg][fpab][property]") {
  std::vector<FpGroup> finite = {FpGroup::cyclic(2), FpGroup::cyclic(4), FpGroup::sum_of_cyclics({2, 2}),
                                 FpGroup::cyclic(3)};
  for (const auto& g : finite)
    for (const auto& h : finite)
      for (const auto& k : finite) {
        auto lhs = fp_order(fp_hom_group(fp_tensor(g, h), k));
        auto rhs = fp_order(fp_hom_group(g, fp_hom_group(h, k)));
        REQUIRE(lhs == rhs);
      }
}

TEST_CASE("isomorphism detection", "[linalg][fpab][iso]") {
  FpGroup z = FpGroup::free(1), z4 = FpGroup::cyclic(4);
  CHECK(fp_is_iso(fp_identity(z4)));
  CHECK_FALSE(fp_is_iso(fp_morphism(z, z, IntMatrix::from_rows({{2}}))));

  // CRT map ℤ/2 ⊕ ℤ/3 → ℤ/6, (a,b) ↦ 3a + 4b.
  FpGroup src = FpGroup::sum_of_cyclics({2, 3});
  FpGroup z6 = FpGroup::cyclic(6);
  auto f = fp_morphism(src, z6, IntMatrix::from_rows({{3, 4}}));
  std::set<long> images;
  for (long a = 0; a < 2; ++a)
    for (long b = 0; b < 3; ++b) images.insert(((3 * a + 4 * b) % 6 + 6) % 6);
  CHECK(images.size() == 6);  // brute-force bijectivity
  CHECK(fp_is_iso(f));
  auto inv = fp_inverse(f);
  REQUIRE(inv);
  CHECK(fp_equal(fp_compose(*inv, f), fp_identity(src)));
  CHECK(fp_equal(fp_compose(f, *inv), fp_identity(z6)));

  CHECK_THROWS(fp_morphism(FpGroup::cyclic(2), z, IntMatrix::from_rows({{1}})));
}

TEST_CASE("kernels, cokernels and factorizations", "[linalg][fpab]") {
  FpGroup z = FpGroup::free(1);
  auto two = fp_morphism(z, z, IntMatrix::from_rows({{2}}));
  auto ck = fp_cokernel(two);
  CHECK(fp_canonical(ck.group) == FpCanonical{0, {Integer(2)}});
  auto red = fp_morphism(z, FpGroup::cyclic(4), IntMatrix::from_rows({{1}}));
  auto k = fp_kernel(red);
  CHECK(fp_canonical(k.group) == FpCanonical{1, {}});
  CHECK(fp_equal(fp_compose(red, k.inclusion), fp_zero(k.group, red.tgt)));
  // ℤ/4 → ℤ/2 factors ℤ → ℤ/4 → ℤ/2
  auto to2 = fp_morphism(z, FpGroup::cyclic(2), IntMatrix::from_rows({{1}}));
  auto h = fp_factor_through_epi(red, to2);
  CHECK(fp_equal(fp_compose(h, red), to2));
  auto g = fp_morphism(z, z, IntMatrix::from_rows({{6}}));
  auto h2 = fp_factor_through_mono(two, g);
  CHECK(h2.m(0, 0) == 3);
}

TEST_CASE("evaluation and currying", "[linalg][fpab][hom]") {
  FpGroup x = FpGroup::sum_of_cyclics({2, 0}), y = FpGroup::cyclic(4);
  auto hom = fp_hom(y, fp_tensor(x, y));
  auto coev = fp_coev(x, hom);
  auto back = fp_uncurry(coev, hom);
  CHECK(fp_equal(back, fp_identity(fp_tensor(x, y))));
}

TEST_CASE("rational elimination", "[linalg][rational]") {
  RatMatrix a = to_rational(IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}));
  CHECK(rank(a) == 2);
  CHECK(rank(SparseMatrix::from_dense(a)) == 2);
  RatMatrix n = nullspace(a);
  CHECK(n.cols() == 1);
  CHECK((a * n).is_zero());
  auto q = quotient_by(a, 3);
  CHECK(q.q.rows() == 1);
  CHECK((q.q * SparseMatrix::from_dense(a)).is_zero());
  CHECK(q.q * q.s == SparseMatrix::identity(1));
  CHECK(parse_rational("6/-4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("4/2")) == "2");
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("sparse arithmetic matches dense", "[linalg][sparse][property]") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    IntMatrix a = random_matrix(rng, 3, 4, -2, 2), b = random_matrix(rng, 4, 2, -2, 2), c = random_matrix(rng, 3, 4, -2, 2);
    auto sa = SparseMatrix::from_dense(a), sb = SparseMatrix::from_dense(b), sc = SparseMatrix::from_dense(c);
    REQUIRE((sa * sb).to_int_dense() == a * b);
    REQUIRE((sa + sc).to_int_dense() == a + c);
    REQUIRE((sa - sc).to_int_dense() == a - c);
    REQUIRE(SparseMatrix::kron(sa, sb).to_int_dense() == IntMatrix::kron(a, b));
    REQUIRE(sa.transpose().to_int_dense() == a.transpose());
  }
}
