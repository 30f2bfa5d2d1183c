#include "catch_amalgamated.hpp"

#include "mb/chain/random.hpp"
#include "mb/cli/suites.hpp"

using namespace mb;

TEST_CASE("matrix and complex JSON round trip", "[io]") {
  Rng rng(5);
  for (Ground g : {Ground::Q, Ground::Z})
    for (int k = 0; k < 10; ++k) {
      auto c = random_complex(rng, RandomComplexSpec{g, 4, 3});
      auto back = complex_from_json(Json::parse(to_json(c).dump()));
      CHECK(back == c);
    }
  SparseMatrix m(2, 3);
  m.set(1, 2, Rational(-3, 4));
  auto j = to_json(m);
  CHECK(j.dump() == R"({"rows":2,"cols":3,"entries":[[1,2,"-3/4"]]})");
  CHECK(matrix_from_json(j) == m);
}

TEST_CASE("simplicial JSON round trip", "[io]") {
  Rng rng(9);
  auto x = random_simplicial(rng, Ground::Q, 3);
  auto back = simplicial_from_json(to_json(x));
  REQUIRE(back.levels.size() == 4);
  for (std::size_t n = 0; n <= 3; ++n) CHECK(back.levels[n] == x.levels[n]);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t i = 0; i <= n; ++i) CHECK(chain_equal(back.faces[n][i], x.faces[n][i]));

  auto c = simplicial_from_json(Json::parse(R"({"N": 2, "constant": {"ground": "Q", "dims": [2]}})"));
  CHECK(c.levels[2].dim(0) == 2);
}

TEST_CASE("malformed input is rejected", "[io]") {
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows": 1})")), InputError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows": 1, "cols": 1, "entries": [[3, 0, "1"]]})")), InputError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows": 1, "cols": 1, "entries": [[0, 0, "1/0"]]})")), InputError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"ground": "F2", "dims": [1]})")), InputError);
  // d∘d ≠ 0
  CHECK_THROWS_AS(complex_from_json(Json::parse(
                      R"({"dims": [1, 1, 1], "d": [{"rows":1,"cols":1,"entries":[[0,0,"1"]]}, {"rows":1,"cols":1,"entries":[[0,0,"1"]]}]})")),
                  InputError);
  // a face that breaks d_0 s_0 = id
  auto x = to_json(constant_simplicial(ChainComplex::sphere(Ground::Q, 0), 2));
  x["faces"][0][0][0]["entries"] = Json::array();
  CHECK_THROWS_AS(simplicial_from_json(x), InputError);
}

TEST_CASE("report lines carry a footer", "[io]") {
  CheckReport rep;
  rep.add("a", "anchor", "x", "exact", true);
  rep.add("b", "anchor", "y", "exact", false, "w");
  auto text = report_jsonl("demo", rep, Json{{"seed", "0x1"}});
  auto nl = std::count(text.begin(), text.end(), '\n');
  CHECK(nl == 3);
  auto last = Json::parse(text.substr(text.rfind('\n', text.size() - 2) + 1));
  CHECK(last["summary"]["failed"] == 1);
  CHECK(last["summary"]["seed"] == "0x1");
}

TEST_CASE("suite configs", "[io][cli]") {
  CHECK(parse_hex("C0FFEE") == 0xC0FFEE);
  CHECK_THROWS_AS(parse_hex("zz"), InputError);
  CHECK_THROWS_AS(make_monad("tensor:Z2", "chain-Q"), InputError);
  CHECK_THROWS_AS(make_monad("homtensor:Z", ""), InputError);
  CHECK(make_monad("tensor:ext", "").chain);
  CHECK(make_monad("tensor:C2", "").fpab);
  CHECK_THROWS_AS(run(SuiteConfig{"nope"}), InputError);

  SuiteConfig bar{"bar", "tensor:ext"};
  auto a = run(bar), b = run(bar);
  CHECK(a.exit_code() == 0);
  CHECK(a.text() == b.text());
  SuiteConfig alg{"bar", "tensoralg"};
  auto r = run(alg);
  REQUIRE(r.exit_code() == 1);
  CHECK(r.report.first_failure()->check == "bar.strength-weak-invertibility");

  SuiteConfig empty{"realize"};
  empty.preset = "empty";
  auto e = run(empty);
  CHECK(e.exit_code() == 0);
  for (const auto& d : e.footer["geometric"]["dims"]) CHECK(d == 0);
}
