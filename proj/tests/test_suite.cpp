#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "toroidal/expr.hpp"
#include "toroidal/suite.hpp"

using namespace tor;

namespace {

SuiteConfig only(std::vector<std::string> suites) {
  SuiteConfig c;
  c.suites = std::move(suites);
  return c;
}

const CheckResult* find(const Report& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("expression examples") {
  Toroidal T(SimpleAlgebra::sl2());
  CHECK(eval_expr(T, "bracket[dtilde(1,2), dtilde(2,1)]") == "-3*dtilde(3,3) - 27*mu*kmn(3,3)");
  CHECK(eval_expr(T, "dvar(-1,0)") == "0");
  CHECK(eval_expr(T, "bracket[k0, der(5,5,1)]") == "0");
  CHECK(eval_expr(T, "bracket[loop(1,0,e), loop(-1,0,f)]") == "loop(0,0,h) + k0");
  CHECK(eval_expr(T, "2*mu*loop(1,0,e) - 1/2*kmn(1,1) + 1/2*kmn(1,1)") == "2*mu*loop(1,0,e)");
}

TEST_CASE("expression errors carry positions") {
  Toroidal T(SimpleAlgebra::sl2());
  auto pos = [&](const std::string& e) -> long {
    try {
      eval_expr(T, e);
    } catch (const ExprError& x) {
      return static_cast<long>(x.position());
    }
    return -1;
  };
  CHECK(pos("bracket[loop(0,0,e), ]") == 21);
  CHECK(pos("loop(1,0,x)") == 9);
  CHECK(pos("k0*k1") == 3);
  CHECK(pos("k0 + vac") == 3);
  CHECK(pos("dtilde(1)") == 8);
  CHECK(pos("k0 )") == 3);
  // d0 with a t1-power is outside the algebra acting on V(ell).
  CHECK(pos("act(der(3,3,0), vac)") == 0);
  CHECK(eval_expr(T, "act(k0, vac)") == "ell*|1>");
}

TEST_CASE("config validation") {
  SuiteConfig c;
  CHECK_NOTHROW(c.validate());
  c.range_lo = 2;
  c.range_hi = 1;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SuiteConfig{};
  c.window.zlo = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SuiteConfig{};
  c.suites = {"brackets", "nonsense"};
  CHECK_THROWS_AS(c.validate(), ConfigError);
  CHECK_THROWS_AS(config_from_json("{\"range\": [1]}"), ConfigError);
  CHECK_THROWS_AS(config_from_json("{\"colour\": 1}"), ConfigError);
  CHECK_THROWS_AS(config_from_json("{\"params\": {\"zeta\": 1}}"), ConfigError);
  CHECK_THROWS_AS(config_from_json("not json"), ConfigError);
  CHECK_THROWS_AS(parse_rational("1/0"), ConfigError);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
}

TEST_CASE("config JSON round trip") {
  SuiteConfig c;
  c.range_lo = -2;
  c.window = {-3, 4, -2, 2};
  c.params[Var::mu] = Rational(1, 2);
  c.suites = {"identities", "zhu"};
  c.seed = 7;
  c.fock_mmax = 1;
  const SuiteConfig d = config_from_json(config_to_json(c));
  CHECK(config_to_json(d) == config_to_json(c));
  CHECK(d.params.at(Var::mu) == Rational(1, 2));
  CHECK(d.window.zhi == 4);
}

TEST_CASE("identities selection lists exactly its three checks") {
  const Report r = run_suite(only({"identities"}));
  REQUIRE(r.checks.size() == 3);
  CHECK(r.checks[0].id == "cubic-coefficient");
  CHECK(r.checks[1].id == "falling-binomial");
  CHECK(r.checks[2].id == "newton");
  CHECK(r.all_pass());
  CHECK(r.json().find("wall_time") == std::string::npos);
  SuiteConfig t = only({"identities"});
  t.timing = true;
  CHECK(run_suite(t).json().find("wall_time") != std::string::npos);
}

TEST_CASE("failures carry the first nonzero residual with its index") {
  SuiteConfig c = only({"genfun-square"});
  c.range_lo = -1;
  c.range_hi = 1;
  c.window = {-2, 2, -2, 2};
  const Report r = run_suite(c);
  const CheckResult* item8 = find(r, "item-8");
  REQUIRE(item8 != nullptr);
  CHECK_FALSE(item8->pass);
  CHECK(item8->witness == "m=-1 n=0 z^0 w^0: k0 -> -1");
  CHECK_FALSE(r.all_pass());
  const CheckResult* item1 = find(r, "item-1");
  REQUIRE(item1 != nullptr);
  CHECK(item1->pass);
  CHECK(r.json().find("\"witness\": \"m=-1 n=0 z^0 w^0: k0 -> -1\"") != std::string::npos);
}

TEST_CASE("serial and parallel runs give identical reports") {
  SuiteConfig c = only({"brackets", "identities", "zhu"});
  c.range_lo = -2;
  c.range_hi = 2;
  c.axiom_lo = -1;
  c.axiom_hi = 1;
  c.zhu_samples = 3;
  c.parallel = false;
  const std::string serial = run_suite(c).json();
  c.parallel = true;
  CHECK(run_suite(c).json() == serial);
}

TEST_CASE("specialized parameters propagate") {
  SuiteConfig c = only({"identities"});
  c.params[Var::mu] = Rational(1, 2);
  const Report r = run_suite(c);
  CHECK(r.json().find("\"mu\": \"1/2\"") != std::string::npos);
  Toroidal T(SimpleAlgebra::sl2(), ParamPoly(Rational(1, 2)));
  CHECK(eval_expr(T, "bracket[dtilde(1,2), dtilde(2,1)]") == "-3*dtilde(3,3) - 27/2*kmn(3,3)");
}

TEST_CASE("a corrupted algebra file is rejected before any check runs") {
  const std::string path = "corrupt_test.alg";
  {
    std::ofstream f(path);
    f << "basis e h f\nbracket e f = 1 h\nbracket h e = 3 e\nbracket h f = -2 f\n"
         "form e f = 1\nform h h = 2\ncartan h\nroot alpha e f\n";
  }
  SuiteConfig c = only({"brackets"});
  c.algebra = path;
  CHECK_THROWS_AS(run_suite(c), AlgebraError);
  std::remove(path.c_str());
  c.algebra = "does/not/exist.alg";
  CHECK_THROWS_AS(run_suite(c), AlgebraError);
}

}  // TEST_SUITE
