// torcalc: verification harness and bracket calculator for full toroidal Lie algebras.
//
// Exit codes: 0 every check passed, 1 some residual was nonzero, 2 usage or
// configuration error (including an algebra file that fails validation).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "toroidal/expr.hpp"
#include "toroidal/suite.hpp"

namespace {

constexpr int kUsageError = 2;

std::pair<int, int> parse_range(const std::string& s, const char* what) {
  const auto colon = s.find(':', 1);
  if (colon == std::string::npos) throw tor::ConfigError(std::string(what) + " must be lo:hi, got '" + s + "'");
  try {
    return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw tor::ConfigError(std::string(what) + " must be lo:hi, got '" + s + "'");
  }
}

tor::Assignment parse_sets(const std::vector<std::string>& sets) {
  tor::Assignment out;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw tor::ConfigError("--set expects param=value, got '" + s + "'");
    auto v = tor::var_from_name(s.substr(0, eq));
    if (!v) throw tor::ConfigError("unknown parameter '" + s.substr(0, eq) + "'");
    out[*v] = tor::parse_rational(s.substr(eq + 1));
  }
  return out;
}

std::shared_ptr<const tor::SimpleAlgebra> algebra(const std::string& src) {
  return src == "sl2" ? tor::SimpleAlgebra::sl2() : tor::SimpleAlgebra::load(src);
}

void print_info() {
  std::cout <<
      R"(Basis conventions
  loop(m0,m1,u)  t0^m0 t1^m1 (x) u, u a basis label of g
  k0, k1         the central elements
  kmn(m,n)       t0^m t1^n k0 / n for n != 0, -t0^m k1 / m for n = 0, m != 0; kmn(0,0) = 0
  der(m0,m1,i)   t0^m0 t1^m1 d_i, i = 0 or 1
  dtilde(m0,m1)  divergence-zero derivation, printed grouped when a result contains it
  dbar(n,m)      derivation of the t0^{-1} d0, d1 variant
  dvar(n,m)      d_{n,m}; dvar(-1,0) = 0 and dvar(0,0) = der(0,0,1)
  vac            vacuum vector of the induced module V(ell); act(x, v) applies x
Generating series
  square: u[z] = sum (t0^n u) z^{-n};  round: u(z) = sum (t0^n u) z^{-n-1}
  k0 series in the Fock realization: t0^j t1^m k0 is the z^{-j} coefficient of ell Y(e^{mk}, z)
Parameters
  mu, ell, alpha, beta, c are formal unless fixed with --set name=value

Suites and checks
)";
  tor::SuiteConfig c;
  for (const auto& line : tor::suite_catalog(c)) std::cout << "  " << line << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness and calculator for full toroidal Lie algebras"};
  app.require_subcommand(1);

  std::vector<std::string> suites;
  std::string range;
  std::string window;
  std::string algebra_src = "sl2";
  std::vector<std::string> sets;
  std::string out;
  std::string config_file;
  std::uint64_t seed = tor::SuiteConfig{}.seed;
  bool serial = false;
  bool timing = false;

  auto* verify = app.add_subcommand("verify", "Run the identity suites and emit a JSON report");
  verify->add_option("--suite", suites, "Suites to run (default: all)")->delimiter(',');
  verify->add_option("--range", range, "(m, n) index range lo:hi, e.g. --range=-3:3");
  verify->add_option("--window", window, "Coefficient window lo:hi in z and w, e.g. --window=-5:5");
  verify->add_option("--algebra", algebra_src, "sl2 or a structure-constants file");
  verify->add_option("--set", sets, "Specialize a parameter, e.g. --set mu=1/2");
  verify->add_option("--out", out, "Report path (default: stdout)");
  verify->add_option("--config", config_file, "JSON config; command-line options override it");
  verify->add_option("--seed", seed, "Sampling seed");
  verify->add_flag("--serial", serial, "Use the serial reference path");
  verify->add_flag("--timing", timing, "Record wall times in the report");

  std::string expr;
  auto* eval = app.add_subcommand("eval", "Evaluate a bracket or action expression");
  eval->add_option("--expr", expr, "Expression, e.g. \"bracket[dtilde(1,2), dtilde(2,1)]\"")->required();
  eval->add_option("--algebra", algebra_src, "sl2 or a structure-constants file");
  eval->add_option("--set", sets, "Specialize mu, e.g. --set mu=1/2");

  app.add_subcommand("info", "Print basis conventions and the suite catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    if (*verify) {
      tor::SuiteConfig c;
      if (!config_file.empty()) {
        std::ifstream f(config_file);
        if (!f) throw tor::ConfigError("cannot read config '" + config_file + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        c = tor::config_from_json(ss.str());
      }
      if (!suites.empty()) c.suites = suites;
      if (!range.empty()) std::tie(c.range_lo, c.range_hi) = parse_range(range, "--range");
      if (!window.empty()) {
        auto [lo, hi] = parse_range(window, "--window");
        c.window = {lo, hi, lo, hi};
      }
      if (verify->count("--algebra") > 0) c.algebra = algebra_src;
      for (const auto& [v, r] : parse_sets(sets)) c.params[v] = r;
      if (verify->count("--seed") > 0) c.seed = seed;
      if (serial) c.parallel = false;
      if (timing) c.timing = true;
      if (!out.empty()) c.out = out;

      const tor::Report rep = tor::run_suite(c);
      if (c.out.empty()) std::cout << rep.json();
      std::size_t failed = 0;
      for (const auto& r : rep.checks) {
        if (r.pass) continue;
        ++failed;
        std::cerr << "FAIL " << r.suite << " " << r.id << ": " << r.witness << "\n";
      }
      std::cerr << rep.checks.size() << " checks, " << rep.checks.size() - failed << " passed, " << failed
                << " failed\n";
      return rep.all_pass() ? 0 : 1;
    }
    if (*eval) {
      const auto asg = parse_sets(sets);
      auto mu = tor::ParamPoly::var(tor::Var::mu);
      if (auto it = asg.find(tor::Var::mu); it != asg.end()) mu = tor::ParamPoly(it->second);
      tor::Toroidal T(algebra(algebra_src), mu);
      std::cout << tor::eval_expr(T, expr) << "\n";
      return 0;
    }
    print_info();
    return 0;
  } catch (const tor::ExprError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const tor::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kUsageError;
  } catch (const tor::AlgebraError& e) {
    std::cerr << "algebra error: " << e.what() << "\n";
    return kUsageError;
  }
}
