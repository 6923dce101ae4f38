#ifndef TOROIDAL_SUITE_HPP
#define TOROIDAL_SUITE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "toroidal/genfun.hpp"
#include "toroidal/scalar.hpp"

namespace tor {

/// Raised for an invalid SuiteConfig (bad ranges, unknown suite, malformed file).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// @brief Everything a verification run depends on.
///
/// The report is a pure function of this struct: fixing it (in particular the
/// seed) fixes the report bytes, whether or not the run is parallel.
struct SuiteConfig {
  std::string algebra = "sl2";  ///< "sl2" for the built-in algebra, otherwise a file path
  int range_lo = -3;            ///< (m, n) index range of closed forms and generating functions
  int range_hi = 3;
  int axiom_lo = -2;            ///< canonical basis indices for antisymmetry and Jacobi
  int axiom_hi = 2;
  Window window{-5, 5, -5, 5};
  Assignment params;            ///< specialized parameters; absent ones stay formal
  std::vector<std::string> suites;  ///< empty selects every suite
  std::uint64_t seed = 20240611;
  int pbw_samples = 200;        ///< samples per base module
  int fock_mmax = 2;            ///< |m| bound of the realization labels
  int fock_lo = -4;             ///< t0-power window of the realization sweep
  int fock_hi = 4;
  int fock_level = 3;           ///< maximal level of realization samples
  int fock_samples = 4;
  int zhu_samples = 10;
  bool parallel = true;         ///< OpenMP worker pool; false runs the serial reference path
  bool timing = false;          ///< record wall times (makes the report nondeterministic)
  std::string out;              ///< report path; empty for none

  /// Throws ConfigError when a range is empty, a window misses [-1, 1], or a
  /// suite name is unknown.
  void validate() const;
};

/// Suite names in report order.
const std::vector<std::string>& suite_names();

/// Reads a JSON config; keys mirror the SuiteConfig fields.  Throws ConfigError.
SuiteConfig config_from_json(const std::string& text);
std::string config_to_json(const SuiteConfig& c);

/// Parses "a/b" or an integer into a Rational; throws ConfigError.
Rational parse_rational(const std::string& s);

struct CheckResult {
  std::string suite;
  std::string id;
  std::string ref;
  bool pass = true;
  std::string witness;  ///< first nonzero residual with its full index; empty on pass
  double seconds = 0;
};

struct Report {
  SuiteConfig config;
  std::vector<std::string> notes;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  /// Deterministic JSON text; wall times appear only when config.timing is set.
  std::string json() const;
};

/// @brief Runs the selected suites.
///
/// Throws ConfigError for an invalid config and AlgebraError when the algebra
/// file fails validation.
Report run_suite(const SuiteConfig& config);

/// One line per check of the default catalog: "suite id  ref".
std::vector<std::string> suite_catalog(const SuiteConfig& config);

}  // namespace tor

#endif  // TOROIDAL_SUITE_HPP
