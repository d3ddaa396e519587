#ifndef S6_VERIFY_HPP
#define S6_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "s6/sampling.hpp"
#include "s6/serialization.hpp"

namespace s6 {

/// Named tolerances. Order is fixed so reports are reproducible.
class Tolerances {
 public:
  Tolerances();
  double operator[](const std::string& name) const;
  /// Throws std::invalid_argument for unknown names or non-positive values.
  void set(const std::string& name, double value);
  /// Parses "NAME=VAL".
  void set_from_string(const std::string& assignment);
  const std::vector<std::pair<std::string, double>>& entries() const { return v_; }

 private:
  std::vector<std::pair<std::string, double>> v_;
};

struct VerifyConfig {
  std::uint64_t seed = kDefaultSeed;
  int samples = 0;  ///< >0 overrides the sample count of every randomized check
  std::optional<std::string> only;
  Tolerances tol;
};

enum class Relation { at_most, at_least, info };

struct CheckResult {
  std::string name;
  bool passed;
  double value;
  Relation relation;
  double bound;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct VerifyReport {
  std::uint64_t seed;
  Tolerances tol;
  std::vector<SuiteResult> suites;
  Json derivation_audit;  ///< null unless g2_group ran
  bool passed() const;
};

const std::vector<std::string>& suite_names();

/// Runs the selected suites in a fixed order. Each suite draws from its own
/// stream derived from the seed, so --only does not change its numbers.
/// Throws std::invalid_argument for an unknown suite name.
VerifyReport run_verify(const VerifyConfig& cfg);

Json report_json(const VerifyReport& r);
std::string report_text(const VerifyReport& r);
std::string report_csv(const VerifyReport& r);

}  // namespace s6

#endif  // S6_VERIFY_HPP
