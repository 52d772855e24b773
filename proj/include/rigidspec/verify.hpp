#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace rigidspec {

/// Integer ranges keyed by name, parsed from "n=4..10,d=2..4" (a bare value
/// "d=3" is the range 3..3).
class Grid {
 public:
  Grid() = default;
  static Grid parse(const std::string& text);

  bool has(const std::string& key) const { return ranges_.count(key) != 0; }
  std::pair<int, int> range(const std::string& key, std::pair<int, int> fallback) const;
  const std::map<std::string, std::pair<int, int>>& ranges() const { return ranges_; }

 private:
  std::map<std::string, std::pair<int, int>> ranges_;
};

struct VerifyOptions {
  Grid grid;
  int samples = -1;  // negative selects the suite default
  std::uint64_t seed = 1;
  int threads = 1;
};

struct VerifyEntry {
  std::string theorem;  // result name, e.g. "simplex-spectrum"
  nlohmann::json instance;
  nlohmann::json predicted;
  nlohmann::json computed;
  double max_value_error = 0.0;
  bool multiplicity_match = true;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyEntry> entries;
  double wall_seconds = 0.0;

  bool pass() const;
  double worst_error() const;
  std::size_t failures() const;
};

const std::vector<std::string>& verify_suites();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument on
/// an unknown suite or a grid key the suite does not use.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& options);

/// Failing entries are always serialized in full; passing ones are kept
/// unless `failures_only`.
nlohmann::json verify_report_to_json(const VerifyReport& r, bool failures_only = false);

}  // namespace rigidspec
