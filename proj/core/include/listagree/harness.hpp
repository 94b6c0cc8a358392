#pragma once

#include "listagree/complex.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace listagree {

struct ExperimentConfig {
  // complete(n, d) | cycle(m) | wheel(m) | building(p, d) | file(complex_path)
  std::string generator = "complete";
  int n = 5;
  int d = 2;
  int p = 3;
  int m = 6;
  std::string complex_path;

  // list-agreement | direct-sum | coboundary | oracle-agreeing | oracle-coboundary |
  // oracle-direct-sum | building-cycle | coloring | adversary
  std::string tester = "list-agreement";
  // agreeing | corrupted | file(input_path)
  std::string input = "agreeing";
  std::string input_path;
  int k = 1;
  int l = 2;
  // exact | shot | monte-carlo
  std::string mode = "exact";
  std::uint64_t trials = 1000;
  std::uint64_t seed = 20261019;
  // Not part of the report: results do not depend on it.
  unsigned workers = 0;

  bool operator==(const ExperimentConfig& o) const;
};

struct Check {
  std::string name;
  std::string status;  // pass | fail | skipped
  std::string detail;
  bool operator==(const Check&) const = default;
};

struct TrialRow {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  bool accepted = true;
  int branch = 0;
  std::uint64_t entry_reads = 0;
  std::uint64_t face_reads = 0;
  std::uint64_t underlying_reads = 0;
  bool operator==(const TrialRow&) const = default;
};

struct Report {
  ExperimentConfig config;
  // Named measurements in insertion order; rationals as "num/den".
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<Check> checks;
  std::vector<TrialRow> trials;

  bool any_failed() const;
  const std::string* value(const std::string& name) const;
  const Check* check(const std::string& name) const;
  bool operator==(const Report& o) const {
    return config == o.config && values == o.values && checks == o.checks && trials == o.trials;
  }
};

// Builds the configured complex; throws InvalidParams for an unknown generator.
SimplicialComplex build_complex(const ExperimentConfig& config);

// Deterministic in (config, seed). Oracle guards become skipped checks.
Report run_experiment(const ExperimentConfig& config);

// format is "json" or "csv" (one row per trial); throws UnknownFormat.
std::string render_report(const Report& report, const std::string& format);
Report report_from_json(const std::string& text);
// Writes render_report(report, format) to `path`; throws UnknownFormat or IoError.
void emit_report(const Report& report, const std::string& format, const std::string& path);

}  // namespace listagree
