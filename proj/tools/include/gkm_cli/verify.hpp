#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gkm::cli {

inline constexpr int kSchemaVersion = 1;

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;    // extra context, kept out of the JSON report
  double seconds = 0.0;  // wall time, kept out of the JSON report
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;  // sorted by name
  bool pass() const;
};

/// normalization, identities, orthogonality, genfun, conjugate, markov,
/// sampling, all. "conj" (conjugate + markov) is accepted by run_verify too.
std::vector<std::string> suite_names();

/// Runs every check of the suite on its fixed parameter draws. A given
/// tol_override replaces each check's own threshold.
Report run_verify(const std::string& suite, std::optional<double> tol_override = std::nullopt);

/// {"schema_version": 1, "suite": ..., "pass": ..., "checks": [...]}, with
/// checks in name order. Byte-identical for identical reports.
std::string report_json(const Report& r);

}  // namespace gkm::cli
