#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pflat/io.hpp"

namespace pflat {

enum class CheckStatus { Pass, Fail, Undetermined, Error };
std::string_view to_string(CheckStatus s);
/// Error > Fail > Undetermined > Pass.
CheckStatus worst(CheckStatus a, CheckStatus b);
/// 0 pass, 1 fail or error, 2 undetermined.
int exit_code(CheckStatus overall);

/// Recognised check ids in canonical order.
const std::vector<std::string>& check_ids();
/// Human-readable description of what a check verifies.
const std::string& check_citation(const std::string& id);

struct ScenarioOptions {
  std::optional<std::size_t> dim_m;
  std::optional<std::size_t> budget;
  std::optional<long> coeff_bound;
  bool structural_fallback = true;
};

struct Scenario {
  std::string name;
  LieAlgebra algebra;
  std::optional<io::SubalgebraDoc> subalgebra;
  std::optional<io::RepDoc> rep;
  std::optional<io::RawLambdaDoc> raw_lambda;
  std::vector<std::string> checks;
  ScenarioOptions options;
  std::map<std::string, CheckStatus> expected;
  std::optional<std::string> expected_classification;
};

/// Inputs are inline objects or paths relative to `base_dir`. Throws
/// SchemaError for malformed documents, unknown checks and missing inputs.
Scenario parse_scenario(const io::json& doc, const std::filesystem::path& base_dir,
                        const std::string& pointer = "");

/// A scenario file, or a bundle {"scenarios": [...]}.
std::vector<Scenario> load_scenarios(const std::filesystem::path& path);

struct RunOptions {
  std::optional<std::size_t> budget;
  std::optional<long> coeff_bound;
};

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::Error;
  std::string summary;
  io::json witnesses = io::json::object();
  std::vector<std::string> diagnostics;
  double elapsed_ms = 0.0;
};

struct ScenarioReport {
  std::string name;
  std::vector<CheckRecord> checks;
  CheckStatus status = CheckStatus::Pass;
  std::map<std::string, CheckStatus> expected;
  std::optional<std::string> expected_classification;
  std::optional<std::string> classification;
  double elapsed_ms = 0.0;

  /// True when every expected status and classification was reproduced.
  bool expectations_met() const;
};

/// Runs the checks in order. Library errors inside a check become an Error record.
ScenarioReport run_scenario(const Scenario& scenario, const RunOptions& options = {});

io::json report_to_json(const ScenarioReport& report, bool timing);
std::string report_to_text(const ScenarioReport& report, bool timing);

/// Self-contained bundle for a catalog entry: the entry's scenario and one
/// scenario per raw-Λ sample, with expected verdicts.
io::json catalog_bundle(const CatalogEntry& entry);

}  // namespace pflat
