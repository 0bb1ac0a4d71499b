#pragma once

#include "exo/check.hpp"
#include "exo/derivations.hpp"
#include "exo/domains.hpp"
#include "exo/errors.hpp"

#include "json.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace exo {

// Bad config: syntax, schema or parameter constraints. Exit status 2.
struct ConfigError : Error {
  using Error::Error;
};

extern const char* const tool_name;
extern const char* const tool_version;
extern const std::vector<std::string> commands;

inline constexpr std::uint64_t default_seed = 20240611;

struct RunBounds {
  std::optional<int> degree; // contraction slices
  int cap = 50;              // nilpotency
  std::optional<int> x_lo, x_hi, st_degree; // oracle box
  int samples = 100;         // oracle-audit random elements
};

struct NamedDerivation {
  std::string name;
  Derivation derivation;
};

struct RunConfig {
  std::string command;
  std::vector<DomainSpec> specs;
  RunBounds bounds;
  std::uint64_t seed = default_seed;
  // verify-lnd: replaces D1, D2; required for russell specs
  std::vector<NamedDerivation> derivations;
  // verify-domain: weights for the top-component check, keyed by X, Y, Z, S, T
  std::optional<std::map<std::string, int, std::less<>>> weights;
  std::optional<std::string> output;
};

// `command` overrides or must match the config's "command". Throws ConfigError.
RunConfig parse_config(const nlohmann::json& doc, std::string_view command = {});
RunConfig parse_config_text(std::string_view text, std::string_view command = {});

nlohmann::json spec_to_json(const DomainSpec& spec);

struct ReportCheck : CheckResult {
  std::string subject; // spec label
};

struct Report {
  std::string command;
  std::string version;
  std::uint64_t seed = 0;
  std::vector<std::string> subjects;
  std::vector<ReportCheck> checks;
  nlohmann::json results;   // command payload
  double elapsed_seconds = 0; // text output only
  bool all_passed() const;
  int exit_status() const { return all_passed() ? 0 : 1; }
};

// Throws ConfigError for semantic problems found while running (e.g. an
// oracle box that cannot hold the generators).
Report run(const RunConfig& config);

enum class ReportFormat { json, text };

// JSON carries no timing so equal configs give identical bytes.
std::string emit_report(const Report& report, ReportFormat format);
// Inverse of the JSON emitter.
Report report_from_json(const nlohmann::json& doc);

} // namespace exo
