#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "kcont/continuation.hpp"
#include "kcont/model.hpp"

namespace kcont {

/// Config file problems, split by phase so the CLI can map exit codes.
class ConfigError : public std::runtime_error {
 public:
  enum class Kind { Unreadable, Invalid };
  ConfigError(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A full scenario: problem constants, g, mesh, window and solver settings.
/// a/b may be specified as multiples of the discrete lambda1h(mesh_n), in
/// which case they are resolved by resolve() once the eigenvalue is known.
struct ScenarioConfig {
  ProblemParams params;
  GFunction g;
  int mesh_n = 511;
  LambdaWindow lambda_window;
  ContinuationSettings continuation;
  ToleranceSettings tolerances;
  std::string output_dir = "out";
  std::optional<std::string> regime;

  std::optional<double> a_lambda1_multiple;
  std::optional<double> b_lambda1_multiple;
  bool resolved = false;
  double lambda1_h = 0.0;

  /// Fills params.a / params.b from the multiples against lambda1h.
  void resolve(double lambda1h);

  /// Canonical JSON of the resolved scenario (output_dir excluded) used for
  /// the manifest hash.
  std::string canonical_json() const;
  /// FNV-1a 64 hash of canonical_json(), as 16 hex digits.
  std::string config_hash() const;
};

/// Parses and validates a scenario document. Unknown keys anywhere are
/// rejected. Throws ConfigError{Unreadable} when the file cannot be opened
/// or is not JSON, ConfigError{Invalid} for schema/invariant violations.
ScenarioConfig load_scenario(const std::string& path);
ScenarioConfig parse_scenario(const std::string& json_text);

}  // namespace kcont
