#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zenolse/analytic.hpp"
#include "zenolse/solver.hpp"
#include "zenolse/zeno.hpp"

namespace zenolse {

struct GridConfig {
  std::size_t points = 2048;
  double x_min = -20.0;
  double x_max = 20.0;
};

struct InitialConfig {
  AnalyticSolution solution = Peregrine{};
  double t0 = -5.0;
};

struct FreePhase {
  double t_end = 0.0;
};

struct ZenoPhaseConfig {
  double t_end = 0.0;
  Window window{-7.5, 7.5};
  /// Measurement counts; more than one entry makes this phase a sweep that
  /// fans the whole scenario out into one run per count.
  std::vector<std::size_t> measurements;
  /// Measure once per solver step ("continuous" observation). Overrides
  /// `measurements`.
  bool per_step = false;
  ProjectionMode mode = ProjectionMode::Normalized;
};

using PhaseConfig = std::variant<FreePhase, ZenoPhaseConfig>;

struct OutputConfig {
  std::filesystem::path directory;  ///< empty: resolved by the caller/CLI
  bool field_surface = true;
  bool spectrum_surface = true;
  bool probability_table = true;
  bool profile_snapshots = true;
};

/// Fully deterministic (seed-free) description of one experiment.
struct ScenarioConfig {
  std::string name = "scenario";
  InitialConfig initial;
  GridConfig grid;
  SsfmParams solver{1e-3, Splitting::Lie, 50};
  std::vector<PhaseConfig> phases;
  OutputConfig output;
};

/// Parses the key=value config text (see docs/config reference in README).
/// Unknown keys are rejected. Throws ConfigError with the offending key or
/// phase named.
ScenarioConfig parse_config(const std::string& text,
                            const std::string& origin = "<string>");

/// parse_config over the file contents.
ScenarioConfig load_config(const std::filesystem::path& path);

/// Validates a parsed config (grid, phase ordering, commensurability, sweep
/// constraints) and resolves per-step measurement counts. Returns the list of
/// run labels the config expands to (one per sweep member; {""} when there is
/// no sweep). Throws ConfigError.
std::vector<std::string> validate_config(const ScenarioConfig& config);

/// Canonical key=value rendering of a config (used for the manifest echo and
/// `validate`).
std::string render_config(const ScenarioConfig& config);

struct EmittedFile {
  std::string path;  ///< relative to the output directory
  std::size_t rows = 0;
  std::size_t cols = 0;
};

struct RunManifest {
  std::string tool_version;
  std::string scenario;
  std::string config_echo;
  std::size_t grid_points = 0;
  double grid_x_min = 0.0;
  double grid_x_max = 0.0;
  double grid_dx = 0.0;
  double dt = 0.0;
  std::string splitting;
  std::size_t record_every = 0;
  double duration_seconds = 0.0;
  std::vector<EmittedFile> files;
};

std::string manifest_to_json(const RunManifest& manifest);

/// Executes the scenario: threads the field through the phases, writes the
/// requested CSV outputs under config.output.directory, and returns the
/// manifest (also written as manifest.json unless write_manifest is false).
RunManifest run_scenario(const ScenarioConfig& config,
                         bool write_manifest = true);

struct PresetInfo {
  std::string name;
  std::string description;
};

/// Stable-ordered table of built-in presets.
std::vector<PresetInfo> list_presets();

/// The configs a preset expands to (some presets pair a free-evolution run
/// with an observed run). Throws ConfigError for unknown names.
std::vector<ScenarioConfig> preset_configs(const std::string& name);

struct PresetOverrides {
  std::optional<std::filesystem::path> output_dir;
  std::optional<double> dt;
  std::optional<std::size_t> grid_points;
  bool full_snapshots = false;  ///< record every step
};

/// Runs every member of a preset (applying overrides) and writes a combined
/// manifest.json in the output directory.
std::vector<RunManifest> run_preset(const std::string& name,
                                    const PresetOverrides& overrides);

}  // namespace zenolse
