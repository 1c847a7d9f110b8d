// zenolse: split-step simulation of rogue-wave solutions of the focusing
// nonlinear Schroedinger equation under repeated projective observation.
//
// Exit codes: 0 success, 1 configuration error, 2 numeric failure.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "zenolse/errors.hpp"
#include "zenolse/scenario.hpp"
#include "zenolse/version.hpp"

namespace {

void print_manifest_summary(const zenolse::RunManifest& manifest) {
  std::printf("[%s] %.2fs", manifest.scenario.c_str(),
              manifest.duration_seconds);
  for (const auto& file : manifest.files) {
    std::printf("  %s (%zu rows)", file.path.c_str(), file.rows);
  }
  std::printf("\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zenolse - rogue waves of the nonlinear Schroedinger equation "
               "under frequent projective observation"};
  app.set_version_flag("--version", std::string("zenolse ") + ZENOLSE_VERSION);
  app.require_subcommand(1);

  std::string config_path;
  auto* run_cmd = app.add_subcommand("run", "Run a scenario config file");
  run_cmd->add_option("config", config_path, "Path to the config file")
      ->required();

  std::string validate_path;
  auto* validate_cmd =
      app.add_subcommand("validate", "Parse and validate a config file");
  validate_cmd->add_option("config", validate_path, "Path to the config file")
      ->required();

  std::string preset_name;
  zenolse::PresetOverrides overrides;
  std::string preset_out;
  double preset_dt = 0.0;
  std::size_t preset_grid = 0;
  auto* preset_cmd = app.add_subcommand("preset", "Run a built-in preset");
  preset_cmd->add_option("name", preset_name, "Preset name")->required();
  preset_cmd->add_option("--out", preset_out, "Output directory");
  preset_cmd->add_option("--dt", preset_dt, "Override the time step");
  preset_cmd->add_option("--grid", preset_grid,
                         "Override the number of grid points");
  preset_cmd->add_flag("--full-snapshots", overrides.full_snapshots,
                       "Record every step instead of the default stride");

  auto* list_cmd = app.add_subcommand("list-presets", "List built-in presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*run_cmd) {
      const auto config = zenolse::load_config(config_path);
      const auto manifest = zenolse::run_scenario(config);
      print_manifest_summary(manifest);
    } else if (*validate_cmd) {
      const auto config = zenolse::load_config(validate_path);
      const auto labels = zenolse::validate_config(config);
      std::cout << zenolse::render_config(config);
      if (labels.size() > 1) {
        std::cout << "sweep members:";
        for (const auto& label : labels) std::cout << " " << label;
        std::cout << "\n";
      }
      std::cout << "ok\n";
    } else if (*preset_cmd) {
      if (!preset_out.empty()) overrides.output_dir = preset_out;
      if (preset_dt > 0.0) overrides.dt = preset_dt;
      if (preset_grid > 0) overrides.grid_points = preset_grid;
      const auto manifests = zenolse::run_preset(preset_name, overrides);
      for (const auto& manifest : manifests) print_manifest_summary(manifest);
    } else if (*list_cmd) {
      for (const auto& info : zenolse::list_presets()) {
        std::printf("%-18s %s\n", info.name.c_str(), info.description.c_str());
      }
    }
  } catch (const zenolse::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const zenolse::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
