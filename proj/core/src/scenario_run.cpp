#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>

#include "zenolse/csv.hpp"
#include "zenolse/errors.hpp"
#include "zenolse/scenario.hpp"
#include "zenolse/spectrum.hpp"
#include "zenolse/version.hpp"

namespace zenolse {

namespace {

namespace fs = std::filesystem;

fs::path resolve_output_dir(const ScenarioConfig& config) {
  if (!config.output.directory.empty()) return config.output.directory;
  if (const char* base = std::getenv("ZENOLSE_OUT"); base && *base) {
    return fs::path(base) / config.name;
  }
  return fs::path("out") / config.name;
}

void append_snapshots(std::vector<ComplexField>& surface,
                      std::vector<ComplexField>&& snapshots) {
  for (auto& snap : snapshots) {
    // A post-projection state at a phase boundary replaces the pre-projection
    // one taken at the same instant.
    if (!surface.empty() &&
        std::abs(surface.back().time - snap.time) <
            1e-12 * std::max(1.0, std::abs(snap.time))) {
      surface.back() = std::move(snap);
    } else {
      surface.push_back(std::move(snap));
    }
  }
}

struct ProbabilityRow {
  std::size_t num_measurements;
  MeasurementRecord record;
  double phase_span;
};

struct MemberOutputs {
  std::vector<ComplexField> surface;
  std::vector<ProbabilityRow> probability;
  ComplexField final_field;
};

MemberOutputs execute_member(const ScenarioConfig& config,
                             std::size_t sweep_count) {
  const auto grid =
      make_grid(config.grid.points, config.grid.x_min, config.grid.x_max);
  SsfmSolver solver(grid);
  MemberOutputs out;

  ComplexField field =
      sample_on_grid(config.initial.solution, grid, config.initial.t0);

  double t_prev = config.initial.t0;
  for (const auto& phase : config.phases) {
    if (const auto* free_phase = std::get_if<FreePhase>(&phase)) {
      auto result = solver.evolve(field, free_phase->t_end, config.solver);
      field = std::move(result.final_field);
      append_snapshots(out.surface, std::move(result.snapshots));
      t_prev = free_phase->t_end;
    } else {
      const auto& zeno_phase = std::get<ZenoPhaseConfig>(phase);
      ZenoSchedule schedule;
      schedule.window = zeno_phase.window;
      schedule.t_start = t_prev;
      schedule.t_end = zeno_phase.t_end;
      schedule.mode = zeno_phase.mode;
      if (zeno_phase.per_step) {
        schedule.num_measurements = commensurate_steps(
            t_prev, zeno_phase.t_end, config.solver.dt, "zeno phase");
      } else if (zeno_phase.measurements.size() > 1) {
        schedule.num_measurements = sweep_count;
      } else {
        schedule.num_measurements = zeno_phase.measurements.front();
      }
      auto result = run_zeno(field, schedule, config.solver, solver);
      field = std::move(result.final_field);
      append_snapshots(out.surface, std::move(result.snapshots));
      const double span = schedule.t_end - schedule.t_start;
      for (const auto& record : result.records) {
        out.probability.push_back(
            {schedule.num_measurements, record, span});
      }
      t_prev = zeno_phase.t_end;
    }
  }
  out.final_field = std::move(field);
  return out;
}

EmittedFile write_field_surface(const fs::path& path,
                                std::span<const ComplexField> snapshots) {
  static const std::vector<std::string> header{"t", "x", "abs_psi", "re_psi",
                                               "im_psi"};
  CsvWriter csv(path, header);
  for (const auto& snap : snapshots) {
    const auto& grid = *snap.grid;
    for (std::size_t i = 0; i < snap.values.size(); ++i) {
      const auto v = snap.values[i];
      const double row[5] = {snap.time, grid.x(i), std::abs(v), v.real(),
                             v.imag()};
      csv.row(row);
    }
  }
  csv.close();
  return {path.filename().string(), csv.rows(), csv.cols()};
}

EmittedFile write_spectrum_surface(const fs::path& path,
                                   std::span<const ComplexField> snapshots) {
  static const std::vector<std::string> header{"t", "k", "db"};
  CsvWriter csv(path, header);
  if (!snapshots.empty()) {
    for (const auto& frame : spectrogram(snapshots)) {
      for (std::size_t i = 0; i < frame.wavenumbers.size(); ++i) {
        const double row[3] = {frame.time, frame.wavenumbers[i],
                               frame.magnitude_db[i]};
        csv.row(row);
      }
    }
  }
  csv.close();
  return {path.filename().string(), csv.rows(), csv.cols()};
}

EmittedFile write_probability_table(const fs::path& path,
                                    std::span<const ProbabilityRow> rows) {
  static const std::vector<std::string> header{
      "N",        "n",          "t_n",
      "survival", "cumulative", "analytic_survival",
      "analytic_cumulative"};
  CsvWriter csv(path, header);
  const double nan = std::nan("");
  for (const auto& row : rows) {
    double analytic = nan;
    double analytic_cum = nan;
    try {
      analytic = analytic_survival(row.phase_span, row.num_measurements);
      analytic_cum =
          std::pow(analytic, static_cast<double>(row.record.index));
    } catch (const NumericError&) {
      // outside the closed-form validity range; leave the columns as nan
    }
    const double values[7] = {static_cast<double>(row.num_measurements),
                              static_cast<double>(row.record.index),
                              row.record.time,
                              row.record.survival,
                              row.record.cumulative,
                              analytic,
                              analytic_cum};
    csv.row(values);
  }
  csv.close();
  return {path.filename().string(), csv.rows(), csv.cols()};
}

}  // namespace

std::string manifest_to_json(const RunManifest& manifest) {
  nlohmann::json j;
  j["tool"] = "zenolse " + std::string(manifest.tool_version);
  j["scenario"] = manifest.scenario;
  j["grid"] = {{"points", manifest.grid_points},
               {"x_min", manifest.grid_x_min},
               {"x_max", manifest.grid_x_max},
               {"dx", manifest.grid_dx}};
  j["solver"] = {{"dt", manifest.dt},
                 {"splitting", manifest.splitting},
                 {"record_every", manifest.record_every}};
  j["duration_seconds"] = manifest.duration_seconds;
  j["config"] = manifest.config_echo;
  auto files = nlohmann::json::array();
  for (const auto& f : manifest.files) {
    files.push_back({{"path", f.path}, {"rows", f.rows}, {"cols", f.cols}});
  }
  j["files"] = files;
  return j.dump(2) + "\n";
}

RunManifest run_scenario(const ScenarioConfig& config, bool write_manifest) {
  const auto start_time = std::chrono::steady_clock::now();
  const auto labels = validate_config(config);

  const fs::path out_dir = resolve_output_dir(config);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    throw ConfigError("cannot create output directory " + out_dir.string() +
                      ": " + ec.message());
  }

  RunManifest manifest;
  manifest.tool_version = version();
  manifest.scenario = config.name;
  manifest.config_echo = render_config(config);
  manifest.grid_points = config.grid.points;
  manifest.grid_x_min = config.grid.x_min;
  manifest.grid_x_max = config.grid.x_max;
  manifest.grid_dx =
      (config.grid.x_max - config.grid.x_min) / static_cast<double>(config.grid.points);
  manifest.dt = config.solver.dt;
  manifest.splitting =
      config.solver.splitting == Splitting::Lie ? "lie" : "strang";
  manifest.record_every = config.solver.record_every;

  for (const auto& label : labels) {
    std::size_t sweep_count = 0;
    if (!label.empty()) {
      sweep_count = std::stoull(label.substr(1));  // labels look like "N100"
    }
    const auto outputs = execute_member(config, sweep_count);
    const std::string suffix = label.empty() ? "" : "_" + label;

    if (config.output.field_surface) {
      manifest.files.push_back(write_field_surface(
          out_dir / ("field" + suffix + ".csv"), outputs.surface));
    }
    if (config.output.spectrum_surface) {
      manifest.files.push_back(write_spectrum_surface(
          out_dir / ("spectrum" + suffix + ".csv"), outputs.surface));
    }
    if (config.output.probability_table) {
      manifest.files.push_back(write_probability_table(
          out_dir / ("probability" + suffix + ".csv"), outputs.probability));
    }
    if (config.output.profile_snapshots) {
      const ComplexField& final_field = outputs.final_field;
      manifest.files.push_back(write_field_surface(
          out_dir / ("profile_final" + suffix + ".csv"),
          std::span<const ComplexField>(&final_field, 1)));
    }
  }

  manifest.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                    start_time)
          .count();
  if (write_manifest) {
    std::ofstream out(out_dir / "manifest.json", std::ios::binary);
    out << manifest_to_json(manifest);
  }
  return manifest;
}

std::vector<RunManifest> run_preset(const std::string& name,
                                    const PresetOverrides& overrides) {
  auto members = preset_configs(name);
  fs::path base;
  if (overrides.output_dir) {
    base = *overrides.output_dir;
  } else if (const char* env = std::getenv("ZENOLSE_OUT"); env && *env) {
    base = fs::path(env) / name;
  } else {
    base = fs::path("out") / name;
  }

  std::vector<RunManifest> manifests;
  for (auto& member : members) {
    if (overrides.dt) member.solver.dt = *overrides.dt;
    if (overrides.grid_points) member.grid.points = *overrides.grid_points;
    if (overrides.full_snapshots) member.solver.record_every = 1;
    member.output.directory =
        members.size() == 1 ? base : base / member.name.substr(name.size() + 1);
    manifests.push_back(run_scenario(member, /*write_manifest=*/false));
  }

  std::error_code ec;
  fs::create_directories(base, ec);
  nlohmann::json combined = nlohmann::json::array();
  for (const auto& m : manifests) {
    combined.push_back(nlohmann::json::parse(manifest_to_json(m)));
  }
  std::ofstream out(base / "manifest.json", std::ios::binary);
  out << nlohmann::json{{"preset", name}, {"members", combined}}.dump(2)
      << "\n";
  return manifests;
}

}  // namespace zenolse
